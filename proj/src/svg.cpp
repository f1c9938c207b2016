#include "alexsnn/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace alexsnn {

namespace {

constexpr double kWidth = 480;
constexpr double kHeight = 320;
constexpr double kLeft = 56;
constexpr double kRight = 16;
constexpr double kTop = 36;
constexpr double kBottom = 44;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

std::string boxplot_svg(std::span<const CellSummary> cells, double threshold,
                        const std::string& title) {
  double y_max = threshold;
  for (const CellSummary& c : cells) y_max = std::max(y_max, c.max);
  y_max *= 1.1;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto y = [&](double v) { return kTop + plot_h * (1.0 - v / y_max); };
  const double slot = cells.empty() ? plot_w : plot_w / static_cast<double>(cells.size());
  const double box_w = slot * 0.5;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"20\" font-family=\"sans-serif\" "
      << "font-size=\"13\" text-anchor=\"middle\">" << title << "</text>\n";

  // axes
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
      << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = y_max * i / 4.0;
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y(v) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" << label(v)
        << "</text>\n";
  }
  svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 8)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
      << "number of spikes</text>\n";
  svg << "<text x=\"14\" y=\"" << num(kTop + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 14 " << num(kTop + plot_h / 2) << ")\">error</text>\n";

  svg << "<line x1=\"" << kLeft << "\" y1=\"" << num(y(threshold)) << "\" x2=\""
      << num(kLeft + plot_w) << "\" y2=\"" << num(y(threshold))
      << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const BoxStats& b = cells[i].box;
    const double cx = kLeft + slot * (static_cast<double>(i) + 0.5);
    const double x0 = cx - box_w / 2;
    svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(y(b.whisker_low)) << "\" x2=\""
        << num(cx) << "\" y2=\"" << num(y(b.whisker_high)) << "\" stroke=\"black\"/>\n";
    for (double w : {b.whisker_low, b.whisker_high}) {
      svg << "<line x1=\"" << num(cx - box_w / 4) << "\" y1=\"" << num(y(w)) << "\" x2=\""
          << num(cx + box_w / 4) << "\" y2=\"" << num(y(w)) << "\" stroke=\"black\"/>\n";
    }
    svg << "<rect x=\"" << num(x0) << "\" y=\"" << num(y(b.q3)) << "\" width=\"" << num(box_w)
        << "\" height=\"" << num(std::max(0.0, y(b.q1) - y(b.q3)))
        << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y(b.median)) << "\" x2=\""
        << num(x0 + box_w) << "\" y2=\"" << num(y(b.median))
        << "\" stroke=\"#d94801\" stroke-width=\"2\"/>\n";
    // outliers as small squares
    for (double o : b.outliers) {
      svg << "<rect x=\"" << num(cx - 2) << "\" y=\"" << num(y(o) - 2)
          << "\" width=\"4\" height=\"4\" fill=\"none\" stroke=\"black\"/>\n";
    }
    svg << "<text x=\"" << num(cx) << "\" y=\"" << num(kTop + plot_h + 14)
        << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">"
        << cells[i].n << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace alexsnn
