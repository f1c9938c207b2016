#include "alexsnn/experiment_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "alexsnn/svg.hpp"

namespace alexsnn {

using nlohmann::json;

std::string format_alpha(LeakRate alpha) {
  return alpha.is_infinite() ? "inf" : format_double(alpha.value());
}

std::optional<LeakRate> parse_alpha(std::string_view text) {
  if (text == "inf") return LeakRate::infinite();
  double v;
  if (!parse_double(text, v) || v < 0.0) return std::nullopt;
  return LeakRate(v);
}

namespace {

std::size_t count_from_json(const json& j, const char* key) {
  if (!j.is_number_unsigned()) {
    throw FormatError(std::string("config: ") + key + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

LeakRate alpha_from_json(const json& j) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (v >= 0.0) return LeakRate(v);
  } else if (j.is_string()) {
    if (auto a = parse_alpha(j.get<std::string>())) return *a;
  }
  throw FormatError("config: alphas entries must be non-negative numbers or \"inf\", got " +
                    j.dump());
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("config: top level must be an object");

  ExperimentConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "runs") {
        config.runs = count_from_json(value, "runs");
      } else if (key == "spike_counts") {
        if (!value.is_array()) throw FormatError("config: spike_counts must be an array");
        config.spike_counts.clear();
        for (const json& n : value) config.spike_counts.push_back(count_from_json(n, "spike_counts"));
      } else if (key == "amplitude_half_range") {
        config.amplitude_half_range = value.get<double>();
      } else if (key == "threshold") {
        config.threshold = value.get<double>();
      } else if (key == "alphas") {
        if (!value.is_array()) throw FormatError("config: alphas must be an array");
        config.alphas.clear();
        for (const json& a : value) config.alphas.push_back(alpha_from_json(a));
      } else if (key == "modes") {
        config.modes.clear();
        for (const auto& name : value.get<std::vector<std::string>>()) {
          const auto mode = parse_reset_mode(name);
          if (!mode) throw FormatError("config: unknown mode '" + name + "'");
          config.modes.push_back(*mode);
        }
      } else if (key == "seed") {
        if (!value.is_number_unsigned()) throw FormatError("config: seed must be unsigned");
        config.seed = value.get<std::uint64_t>();
      } else if (key == "spacing") {
        const auto s = parse_spacing(value.get<std::string>());
        if (!s) throw FormatError("config: spacing must be \"unit\" or \"poisson\"");
        config.spacing = *s;
      } else if (key == "amplitude_law") {
        const auto law = parse_amplitude_law(value.get<std::string>());
        if (!law) throw FormatError("config: amplitude_law must be \"uniform\" or \"gauss\"");
        config.amplitude_law = *law;
      } else {
        throw FormatError("config: unknown field '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return config;
}

ExperimentConfig read_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_experiment_config(text.str());
}

void write_results_csv(std::span<const TrialRecord> records, std::ostream& out) {
  out << "mode,alpha,n,run,error_norm\n";
  for (const TrialRecord& r : records) {
    out << to_string(r.mode) << ',' << format_alpha(r.alpha) << ',' << r.n << ',' << r.run << ','
        << format_double(r.error_norm) << '\n';
  }
}

namespace {

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_stats_csv(std::span<const CellSummary> cells, std::ostream& out) {
  out << "mode,alpha,n,n_samples,mean,max,violations,median,q1,q3,whisker_low,whisker_high,"
         "n_outliers\n";
  for (const CellSummary& c : cells) {
    out << to_string(c.mode) << ',' << format_alpha(c.alpha) << ',' << c.n << ','
        << c.box.n_samples << ',' << g12(c.mean) << ',' << g12(c.max) << ',' << c.violations
        << ',' << g12(c.box.median) << ',' << g12(c.box.q1) << ',' << g12(c.box.q3) << ','
        << g12(c.box.whisker_low) << ',' << g12(c.box.whisker_high) << ','
        << c.box.outliers.size() << '\n';
  }
}

void write_experiment_outputs(const ExperimentConfig& config,
                              std::span<const TrialRecord> records,
                              const std::filesystem::path& out_dir,
                              const std::optional<std::filesystem::path>& svg_dir) {
  std::filesystem::create_directories(out_dir);
  const auto cells = summarize(records, config.threshold);
  {
    std::ofstream out(out_dir / "results.csv", std::ios::binary);
    if (!out) throw FormatError("cannot write " + (out_dir / "results.csv").string());
    write_results_csv(records, out);
  }
  {
    std::ofstream out(out_dir / "stats.csv", std::ios::binary);
    if (!out) throw FormatError("cannot write " + (out_dir / "stats.csv").string());
    write_stats_csv(cells, out);
  }
  if (!svg_dir) return;

  std::filesystem::create_directories(*svg_dir);
  const std::size_t per_group = config.spike_counts.size();
  for (std::size_t start = 0; start + per_group <= cells.size(); start += per_group) {
    const CellSummary& head = cells[start];
    const std::string mode(to_string(head.mode));
    const std::string alpha = format_alpha(head.alpha);
    const std::string title = "reset-" + mode + ", alpha = " + alpha +
                              ", amplitudes in [-" + g12(config.amplitude_half_range) +
                              ", " + g12(config.amplitude_half_range) + "] x threshold";
    const auto path = *svg_dir / ("box_" + mode + "_alpha_" + alpha + ".svg");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out << boxplot_svg(std::span(cells).subspan(start, per_group), config.threshold, title);
  }
}

}  // namespace alexsnn
