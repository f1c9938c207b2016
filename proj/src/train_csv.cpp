#include "alexsnn/train_csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace alexsnn {

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

// Reads rows of `columns` numeric fields after the expected header line.
std::vector<std::vector<double>> read_rows(std::istream& in, std::string_view header,
                                           std::size_t columns) {
  std::string line;
  const bool got = static_cast<bool>(std::getline(in, line));
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (!got || trim(line) != header) {
    throw FormatError("row 1: expected header '" + std::string(header) + "'");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t row = 2; std::getline(in, line); ++row) {
    if (trim(line).empty()) continue;
    std::vector<double> values;
    std::string_view rest = line;
    for (std::size_t c = 0; c < columns; ++c) {
      const auto comma = rest.find(',');
      const bool last = c + 1 == columns;
      if (last != (comma == std::string_view::npos)) {
        throw FormatError("row " + std::to_string(row) + ": expected " +
                          std::to_string(columns) + " fields");
      }
      double v;
      if (!parse_double(rest.substr(0, comma), v)) {
        throw FormatError("row " + std::to_string(row) + ": not a finite number: '" +
                          std::string(trim(rest.substr(0, comma))) + "'");
      }
      values.push_back(v);
      if (!last) rest = rest.substr(comma + 1);
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

}  // namespace

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size() && std::isfinite(out);
}

SpikeTrain read_train_csv(std::istream& in) {
  std::vector<Spike> events;
  for (const auto& row : read_rows(in, "time,amplitude", 2)) events.push_back({row[0], row[1]});
  return SpikeTrain::from_events(events);
}

SpikeTrain read_train_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_train_csv(in);
}

void write_train_csv(const SpikeTrain& train, std::ostream& out) {
  out << "time,amplitude\n";
  for (const Spike& s : train) out << format_double(s.time) << ',' << format_double(s.amplitude) << '\n';
}

void write_train_csv(const SpikeTrain& train, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  write_train_csv(train, out);
}

std::vector<double> read_times_csv(std::istream& in) {
  std::vector<double> times;
  for (const auto& row : read_rows(in, "time", 1)) times.push_back(row[0]);
  return times;
}

std::vector<double> read_times_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_times_csv(in);
}

}  // namespace alexsnn
