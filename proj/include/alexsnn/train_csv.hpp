#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alexsnn/spike_train.hpp"

namespace alexsnn {

/// Raised for malformed input files; the message names the row (header = 1).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that reads back to exactly the same double.
std::string format_double(double x);
/// Strict decimal parse of a whole field (surrounding blanks allowed).
/// Returns false for anything else, including nan and inf.
bool parse_double(std::string_view field, double& out);

/// Spike-train CSV: header `time,amplitude`, one spike per row, any row order.
SpikeTrain read_train_csv(std::istream& in);
SpikeTrain read_train_csv(const std::filesystem::path& path);
void write_train_csv(const SpikeTrain& train, std::ostream& out);
void write_train_csv(const SpikeTrain& train, const std::filesystem::path& path);

/// Single-column CSV with header `time`, used for membrane-trace sample times.
std::vector<double> read_times_csv(std::istream& in);
std::vector<double> read_times_csv(const std::filesystem::path& path);

}  // namespace alexsnn
