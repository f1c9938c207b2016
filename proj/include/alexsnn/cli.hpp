#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "alexsnn/alexiewicz.hpp"
#include "alexsnn/experiments.hpp"
#include "alexsnn/lif.hpp"
#include "alexsnn/selftest.hpp"

namespace alexsnn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormCommand {
  LeakRate alpha;
  std::filesystem::path train;
};

struct LifCommand {
  LifConfig config;
  std::filesystem::path train;
  std::optional<std::filesystem::path> trace_times;
  std::filesystem::path trace_out = "trace.csv";
};

struct QuantErrorCommand {
  LifConfig config;
  std::filesystem::path train;
};

struct ExperimentCommand {
  ExperimentConfig config;
  std::filesystem::path config_path;
  std::filesystem::path out_dir = ".";
  std::optional<std::filesystem::path> svg_dir;
  unsigned threads = 0;
};

struct SelftestCommand {
  FuzzOptions options;
};

struct HelpCommand {
  std::string text;
};

using Command = std::variant<NormCommand, LifCommand, QuantErrorCommand, ExperimentCommand,
                             SelftestCommand, HelpCommand>;

/// Parses arguments (without the program name). The experiment config file
/// is read and validated here so that no computation starts on bad input.
/// Throws UsageError with a one-line message.
Command parse_args(const std::vector<std::string>& args);

/// Runs a parsed command; returns the process exit code.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_args + run with diagnostics on `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexsnn::cli
