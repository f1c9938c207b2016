#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alexsnn/alexiewicz.hpp"
#include "alexsnn/lif.hpp"

namespace alexsnn {

struct FuzzOptions {
  std::size_t trains = 10000;
  std::size_t max_spikes = 1000;
  /// In units of the threshold.
  double half_range = 1.5;
  std::vector<LeakRate> alphas = {LeakRate(0.0), LeakRate(0.1), LeakRate(1.0), LeakRate(10.0),
                                  LeakRate::infinite()};
  std::vector<double> thresholds = {0.5, 1.0, 2.0};
  /// Mode whose quantization error is checked against the bound.
  ResetMode mode = ResetMode::kToMod;
  std::uint64_t seed = 0;
  /// Fuzz only the train with this seed (as printed in a failure report).
  std::optional<std::uint64_t> replay;
  unsigned threads = 0;
};

struct FuzzReport {
  std::size_t trains = 0;
  std::size_t evaluations = 0;
  std::size_t output_spikes = 0;
  std::size_t bound_violations = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t multiple_violations = 0;
  /// Largest error / threshold seen.
  double max_error_ratio = 0.0;
  /// Seed of the first train (in index order) with any violation.
  std::optional<std::uint64_t> first_failing_seed;

  std::size_t violations() const {
    return bound_violations + oracle_mismatches + multiple_violations;
  }
};

/// Seed of the i-th fuzz train.
std::uint64_t fuzz_train_seed(std::uint64_t seed, std::size_t index);

/// For every random train and every (alpha, threshold) pair: checks the
/// quantization bound for options.mode, the equivalence of reset-to-mod with
/// the cascaded-subtraction oracle (times exact, amplitudes within 1e-9), and
/// that every reset-to-mod amplitude is a nonzero multiple of the threshold
/// within 1e-9 * threshold.
FuzzReport run_theorem_fuzz(const FuzzOptions& options);

}  // namespace alexsnn
