#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "alexsnn/alexiewicz.hpp"
#include "alexsnn/lif.hpp"
#include "alexsnn/spike_train.hpp"

namespace alexsnn {

/// Inter-spike timing: unit grid t = 0..n-1, or exponential gaps of rate 1.
enum class Spacing { kUnit, kPoisson };
/// Amplitude law. kGauss uses sigma = half_range / 2, truncated to the range.
enum class AmplitudeLaw { kUniform, kGauss };

std::string_view to_string(Spacing spacing);
std::optional<Spacing> parse_spacing(std::string_view name);
std::string_view to_string(AmplitudeLaw law);
std::optional<AmplitudeLaw> parse_amplitude_law(std::string_view name);

struct ExperimentConfig {
  std::size_t runs = 100;
  std::vector<std::size_t> spike_counts = {10, 50, 100, 500, 1000};
  /// Amplitudes are drawn from [-r * threshold, r * threshold].
  double amplitude_half_range = 1.0;
  double threshold = 1.0;
  std::vector<LeakRate> alphas = {LeakRate(1.0), LeakRate(0.1)};
  std::vector<ResetMode> modes = {ResetMode::kToMod, ResetMode::kBySubtraction,
                                  ResetMode::kToZero};
  std::uint64_t seed = 0;
  Spacing spacing = Spacing::kUnit;
  AmplitudeLaw amplitude_law = AmplitudeLaw::kUniform;

  /// Throws std::invalid_argument if any field is out of its domain.
  void validate() const;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of the substream for one trial cell. Each cell is reproducible on
/// its own, independently of every other cell.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t mode_index, std::size_t alpha_index,
                         std::size_t n, std::size_t run);

/// n spikes with i.i.d. amplitudes in [-half_range, half_range], fully
/// determined by seed.
SpikeTrain random_train(std::size_t n, double half_range, std::uint64_t seed,
                        Spacing spacing = Spacing::kUnit,
                        AmplitudeLaw law = AmplitudeLaw::kUniform);

struct TrialRecord {
  ResetMode mode;
  LeakRate alpha;
  std::size_t n;
  std::size_t run;
  double error_norm;
};

/// Quantization error for every (mode, alpha, n, run), ordered canonically in
/// config order. Cells run on `threads` workers (0 = hardware concurrency);
/// the result does not depend on the thread count.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config, unsigned threads = 0);

struct BoxStats {
  std::size_t n_samples = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;
};

/// Quartiles by linear interpolation between order statistics; whiskers at
/// the most extreme samples within 1.5 IQR of the box. Throws
/// std::invalid_argument on empty input.
BoxStats box_stats(std::span<const double> samples);

struct CellSummary {
  ResetMode mode;
  LeakRate alpha;
  std::size_t n;
  double mean;
  double max;
  /// Trials whose error reached the threshold.
  std::size_t violations;
  BoxStats box;
};

/// One summary per (mode, alpha, n) cell, in the same order as the records.
std::vector<CellSummary> summarize(std::span<const TrialRecord> records, double threshold);

}  // namespace alexsnn
