#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "alexsnn/alexiewicz.hpp"
#include "alexsnn/spike_train.hpp"

namespace alexsnn {

/// Re-initialization applied when the membrane potential reaches threshold.
enum class ResetMode { kToZero, kBySubtraction, kToMod };

/// CLI spelling: "zero", "subtract", "mod".
std::string_view to_string(ResetMode mode);
/// Inverse of to_string; std::nullopt for anything else.
std::optional<ResetMode> parse_reset_mode(std::string_view name);

struct LifConfig {
  /// Throws std::invalid_argument unless threshold is positive and finite.
  LifConfig(double threshold, LeakRate alpha, ResetMode mode);

  double threshold;
  LeakRate alpha;
  ResetMode mode;
};

struct MembraneState {
  double potential = 0.0;
  double last_event_time = 0.0;
};

/// sgn(x) * floor(|x|). Throws std::invalid_argument for non-finite x and
/// std::out_of_range when the result does not fit in 64 bits.
std::int64_t truncate_quantize(double x);

/// Event-driven LIF neuron. Output spikes can only occur at input event
/// times because the potential's magnitude never grows between events.
class LifNeuron {
 public:
  explicit LifNeuron(LifConfig config, double start_time = 0.0);

  /// Integrates one input spike and applies the reset rule. Returns the
  /// emitted spike, if any. Throws std::invalid_argument if the spike lies
  /// before the last processed event.
  std::optional<Spike> integrate(const Spike& input);

  /// Free decay of the current state to time t >= last_event_time.
  double potential_at(double t) const;

  const MembraneState& state() const { return state_; }
  const LifConfig& config() const { return config_; }

 private:
  LifConfig config_;
  MembraneState state_;
};

/// Applies the LIF operator to a whole train.
SpikeTrain lif_transform(const SpikeTrain& train, const LifConfig& config);

/// Reference definition of reset-to-mod: at every event, subtract sgn(u) * threshold
/// repeatedly while |u| >= threshold, then merge the emissions into one spike.
/// Cost grows with |u| / threshold.
SpikeTrain cascade_oracle(const SpikeTrain& train, double threshold, LeakRate alpha);

/// Alexiewicz norm (at the configured leak rate) of LIF(train) - train.
double quantization_error(const SpikeTrain& train, const LifConfig& config);

/// Potential after all events at or before each sample time, decayed to that
/// time. sample_times must be sorted ascending (std::invalid_argument
/// otherwise).
std::vector<std::pair<double, double>> membrane_trace(const SpikeTrain& train,
                                                      const LifConfig& config,
                                                      std::span<const double> sample_times);

}  // namespace alexsnn
