#pragma once

#include <limits>

#include "alexsnn/spike_train.hpp"

namespace alexsnn {

/// Leak rate alpha in [0, inf]. Infinity is a legal value (memoryless limit).
class LeakRate {
 public:
  /// Throws std::invalid_argument for negative or NaN values.
  explicit LeakRate(double value = 0.0);

  static LeakRate infinite() { return LeakRate(std::numeric_limits<double>::infinity()); }

  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  double value() const { return value_; }

  friend bool operator==(const LeakRate&, const LeakRate&) = default;

 private:
  double value_;
};

/// exp(-alpha * dt), with 1 for alpha = 0 and, for alpha = inf, 0 when
/// dt > 0 and 1 when dt = 0. Throws std::invalid_argument when dt < 0.
double decay_weight(LeakRate alpha, double dt);

/// Left fold a_1 (+) a_2 (+) ... (+) a_n, where x (+) y = decay * x + y.
/// The empty fold is 0.
double oplus_fold(const SpikeTrain& train, LeakRate alpha);

/// Leaky Alexiewicz norm: the largest magnitude of the decayed running sum
/// over all prefixes ending at a spike. One pass, constant extra space.
double alexiewicz_norm(const SpikeTrain& train, LeakRate alpha);

}  // namespace alexsnn
