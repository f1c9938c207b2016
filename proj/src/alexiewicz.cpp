#include "alexsnn/alexiewicz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alexsnn {

LeakRate::LeakRate(double value) : value_(value) {
  if (std::isnan(value) || value < 0.0) {
    throw std::invalid_argument("leak rate must be non-negative");
  }
}

double decay_weight(LeakRate alpha, double dt) {
  if (!(dt >= 0.0)) throw std::invalid_argument("decay_weight: dt must be non-negative");
  if (alpha.value() == 0.0 || dt == 0.0) return 1.0;
  if (alpha.is_infinite()) return 0.0;
  return std::exp(-alpha.value() * dt);
}

double oplus_fold(const SpikeTrain& train, LeakRate alpha) {
  double s = 0.0;
  double prev = train.empty() ? 0.0 : train.front().time;
  for (const Spike& spike : train) {
    s = decay_weight(alpha, spike.time - prev) * s + spike.amplitude;
    prev = spike.time;
  }
  return s;
}

double alexiewicz_norm(const SpikeTrain& train, LeakRate alpha) {
  double s = 0.0;
  double norm = 0.0;
  double prev = train.empty() ? 0.0 : train.front().time;
  for (const Spike& spike : train) {
    s = decay_weight(alpha, spike.time - prev) * s + spike.amplitude;
    prev = spike.time;
    norm = std::max(norm, std::abs(s));
  }
  return norm;
}

}  // namespace alexsnn
