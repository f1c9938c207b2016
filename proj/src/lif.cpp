#include "alexsnn/lif.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alexsnn {

namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

std::string_view to_string(ResetMode mode) {
  switch (mode) {
    case ResetMode::kToZero:
      return "zero";
    case ResetMode::kBySubtraction:
      return "subtract";
    case ResetMode::kToMod:
      return "mod";
  }
  return "?";
}

std::optional<ResetMode> parse_reset_mode(std::string_view name) {
  if (name == "zero") return ResetMode::kToZero;
  if (name == "subtract") return ResetMode::kBySubtraction;
  if (name == "mod") return ResetMode::kToMod;
  return std::nullopt;
}

LifConfig::LifConfig(double threshold, LeakRate alpha, ResetMode mode)
    : threshold(threshold), alpha(alpha), mode(mode) {
  if (!std::isfinite(threshold) || threshold <= 0.0) {
    throw std::invalid_argument("threshold must be positive");
  }
}

std::int64_t truncate_quantize(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("truncate_quantize: non-finite input");
  const double t = std::trunc(x);
  if (std::abs(t) >= 0x1p63) throw std::out_of_range("truncate_quantize: out of range");
  return static_cast<std::int64_t>(t);
}

LifNeuron::LifNeuron(LifConfig config, double start_time)
    : config_(config), state_{0.0, start_time} {}

double LifNeuron::potential_at(double t) const {
  return decay_weight(config_.alpha, t - state_.last_event_time) * state_.potential;
}

std::optional<Spike> LifNeuron::integrate(const Spike& input) {
  if (input.time < state_.last_event_time) {
    throw std::invalid_argument("LifNeuron: input spike precedes the last event");
  }
  const double theta = config_.threshold;
  double u = potential_at(input.time) + input.amplitude;
  state_.last_event_time = input.time;

  std::optional<Spike> out;
  if (std::abs(u) >= theta) {
    switch (config_.mode) {
      case ResetMode::kToZero:
        out = Spike{input.time, sgn(u) * theta};
        u = 0.0;
        break;
      case ResetMode::kBySubtraction:
        out = Spike{input.time, sgn(u) * theta};
        u -= sgn(u) * theta;
        break;
      case ResetMode::kToMod: {
        // Truncation of u / theta; the correction loop absorbs the rounding of
        // the division and product so that the residual stays below threshold.
        double k = std::trunc(u / theta);
        double r = u - k * theta;
        while (std::abs(r) >= theta) {
          k += sgn(r);
          r = u - k * theta;
        }
        out = Spike{input.time, k * theta};
        u = r;
        break;
      }
    }
  }
  state_.potential = u;
  return out;
}

SpikeTrain lif_transform(const SpikeTrain& train, const LifConfig& config) {
  if (train.empty()) return {};
  LifNeuron neuron(config, train.front().time);
  std::vector<Spike> out;
  for (const Spike& s : train) {
    if (auto emitted = neuron.integrate(s)) out.push_back(*emitted);
  }
  return SpikeTrain::from_events(out);
}

SpikeTrain cascade_oracle(const SpikeTrain& train, double threshold, LeakRate alpha) {
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  std::vector<Spike> out;
  double u = 0.0;
  double prev = train.empty() ? 0.0 : train.front().time;
  for (const Spike& s : train) {
    u = decay_weight(alpha, s.time - prev) * u + s.amplitude;
    prev = s.time;
    while (std::abs(u) >= threshold) {
      const double step = sgn(u) * threshold;
      out.push_back({s.time, step});
      u -= step;
    }
  }
  return SpikeTrain::from_events(out);
}

double quantization_error(const SpikeTrain& train, const LifConfig& config) {
  return alexiewicz_norm(difference(lif_transform(train, config), train), config.alpha);
}

std::vector<std::pair<double, double>> membrane_trace(const SpikeTrain& train,
                                                      const LifConfig& config,
                                                      std::span<const double> sample_times) {
  if (!std::is_sorted(sample_times.begin(), sample_times.end())) {
    throw std::invalid_argument("membrane_trace: sample times must be sorted");
  }
  double start = train.empty() ? 0.0 : train.front().time;
  if (!sample_times.empty()) start = std::min(start, sample_times.front());
  LifNeuron neuron(config, start);

  std::vector<std::pair<double, double>> trace;
  trace.reserve(sample_times.size());
  auto next = train.begin();
  for (double t : sample_times) {
    for (; next != train.end() && next->time <= t; ++next) neuron.integrate(*next);
    trace.emplace_back(t, neuron.potential_at(t));
  }
  return trace;
}

}  // namespace alexsnn
