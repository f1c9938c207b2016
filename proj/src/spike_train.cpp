#include "alexsnn/spike_train.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace alexsnn {

namespace {

std::vector<Spike> aggregate(std::vector<Spike> events) {
  // Stable so that simultaneous amplitudes are summed in input order.
  std::stable_sort(events.begin(), events.end(),
                   [](const Spike& x, const Spike& y) { return x.time < y.time; });
  std::vector<Spike> out;
  out.reserve(events.size());
  for (std::size_t i = 0; i < events.size();) {
    double sum = 0.0;
    const double t = events[i].time;
    for (; i < events.size() && events[i].time == t; ++i) sum += events[i].amplitude;
    if (sum != 0.0) out.push_back({t, sum});
  }
  return out;
}

}  // namespace

SpikeTrain SpikeTrain::from_events(std::span<const Spike> events) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (!std::isfinite(events[i].time) || !std::isfinite(events[i].amplitude)) {
      throw std::invalid_argument("non-finite value in spike event at index " +
                                  std::to_string(i));
    }
  }
  return SpikeTrain(aggregate({events.begin(), events.end()}));
}

SpikeTrain SpikeTrain::normalized() const {
  std::vector<Spike> out;
  out.reserve(spikes_.size());
  std::copy_if(spikes_.begin(), spikes_.end(), std::back_inserter(out),
               [](const Spike& s) { return s.amplitude != 0.0; });
  return SpikeTrain(std::move(out));
}

SpikeTrain superpose(std::span<const SpikeTrain> trains, std::span<const double> weights) {
  if (trains.size() != weights.size()) {
    throw std::invalid_argument("superpose: " + std::to_string(trains.size()) +
                                " trains but " + std::to_string(weights.size()) + " weights");
  }
  std::vector<Spike> events;
  for (std::size_t k = 0; k < trains.size(); ++k) {
    if (!std::isfinite(weights[k])) {
      throw std::invalid_argument("superpose: non-finite weight at index " + std::to_string(k));
    }
    for (const Spike& s : trains[k]) events.push_back({s.time, weights[k] * s.amplitude});
  }
  return SpikeTrain::from_events(events);
}

SpikeTrain difference(const SpikeTrain& a, const SpikeTrain& b) {
  std::vector<Spike> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->time < ib->time)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->time < ia->time) {
      out.push_back({ib->time, -ib->amplitude});
      ++ib;
    } else {
      out.push_back({ia->time, ia->amplitude - ib->amplitude});
      ++ia;
      ++ib;
    }
  }
  return SpikeTrain(std::move(out));
}

SpikeTrain scale(const SpikeTrain& train, double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("scale: factor must be finite");
  std::vector<Spike> out;
  out.reserve(train.size());
  for (const Spike& s : train) {
    const double a = c * s.amplitude;
    if (a != 0.0) out.push_back({s.time, a});
  }
  return SpikeTrain(std::move(out));
}

}  // namespace alexsnn
