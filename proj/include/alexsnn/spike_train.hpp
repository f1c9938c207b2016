#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace alexsnn {

/// One weighted Dirac impulse.
struct Spike {
  double time = 0.0;
  double amplitude = 0.0;

  friend bool operator==(const Spike&, const Spike&) = default;
};

/// Immutable, time-ordered sequence of spikes with strictly increasing times.
///
/// Simultaneous events are aggregated when a train is built with
/// `from_events`, and aggregates that sum to exactly zero are dropped.
/// Only `difference` produces trains that still carry zero amplitudes;
/// `normalized()` removes them.
class SpikeTrain {
 public:
  using const_iterator = std::vector<Spike>::const_iterator;

  SpikeTrain() = default;

  /// Sorts events by time, sums amplitudes at identical times and drops
  /// exact-zero aggregates. Throws std::invalid_argument on a non-finite
  /// time or amplitude, naming the offending index.
  static SpikeTrain from_events(std::span<const Spike> events);
  static SpikeTrain from_events(std::initializer_list<Spike> events) {
    return from_events(std::span<const Spike>(events.begin(), events.size()));
  }

  /// Copy of this train without zero-amplitude spikes.
  SpikeTrain normalized() const;

  std::span<const Spike> spikes() const { return spikes_; }
  std::size_t size() const { return spikes_.size(); }
  bool empty() const { return spikes_.empty(); }
  const Spike& operator[](std::size_t i) const { return spikes_[i]; }
  const Spike& front() const { return spikes_.front(); }
  const Spike& back() const { return spikes_.back(); }
  const_iterator begin() const { return spikes_.begin(); }
  const_iterator end() const { return spikes_.end(); }

  friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

 private:
  explicit SpikeTrain(std::vector<Spike> sorted) : spikes_(std::move(sorted)) {}

  friend SpikeTrain difference(const SpikeTrain& a, const SpikeTrain& b);
  friend SpikeTrain scale(const SpikeTrain& train, double c);

  std::vector<Spike> spikes_;
};

/// Weighted superposition: from_events over all (t, w_k * a) pairs.
/// Throws std::invalid_argument when the list lengths differ.
SpikeTrain superpose(std::span<const SpikeTrain> trains, std::span<const double> weights);

/// a - b over the union of both supports. Exact zeros are kept.
SpikeTrain difference(const SpikeTrain& a, const SpikeTrain& b);

/// Multiplies every amplitude by c; zero results are dropped.
SpikeTrain scale(const SpikeTrain& train, double c);

}  // namespace alexsnn
