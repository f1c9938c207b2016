#include "alexsnn/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace alexsnn {

std::string_view to_string(Spacing spacing) {
  return spacing == Spacing::kUnit ? "unit" : "poisson";
}

std::optional<Spacing> parse_spacing(std::string_view name) {
  if (name == "unit") return Spacing::kUnit;
  if (name == "poisson") return Spacing::kPoisson;
  return std::nullopt;
}

std::string_view to_string(AmplitudeLaw law) {
  return law == AmplitudeLaw::kUniform ? "uniform" : "gauss";
}

std::optional<AmplitudeLaw> parse_amplitude_law(std::string_view name) {
  if (name == "uniform") return AmplitudeLaw::kUniform;
  if (name == "gauss") return AmplitudeLaw::kGauss;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (spike_counts.empty()) throw std::invalid_argument("spike_counts must not be empty");
  if (std::find(spike_counts.begin(), spike_counts.end(), 0u) != spike_counts.end()) {
    throw std::invalid_argument("spike_counts must be positive");
  }
  if (!std::isfinite(amplitude_half_range) || amplitude_half_range <= 0.0) {
    throw std::invalid_argument("amplitude_half_range must be positive");
  }
  if (!std::isfinite(threshold) || threshold <= 0.0) {
    throw std::invalid_argument("threshold must be positive");
  }
  if (alphas.empty()) throw std::invalid_argument("alphas must not be empty");
  if (modes.empty()) throw std::invalid_argument("modes must not be empty");
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t mode_index, std::size_t alpha_index,
                         std::size_t n, std::size_t run) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t part : {std::uint64_t{mode_index}, std::uint64_t{alpha_index},
                             std::uint64_t{n}, std::uint64_t{run}}) {
    h = mix64(h ^ part);
  }
  return h;
}

namespace {

// 53-bit uniform in [0, 1); spelled out so the streams are identical across
// standard library implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

SpikeTrain random_train(std::size_t n, double half_range, std::uint64_t seed, Spacing spacing,
                        AmplitudeLaw law) {
  if (n < 1) throw std::invalid_argument("random_train: n must be positive");
  if (!std::isfinite(half_range) || half_range <= 0.0) {
    throw std::invalid_argument("random_train: half_range must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, half_range / 2.0);

  std::vector<Spike> events;
  events.reserve(n);
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) t += spacing == Spacing::kUnit ? 1.0 : -std::log1p(-unit_uniform(rng));
    double a;
    if (law == AmplitudeLaw::kUniform) {
      a = -half_range + 2.0 * half_range * unit_uniform(rng);
    } else {
      do {
        a = gauss(rng);
      } while (std::abs(a) > half_range);
    }
    events.push_back({t, a});
  }
  return SpikeTrain::from_events(events);
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& config, unsigned threads) {
  config.validate();
  const std::size_t n_modes = config.modes.size();
  const std::size_t n_alphas = config.alphas.size();
  const std::size_t n_counts = config.spike_counts.size();
  const std::size_t cells = n_modes * n_alphas * n_counts;

  std::vector<TrialRecord> records(cells * config.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell; (cell = next.fetch_add(1)) < cells;) {
      const std::size_t mi = cell / (n_alphas * n_counts);
      const std::size_t ai = (cell / n_counts) % n_alphas;
      const std::size_t n = config.spike_counts[cell % n_counts];
      const LifConfig lif(config.threshold, config.alphas[ai], config.modes[mi]);
      for (std::size_t run = 0; run < config.runs; ++run) {
        const SpikeTrain train =
            random_train(n, config.amplitude_half_range * config.threshold,
                         trial_seed(config.seed, mi, ai, n, run), config.spacing,
                         config.amplitude_law);
        records[cell * config.runs + run] = {config.modes[mi], config.alphas[ai], n, run,
                                             quantization_error(train, lif)};
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return records;
}

namespace {

// Linear interpolation between order statistics of sorted data.
double quantile(std::span<const double> sorted, double p) {
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

BoxStats box_stats(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("box_stats: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  BoxStats box;
  box.n_samples = sorted.size();
  box.median = quantile(sorted, 0.5);
  box.q1 = quantile(sorted, 0.25);
  box.q3 = quantile(sorted, 0.75);
  const double iqr = box.q3 - box.q1;
  const double fence_low = box.q1 - 1.5 * iqr;
  const double fence_high = box.q3 + 1.5 * iqr;

  box.whisker_low = box.q1;
  box.whisker_high = box.q3;
  for (double x : sorted) {
    if (x < fence_low || x > fence_high) {
      box.outliers.push_back(x);
    } else {
      box.whisker_low = std::min(box.whisker_low, x);
      box.whisker_high = std::max(box.whisker_high, x);
    }
  }
  return box;
}

std::vector<CellSummary> summarize(std::span<const TrialRecord> records, double threshold) {
  std::vector<CellSummary> out;
  for (std::size_t i = 0; i < records.size();) {
    const TrialRecord& head = records[i];
    std::vector<double> errors;
    for (; i < records.size() && records[i].mode == head.mode && records[i].alpha == head.alpha &&
           records[i].n == head.n;
         ++i) {
      errors.push_back(records[i].error_norm);
    }
    double sum = 0.0;
    for (double e : errors) sum += e;
    out.push_back({head.mode, head.alpha, head.n, sum / static_cast<double>(errors.size()),
                   *std::max_element(errors.begin(), errors.end()),
                   static_cast<std::size_t>(std::count_if(
                       errors.begin(), errors.end(), [&](double e) { return e >= threshold; })),
                   box_stats(errors)});
  }
  return out;
}

}  // namespace alexsnn
