#include "alexsnn/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "alexsnn/experiments.hpp"

namespace alexsnn {

std::uint64_t fuzz_train_seed(std::uint64_t seed, std::size_t index) {
  return mix64(mix64(seed) ^ index);
}

namespace {

bool same_train(const SpikeTrain& a, const SpikeTrain& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].time != b[i].time || std::abs(a[i].amplitude - b[i].amplitude) > tol) return false;
  }
  return true;
}

FuzzReport fuzz_one(const FuzzOptions& options, std::uint64_t train_seed) {
  FuzzReport r;
  r.trains = 1;
  const std::size_t n = 1 + mix64(train_seed) % options.max_spikes;
  for (double theta : options.thresholds) {
    const SpikeTrain train = random_train(n, options.half_range * theta, train_seed);
    for (LeakRate alpha : options.alphas) {
      ++r.evaluations;
      const LifConfig mod(theta, alpha, ResetMode::kToMod);
      const SpikeTrain out = lif_transform(train, mod);
      r.output_spikes += out.size();

      const double error =
          options.mode == ResetMode::kToMod
              ? alexiewicz_norm(difference(out, train), alpha)
              : quantization_error(train, LifConfig(theta, alpha, options.mode));
      r.max_error_ratio = std::max(r.max_error_ratio, error / theta);
      if (!(error < theta)) ++r.bound_violations;

      if (!same_train(out, cascade_oracle(train, theta, alpha), 1e-9)) ++r.oracle_mismatches;

      for (const Spike& s : out) {
        const double k = std::round(s.amplitude / theta);
        if (k == 0.0 || std::abs(s.amplitude - k * theta) > 1e-9 * theta) ++r.multiple_violations;
      }
    }
  }
  if (r.violations() > 0) r.first_failing_seed = train_seed;
  return r;
}

}  // namespace

FuzzReport run_theorem_fuzz(const FuzzOptions& options) {
  if (options.replay) return fuzz_one(options, *options.replay);

  std::vector<FuzzReport> partial(options.trains);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < options.trains;) {
      partial[i] = fuzz_one(options, fuzz_train_seed(options.seed, i));
    }
  };
  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  FuzzReport total;
  for (const FuzzReport& r : partial) {
    total.trains += r.trains;
    total.evaluations += r.evaluations;
    total.output_spikes += r.output_spikes;
    total.bound_violations += r.bound_violations;
    total.oracle_mismatches += r.oracle_mismatches;
    total.multiple_violations += r.multiple_violations;
    total.max_error_ratio = std::max(total.max_error_ratio, r.max_error_ratio);
    if (!total.first_failing_seed) total.first_failing_seed = r.first_failing_seed;
  }
  return total;
}

}  // namespace alexsnn
