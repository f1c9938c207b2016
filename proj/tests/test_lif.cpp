#include <doctest.h>

#include <cmath>
#include <random>

#include "alexsnn/lif.hpp"
#include "test_support.hpp"

using namespace alexsnn;

namespace {

const LeakRate kInf = LeakRate::infinite();
constexpr ResetMode kModes[] = {ResetMode::kToZero, ResetMode::kBySubtraction, ResetMode::kToMod};

std::vector<Spike> as_vector(const SpikeTrain& t) { return {t.begin(), t.end()}; }

SpikeTrain single(double t, double a) { return SpikeTrain::from_events({{t, a}}); }

// Runs a neuron over a train and returns its final potential.
double final_potential(const SpikeTrain& train, const LifConfig& config) {
  LifNeuron neuron(config, train.empty() ? 0.0 : train.front().time);
  for (const Spike& s : train) neuron.integrate(s);
  return neuron.state().potential;
}

}  // namespace

TEST_CASE("truncate_quantize") {
  CHECK(truncate_quantize(1.8) == 1);
  CHECK(truncate_quantize(-1.8) == -1);
  CHECK(truncate_quantize(0.999) == 0);
  CHECK(truncate_quantize(-3.0) == -3);
  CHECK(truncate_quantize(-0.2) == 0);
  CHECK_THROWS_AS(truncate_quantize(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(truncate_quantize(1e30), std::out_of_range);
}

TEST_CASE("LifConfig validates the threshold") {
  CHECK_THROWS_WITH_AS(LifConfig(0.0, LeakRate(1.0), ResetMode::kToMod),
                       "threshold must be positive", std::invalid_argument);
  CHECK_THROWS_AS(LifConfig(-1.0, LeakRate(1.0), ResetMode::kToMod), std::invalid_argument);
  CHECK_THROWS_AS(LifConfig(INFINITY, LeakRate(1.0), ResetMode::kToMod), std::invalid_argument);
}

TEST_CASE("reset mode names") {
  for (ResetMode m : kModes) CHECK(parse_reset_mode(to_string(m)) == m);
  CHECK_FALSE(parse_reset_mode("modulo").has_value());
}

TEST_CASE("lif_transform examples") {
  for (ResetMode m : kModes) {
    for (LeakRate alpha : {LeakRate(0.0), LeakRate(1.0), kInf}) {
      CHECK(lif_transform(single(1, 0.5), LifConfig(1.0, alpha, m)).empty());
    }
    const SpikeTrain pair = SpikeTrain::from_events({{0, 0.6}, {1, 0.6}});
    CHECK(lif_transform(pair, LifConfig(1.0, kInf, m)).empty());
    CHECK(as_vector(lif_transform(pair, LifConfig(1.0, LeakRate(0.0), m))) ==
          std::vector<Spike>{{1.0, 1.0}});
  }

  const SpikeTrain big = single(1, 2.5);
  const LifConfig mod(1.0, LeakRate(0.0), ResetMode::kToMod);
  const LifConfig sub(1.0, LeakRate(0.0), ResetMode::kBySubtraction);
  const LifConfig zero(1.0, LeakRate(0.0), ResetMode::kToZero);
  CHECK(as_vector(lif_transform(big, mod)) == std::vector<Spike>{{1.0, 2.0}});
  CHECK(final_potential(big, mod) == 0.5);
  CHECK(as_vector(lif_transform(big, sub)) == std::vector<Spike>{{1.0, 1.0}});
  CHECK(final_potential(big, sub) == 1.5);
  CHECK(as_vector(lif_transform(big, zero)) == std::vector<Spike>{{1.0, 1.0}});
  CHECK(final_potential(big, zero) == 0.0);
  CHECK(lif_transform(big, mod) == cascade_oracle(big, 1.0, LeakRate(0.0)));
}

TEST_CASE("threshold equality fires with zero residual") {
  const LifConfig mod(0.5, LeakRate(0.0), ResetMode::kToMod);
  const SpikeTrain exact = single(0, 0.5);
  CHECK(as_vector(lif_transform(exact, mod)) == std::vector<Spike>{{0.0, 0.5}});
  CHECK(final_potential(exact, mod) == 0.0);
  CHECK(as_vector(lif_transform(single(0, -1.0), mod)) == std::vector<Spike>{{0.0, -1.0}});
}

TEST_CASE("negative potentials fire negative spikes") {
  const LifConfig sub(1.0, LeakRate(0.0), ResetMode::kBySubtraction);
  const SpikeTrain t = single(0, -2.5);
  CHECK(as_vector(lif_transform(t, sub)) == std::vector<Spike>{{0.0, -1.0}});
  CHECK(final_potential(t, sub) == -1.5);
}

TEST_CASE("LifNeuron rejects events out of order") {
  LifNeuron neuron(LifConfig(1.0, LeakRate(1.0), ResetMode::kToMod), 2.0);
  CHECK_THROWS_AS(neuron.integrate({1.0, 0.1}), std::invalid_argument);
}

TEST_CASE("cascade_oracle examples") {
  CHECK(as_vector(cascade_oracle(single(1, 2.5), 1.0, LeakRate(0.0))) ==
        std::vector<Spike>{{1.0, 2.0}});
  CHECK(cascade_oracle(single(1, 0.5), 1.0, LeakRate(0.0)).empty());
  const SpikeTrain neg = cascade_oracle(single(1, -3.7), 1.0, LeakRate(0.0));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0] == Spike{1.0, -3.0});
}

TEST_CASE("quantization_error examples") {
  CHECK(quantization_error(SpikeTrain{}, LifConfig(1.0, LeakRate(1.0), ResetMode::kToMod)) == 0.0);
  CHECK(quantization_error(single(1, 0.5), LifConfig(1.0, LeakRate(1.0), ResetMode::kToMod)) ==
        0.5);
  CHECK(quantization_error(single(1, 2.5),
                           LifConfig(1.0, LeakRate(0.0), ResetMode::kBySubtraction)) == 1.5);
}

TEST_CASE("membrane_trace") {
  const double samples[] = {-1.0, 0.0, 2.5, 7.0};
  for (const auto& [t, u] :
       membrane_trace(SpikeTrain{}, LifConfig(1.0, LeakRate(0.5), ResetMode::kToMod), samples)) {
    CHECK(u == 0.0);
  }

  const double at_one[] = {1.0};
  const auto decayed = membrane_trace(single(0, 0.5),
                                      LifConfig(1.0, LeakRate(std::log(2.0)), ResetMode::kToMod),
                                      at_one);
  REQUIRE(decayed.size() == 1);
  CHECK(decayed[0].second == doctest::Approx(0.25).epsilon(1e-15));

  const double at_zero[] = {-0.5, 0.0};
  const auto residual =
      membrane_trace(single(0, 2.5), LifConfig(1.0, LeakRate(0.0), ResetMode::kToMod), at_zero);
  CHECK(residual[0].second == 0.0);
  CHECK(residual[1].second == 0.5);

  const double unsorted[] = {1.0, 0.0};
  CHECK_THROWS_AS(membrane_trace(single(0, 1.0), LifConfig(1.0, LeakRate(0.0), ResetMode::kToMod),
                                 unsorted),
                  std::invalid_argument);
}

TEST_CASE("property: reset-to-mod quantizes within the threshold") {
  std::mt19937_64 rng(2024);
  const LeakRate alphas[] = {LeakRate(0.0), LeakRate(0.1), LeakRate(1.0), LeakRate(10.0), kInf};
  std::size_t checks = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const SpikeTrain base = testing::arbitrary_train(rng, 60, 4.0);
    for (double theta : {0.5, 1.0, 2.0}) {
      const SpikeTrain train = scale(base, theta);
      for (LeakRate alpha : alphas) {
        const LifConfig mod(theta, alpha, ResetMode::kToMod);
        const SpikeTrain out = lif_transform(train, mod);

        CHECK(quantization_error(train, mod) < theta);

        const SpikeTrain oracle = cascade_oracle(train, theta, alpha);
        REQUIRE(out.size() == oracle.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
          CHECK(out[i].time == oracle[i].time);
          CHECK(std::abs(out[i].amplitude - oracle[i].amplitude) <= 1e-9);
        }

        for (const Spike& s : out) {
          const double k = std::round(s.amplitude / theta);
          CHECK(k != 0.0);
          CHECK(std::abs(s.amplitude / theta - k) <= 1e-9);
        }

        // post-event residual stays strictly inside the threshold
        LifNeuron neuron(mod, train.empty() ? 0.0 : train.front().time);
        for (const Spike& s : train) {
          neuron.integrate(s);
          CHECK(std::abs(neuron.state().potential) < theta);
        }

        // idempotence
        CHECK(lif_transform(out, mod) == out);
        ++checks;
      }
    }
  }
  CHECK(checks == 400 * 3 * 5);
}

TEST_CASE("property: subtraction and zero emit unit spikes at input times") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    const SpikeTrain train = testing::arbitrary_train(rng, 60, 4.0);
    for (ResetMode m : kModes) {
      for (LeakRate alpha : {LeakRate(0.0), LeakRate(0.5), kInf}) {
        const double theta = 0.75;
        const SpikeTrain out = lif_transform(train, LifConfig(theta, alpha, m));
        std::size_t j = 0;
        for (const Spike& s : out) {
          while (j < train.size() && train[j].time < s.time) ++j;
          REQUIRE(j < train.size());
          CHECK(train[j].time == s.time);
          if (m != ResetMode::kToMod) CHECK(std::abs(s.amplitude) == theta);
        }
      }
    }
  }
}

TEST_CASE("property: memoryless reset-to-mod truncates each spike") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const SpikeTrain train = testing::arbitrary_train(rng, 40, 5.0);
    const double theta = 1.25;
    const SpikeTrain out = lif_transform(train, LifConfig(theta, kInf, ResetMode::kToMod));
    std::vector<Spike> expected;
    for (const Spike& s : train) {
      if (std::abs(s.amplitude) >= theta) {
        expected.push_back({s.time, static_cast<double>(truncate_quantize(s.amplitude / theta)) *
                                        theta});
      }
    }
    CHECK(as_vector(out) == expected);
  }
}

TEST_CASE("property: threshold-multiple trains are fixed points") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> k(-4, 4);
  for (int iter = 0; iter < 200; ++iter) {
    const double theta = 0.75;
    std::vector<Spike> events;
    for (int i = 0; i < 30; ++i) {
      const int m = k(rng);
      if (m != 0) events.push_back({static_cast<double>(i), m * theta});
    }
    const SpikeTrain train = SpikeTrain::from_events(events);
    for (LeakRate alpha : {LeakRate(0.0), LeakRate(0.4), kInf}) {
      const LifConfig mod(theta, alpha, ResetMode::kToMod);
      CHECK(lif_transform(train, mod) == train);
      CHECK(cascade_oracle(train, theta, alpha) == train);
    }
  }
}

TEST_CASE("property: threshold scaling covariance") {
  // Power-of-two thresholds keep the scaling exact in floating point.
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const SpikeTrain unit = testing::arbitrary_train(rng, 50, 3.0);
    for (double theta : {0.25, 2.0, 8.0}) {
      for (ResetMode m : kModes) {
        const LeakRate alpha(0.3);
        CHECK(lif_transform(scale(unit, theta), LifConfig(theta, alpha, m)) ==
              scale(lif_transform(unit, LifConfig(1.0, alpha, m)), theta));
      }
    }
  }
}
