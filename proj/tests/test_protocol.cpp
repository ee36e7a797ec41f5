// Copyright 2026 The stabrec developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "stabrec/protocol.hpp"

using namespace stabrec;

namespace {

// Independent absorption oracle: propagate the position distribution of the
// walk step by step, accumulating success mass and expected steps, until the
// unabsorbed mass is negligible.
struct AbsorptionOracle {
  double success = 0.0;
  double steps = 0.0;
};

AbsorptionOracle iterate_walk(const std::vector<double>& qs, int k) {
  std::vector<double> mass(k + 1, 0.0);
  mass[1] = 1.0;
  AbsorptionOracle out;
  double alive = 1.0;
  for (int step = 0; step < 100000 && alive > 1e-15; ++step) {
    std::vector<double> next(k + 1, 0.0);
    for (int i = 1; i < k; ++i) {
      if (mass[i] == 0.0) continue;
      out.steps += mass[i];
      next[i - 1] += mass[i] * qs[i - 1];
      next[i + 1] += mass[i] * (1 - qs[i - 1]);
    }
    out.success += next[0];
    next[0] = 0.0;
    next[k] = 0.0;
    alive = 0.0;
    for (int i = 1; i < k; ++i) alive += next[i];
    mass = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("probability sequence: uniform at z = 0, q1 = 1/2") {
  const std::vector<double> qs = probability_sequence(0.5, 0.0, 25);
  for (double q : qs) CHECK(q == 0.5);
}

TEST_CASE("probability sequence reference values for z^2 = 0.96") {
  const double z = std::sqrt(0.96);
  const std::vector<double> qs = probability_sequence(0.5, z, 21);
  CHECK(std::abs(qs[1] - 0.02) < 1e-12);
  // Monotone decrease to the fixed point (1 - |z|)/2 within 1e-6 by i = 20.
  for (std::size_t i = 1; i < qs.size(); ++i) CHECK(qs[i] <= qs[i - 1]);
  const double fixed_point = (1.0 - z) / 2.0;
  CHECK(std::abs(qs[20] - fixed_point) < 1e-6);
  for (double q : qs) {
    CHECK(q > 0.0);
    CHECK(q < 1.0);
  }
}

TEST_CASE("degenerate configurations are flagged") {
  CHECK_THROWS_AS(probability_sequence(1.0, 0.0, 2), DegenerateConfigError);
  CHECK_NOTHROW(probability_sequence(1.0, 0.0, 1));
  ProtocolConfig config;
  config.k = 3;
  config.q1 = 1.0;
  CHECK_THROWS_AS(simulate(config), DegenerateConfigError);
  CHECK_THROWS_AS(analytic_cost(config), DegenerateConfigError);
}

TEST_CASE("invalid configurations are rejected") {
  ProtocolConfig config;
  config.k = 1;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
  config = {};
  config.z = 1.5;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
  config = {};
  config.q1 = 0.0;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
  config = {};
  config.trials = 0;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
  config = {};
  config.d = -1.0;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
}

TEST_CASE("analytic cost at k = 2 is (d + 1)/q1 exactly") {
  for (double d : {0.0, 0.1, 1.0, 10.0, 100.0, 1000.0, 10000.0}) {
    for (double q1 : {0.25, 0.5, 1.0}) {
      ProtocolConfig config;
      config.k = 2;
      config.d = d;
      config.q1 = q1;
      CHECK(analytic_cost(config) == (d + 1.0) / q1);
    }
  }
}

TEST_CASE("analytic cost matches the iterative absorption oracle") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> zdist(0.0, 0.9);
  std::uniform_int_distribution<int> kdist(2, 7);
  for (int n = 0; n < 20; ++n) {
    ProtocolConfig config;
    config.k = kdist(rng);
    config.d = 10.0;
    config.z = zdist(rng);
    config.q1 = 0.5;
    const std::vector<double> qs =
        probability_sequence(config.q1, config.z, config.k - 1);
    const AbsorptionOracle oracle = iterate_walk(qs, config.k);
    const double expected = (config.d + oracle.steps) / oracle.success;
    CHECK(analytic_cost(config) == doctest::Approx(expected).epsilon(1e-10));
  }
  // Frozen reference: symmetric walk on {0..3} from 1 has success 2/3 and
  // two expected steps.
  ProtocolConfig reference;
  reference.k = 3;
  reference.d = 1000.0;
  reference.z = 0.0;
  reference.q1 = 0.5;
  CHECK(analytic_cost(reference) == doctest::Approx(1503.0).epsilon(1e-12));
}

TEST_CASE("simulation is deterministic and reproducible bit for bit") {
  ProtocolConfig config;
  config.k = 3;
  config.d = 1.0;
  config.z = 0.25;
  config.q1 = 0.5;
  config.trials = 1000;
  config.seed = 42;
  const ProtocolResult a = simulate(config);
  const ProtocolResult b = simulate(config);
  CHECK(a.successes == b.successes);
  CHECK(a.total_cost == b.total_cost);
  CHECK(a.n_k == b.n_k);
  // Golden values frozen from the documented SplitMix64 streams.
  CHECK(a.successes == 663);
  CHECK(a.total_cost == 2977.0);
  CHECK(a.n_k == 4.4901960784313726);

  TrialRng r0(42, 0);
  CHECK(r0.next() == 17383800795976873779ull);
  CHECK(r0.next() == 6890867601122208734ull);
  TrialRng r1(42, 1);
  CHECK(r1.next() == 5139652199376659830ull);
  TrialRng u(7, 3);
  CHECK(u.uniform() == 0.82046415367889314);
  const double x = u.uniform();
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}

TEST_CASE("immediate success at q1 = 1, k = 2 costs d + 1") {
  ProtocolConfig config;
  config.k = 2;
  config.d = 0.0;
  config.q1 = 1.0;
  config.trials = 1000;
  const ProtocolResult result = simulate(config);
  CHECK(result.successes == config.trials);
  CHECK(result.n_k == 1.0);
  CHECK(analytic_cost(config) == 1.0);
}

TEST_CASE("Monte Carlo agrees with the analytic cost within noise") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> zdist(0.0, 0.9);
  std::uniform_int_distribution<int> kdist(2, 7);
  for (int n = 0; n < 10; ++n) {
    ProtocolConfig config;
    config.k = kdist(rng);
    config.d = (n % 2) ? 10.0 : 1000.0;
    config.z = zdist(rng);
    config.q1 = 0.5;
    config.trials = 100000;
    config.seed = 1000 + n;
    const double exact = analytic_cost(config);
    const double mc = simulate(config).n_k;
    // A crude 3-sigma band from the success-count binomial dominates the
    // ratio estimator noise for these configurations.
    const std::vector<double> qs =
        probability_sequence(config.q1, config.z, config.k - 1);
    const AbsorptionOracle oracle = iterate_walk(qs, config.k);
    const double p = oracle.success;
    const double rel_se =
        std::sqrt((1.0 - p) / (p * static_cast<double>(config.trials)));
    CHECK(std::abs(mc - exact) / exact <= std::max(3.0 * rel_se, 0.005));
  }
}

TEST_CASE("n_k over k has an interior minimum for z = 0, d = 1000") {
  std::vector<double> costs;
  for (int k = 2; k <= 60; ++k) {
    ProtocolConfig config;
    config.k = k;
    config.d = 1000.0;
    config.z = 0.0;
    config.q1 = 0.5;
    costs.push_back(analytic_cost(config));
    // Closed form of the symmetric walk: k (d + k - 1)/(k - 1).
    const double closed =
        k * (1000.0 + k - 1.0) / (k - 1.0);
    CHECK(costs.back() == doctest::Approx(closed).epsilon(1e-12));
  }
  const auto min_it = std::min_element(costs.begin(), costs.end());
  CHECK(min_it != costs.begin());
  CHECK(min_it != costs.end() - 1);
  CHECK(*min_it < costs.front());
  CHECK(*min_it < costs.back());
}

TEST_CASE("simulate records the probability sequence") {
  ProtocolConfig config;
  config.k = 4;
  config.z = std::sqrt(0.5);
  config.trials = 10;
  const ProtocolResult result = simulate(config);
  REQUIRE(result.prob_sequence.size() == 3);
  CHECK(result.prob_sequence[0] == 0.5);
  CHECK(result.prob_sequence[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(result.prob_sequence[2] ==
        doctest::Approx(0.125 / 0.75).epsilon(1e-12));
}
