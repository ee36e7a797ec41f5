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

#include "stabrec/protocol.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stabrec {

namespace {

void validate(const ProtocolConfig& config) {
  if (config.k < 2) throw std::invalid_argument("k must be at least 2");
  if (config.d < 0.0) throw std::invalid_argument("d must be nonnegative");
  if (std::abs(config.z) > 1.0) {
    throw std::invalid_argument("z must lie in [-1, 1]");
  }
  if (!(config.q1 > 0.0) || config.q1 > 1.0) {
    throw std::invalid_argument("q1 must lie in (0, 1]");
  }
  if (config.trials == 0) throw std::invalid_argument("trials must be > 0");
}

// Solve the tridiagonal system (x_i - Q_i x_{i-1} - (1-Q_i) x_{i+1} = rhs_i)
// with absorbing boundaries x_0 = left_boundary, x_k = 0, by elimination.
std::vector<double> solve_chain(const std::vector<double>& qs,
                                double left_boundary, double rhs_value) {
  const std::size_t n = qs.size();
  std::vector<double> diag(n, 1.0), rhs(n, rhs_value);
  rhs[0] += qs[0] * left_boundary;
  for (std::size_t i = 1; i < n; ++i) {
    const double m = -qs[i] / diag[i - 1];
    diag[i] -= m * -(1.0 - qs[i - 1]);
    rhs[i] -= m * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = (rhs[i] + (1.0 - qs[i]) * x[i + 1]) / diag[i];
  }
  return x;
}

}  // namespace

std::vector<double> probability_sequence(double q1, double z, int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (std::abs(z) > 1.0) throw std::invalid_argument("z must lie in [-1, 1]");
  std::vector<double> qs;
  qs.reserve(count);
  const double c = (1.0 - z * z) / 4.0;
  double q = q1;
  qs.push_back(q);
  for (int i = 1; i < count; ++i) {
    if (1.0 - q < 1e-15) {
      throw DegenerateConfigError(
          "success probability reached 1; recursion divides by zero");
    }
    q = c / (1.0 - q);
    qs.push_back(q);
  }
  return qs;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
  auto mix = [](std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xBF58476D1CE4E5B9ull;
    v ^= v >> 27;
    v *= 0x94D049BB133111EBull;
    v ^= v >> 31;
    return v;
  };
  state_ = mix(seed ^ mix(trial * 0x9E3779B97F4A7C15ull +
                          0x2545F4914F6CDD1Dull));
}

std::uint64_t TrialRng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t v = state_;
  v ^= v >> 30;
  v *= 0xBF58476D1CE4E5B9ull;
  v ^= v >> 27;
  v *= 0x94D049BB133111EBull;
  v ^= v >> 31;
  return v;
}

double TrialRng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

ProtocolResult simulate(const ProtocolConfig& config) {
  validate(config);
  const std::vector<double> qs =
      probability_sequence(config.q1, config.z, config.k - 1);
  ProtocolResult result;
  result.prob_sequence = qs;
  std::uint64_t total_steps = 0;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    TrialRng rng(config.seed, trial);
    int position = 1;
    while (position != 0 && position != config.k) {
      position += rng.uniform() < qs[position - 1] ? -1 : +1;
      ++total_steps;
    }
    if (position == 0) ++result.successes;
  }
  result.total_cost = static_cast<double>(config.trials) * config.d +
                      static_cast<double>(total_steps);
  result.n_k = result.successes == 0
                   ? std::numeric_limits<double>::infinity()
                   : result.total_cost / static_cast<double>(result.successes);
  return result;
}

double analytic_cost(const ProtocolConfig& config) {
  validate(config);
  const std::vector<double> qs =
      probability_sequence(config.q1, config.z, config.k - 1);
  const std::vector<double> success = solve_chain(qs, 1.0, 0.0);
  const std::vector<double> steps = solve_chain(qs, 0.0, 1.0);
  return (config.d + steps[0]) / success[0];
}

}  // namespace stabrec
