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

#pragma once

#include <cstdint>
#include <vector>

#include "stabrec/errors.hpp"

namespace stabrec {

/// Depth-k recovery protocol: a walk on {0..k} driven by k-1 chained
/// circuits.  The walk starts at 1; a step onto 0 is success, onto k failure.
/// The left-step probability at position i is Q_i, with Q_1 = q1 and
/// Q_{i+1} = ((1 - z^2)/4) / (1 - Q_i).  Every step consumes one resource
/// state; preparing the expensive input costs d (charged once per trial,
/// success or not).
struct ProtocolConfig {
  int k = 3;
  double d = 1000.0;
  double z = 0.0;  // resource Bloch z-component, in [-1, 1]
  double q1 = 0.5;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
};

struct ProtocolResult {
  std::uint64_t successes = 0;
  double total_cost = 0.0;  // sum over trials of d + steps
  double n_k = 0.0;         // total_cost / successes
  std::vector<double> prob_sequence;  // Q_1 .. Q_{k-1}
};

/// The success-probability recursion.  Throws DegenerateConfigError when some
/// Q_i reaches 1 and the next term would divide by zero.
std::vector<double> probability_sequence(double q1, double z, int count);

/// Monte Carlo estimate of N_k.  Deterministic for a fixed (seed, trials):
/// trial t draws from its own SplitMix64 stream keyed by (seed, t), so the
/// result does not depend on execution order.
ProtocolResult simulate(const ProtocolConfig& config);

/// Exact N_k = (d + E[steps before absorption]) / P[absorb at 0] from the
/// tridiagonal linear system of the birth-death chain; reduces to
/// (d + 1)/q1 at k = 2.
double analytic_cost(const ProtocolConfig& config);

/// SplitMix64: a Weyl counter plus an avalanche mix.  Stream t of a seed is
/// started from mix(seed ^ mix(t * gamma + c)), making every (seed, trial)
/// pair an independent, reproducible sequence.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

}  // namespace stabrec
