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

#include <optional>

#include "stabrec/clifford.hpp"
#include "stabrec/errors.hpp"
#include "stabrec/pauli.hpp"

namespace stabrec {

/// Outcome probabilities below this are treated as exact zeros (stabilizer
/// inputs do produce exact zeros; genuine probabilities sit far above).
inline constexpr double kZeroProbabilityTol = 1e-12;
/// Tolerance for Kraus-operator proportionality tests.
inline constexpr double kKrausTol = 1e-10;

/// A two-qubit Clifford circuit followed by a Z-measurement of the second
/// qubit postselected on `outcome`.
struct PostselectedCircuit {
  CliffordElement clifford;  // arity 2
  int outcome = 0;           // 0 or 1
};

/// The non-unitary map of a postselected circuit: (I (x) <b|) C, a 2x4
/// coisometry.
using KrausMatrix = Eigen::Matrix<std::complex<double>, 2, 4>;

KrausMatrix kraus_from_matrix(const Eigen::Matrix4cd& unitary, int outcome);
KrausMatrix kraus_of(const PostselectedCircuit& pc);

/// Tr((I (x) <b|) C rho C^dag (I (x) |b>)).
double outcome_probability(const PostselectedCircuit& pc,
                           const Eigen::Matrix4cd& rho);

struct MeasuredOutput {
  double probability = 0.0;
  Eigen::Matrix2cd state;  // valid density matrix when probability > 0
};

/// Projected, renormalized first-qubit state.  Throws ZeroProbabilityError
/// when the outcome probability is at most kZeroProbabilityTol.
MeasuredOutput output_state(const PostselectedCircuit& pc,
                            const Eigen::Matrix4cd& rho);

/// True iff the Kraus operators agree up to a unimodular scalar, i.e. the
/// circuits produce identical outputs at identical rates on every input.
bool strictly_equivalent(const PostselectedCircuit& a,
                         const PostselectedCircuit& b);
bool kraus_proportional(const KrausMatrix& a, const KrausMatrix& b);

/// The single-qubit Clifford G with K_a = phase * G K_b, if one exists.
/// Presence implies equal outcome probabilities on every input.
std::optional<CliffordElement> clifford_equivalent(
    const PostselectedCircuit& a, const PostselectedCircuit& b);

}  // namespace stabrec
