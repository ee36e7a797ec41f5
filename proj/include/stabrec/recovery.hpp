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

#include <vector>

#include "stabrec/classify.hpp"

namespace stabrec {

/// A recovery circuit (C', 0) with its decomposition
///   C' = (G1^dag (x) I) CNOT (G2 (x) G).
/// Fed the failed-branch output of its source together with a fresh copy of
/// the resource state psi, it returns the original first-qubit state.
struct RecoverySpec {
  PostselectedCircuit circuit;
  CliffordElement g1;  // arity 1
  CliffordElement g2;  // arity 1
  CliffordElement g;   // arity 1, acts on the resource wire
};

/// Build the recovery circuit of an interacting postselected circuit by
/// canonicalizing (C, 1-b) and swapping the roles of the first-qubit gates.
/// Throws NotInteractingError otherwise (trivial/swap circuits hand an input
/// straight through, so there is nothing to recover).
RecoverySpec synthesize_recovery(const PostselectedCircuit& pc);

/// Probability that the recovery succeeds on the failed branch:
///   ((1 - z^2)/4) / (1 - Q_b(source, phi (x) psi)),  z = <psi|G^dag Z G|psi>.
/// Also equals the recovery circuit's outcome probability on the failed
/// output tensored with psi.  Throws ZeroProbabilityError when the failed
/// branch itself has zero probability.
double recovery_probability(const RecoverySpec& spec,
                            const PostselectedCircuit& source,
                            const Eigen::Matrix2cd& phi,
                            const Eigen::Matrix2cd& psi);

/// Exhaustively sweep all 11520 x 2 postselected circuits: true iff every
/// candidate that performs the recovery round trip on the probe set is
/// strictly equivalent to synthesize_recovery(pc), and vice versa.  The probe
/// set is six product inputs: phi from the four tetrahedral Bloch points, one
/// mixed state at (0.2, -0.1, 0.3) and the maximally mixed state, with the
/// resource psi fixed at Bloch (sqrt(1/11), sqrt(3/11), sqrt(7/11)), whose 18
/// candidate output components are pairwise distinct (see
/// distinctness_table).
bool verify_uniqueness(const PostselectedCircuit& pc);

/// One row of the distinctness table: for a projector Pauli lambda03 the
/// would-be recovered Bloch component is v = (a30 + a33)/(1 + a03) with
/// a03 = a30 * a33.
struct DistinctnessRow {
  SignedTwoQubitPauli lambda03;
  double a03 = 0.0;
  double a30 = 0.0;
  double a33 = 0.0;
  double v = 0.0;
};

/// All 18 rows (9 positive then 9 negative projector Paulis) evaluated at the
/// fixed probe pair phi2 = (sqrt(2/17), sqrt(5/17), sqrt(10/17)) and
/// psi = (sqrt(1/11), sqrt(3/11), sqrt(7/11)).  The 36 signed values +/-v are
/// pairwise distinct, which is what makes the probe sweep conclusive.
std::vector<DistinctnessRow> distinctness_table();

/// The fixed probe Bloch vectors used by the table and the uniqueness sweep.
BlochVector distinctness_phi2_bloch();
BlochVector distinctness_psi_bloch();

}  // namespace stabrec
