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

#include "stabrec/recovery.hpp"

#include <cmath>

namespace stabrec {

namespace {

constexpr double kProbeProbabilityFloor = 1e-9;
constexpr double kProbeStateTol = 1e-7;

}  // namespace

RecoverySpec synthesize_recovery(const PostselectedCircuit& pc) {
  if (!is_interacting(pc)) {
    throw NotInteractingError(
        "only interacting circuits have recovery circuits");
  }
  // Canonicalize the opposite branch: (C, 1-b) = ((F3 (x) I) CNOT (F1 (x) F2), 0)
  // strictly, and fold the outcome back to 1 via (D, 0) = ((I (x) X) D, 1):
  //   (C, 1-b) = ((F3 (x) I) CNOT (F1 (x) X F2), 1).
  // Swapping the roles of the first-qubit gates gives the recovery circuit
  //   ((F1^dag (x) I) CNOT (F3^dag (x) X F2), 0).
  const CanonicalForm form = canonicalize({pc.clifford, 1 - pc.outcome});
  RecoverySpec spec;
  spec.g1 = form.g1;
  spec.g2 = invert(form.g3);
  spec.g = compose(pauli_gate_element(SinglePauli::X), *form.g2);
  spec.circuit.clifford =
      compose(embed_on_wire(invert(spec.g1), 0),
              compose(cnot_element(), tensor_product(spec.g2, spec.g)));
  spec.circuit.outcome = 0;
  return spec;
}

double recovery_probability(const RecoverySpec& spec,
                            const PostselectedCircuit& source,
                            const Eigen::Matrix2cd& phi,
                            const Eigen::Matrix2cd& psi) {
  const double q_b = outcome_probability(source, kron2(phi, psi));
  if (1.0 - q_b <= kZeroProbabilityTol) {
    throw ZeroProbabilityError("failed branch has zero probability");
  }
  const Eigen::Matrix2cd g = matrix_of(spec.g);
  const double z = bloch_of(g * psi * g.adjoint()).z;
  return ((1.0 - z * z) / 4.0) / (1.0 - q_b);
}

bool verify_uniqueness(const PostselectedCircuit& pc) {
  const RecoverySpec spec = synthesize_recovery(pc);
  const KrausMatrix k_spec = kraus_of(spec.circuit);

  const double t = 1.0 / std::sqrt(3.0);
  const std::array<BlochVector, 6> phis{
      BlochVector{t, t, t},       BlochVector{t, -t, -t},
      BlochVector{-t, t, -t},     BlochVector{-t, -t, t},
      BlochVector{0.2, -0.1, 0.3}, BlochVector{0.0, 0.0, 0.0}};
  const Eigen::Matrix2cd psi = density_of(distinctness_psi_bloch());

  // Failed-branch outputs, tensored with a fresh psi, plus the recovery
  // targets.
  std::array<Eigen::Matrix4cd, 6> probe_inputs;
  std::array<Eigen::Matrix2cd, 6> targets;
  const PostselectedCircuit failed{pc.clifford, 1 - pc.outcome};
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const Eigen::Matrix2cd phi = density_of(phis[i]);
    probe_inputs[i] = kron2(output_state(failed, kron2(phi, psi)).state, psi);
    targets[i] = phi;
  }

  const CliffordGroupTable& table = clifford_group(2);
  const std::vector<Eigen::MatrixXcd>& mats = clifford_group_matrices(2);
  std::size_t candidates_found = 0;
  for (std::size_t ordinal = 0; ordinal < table.size(); ++ordinal) {
    for (int b = 0; b < 2; ++b) {
      const KrausMatrix k =
          kraus_from_matrix(Eigen::Matrix4cd(mats[ordinal]), b);
      bool recovers = true;
      for (std::size_t i = 0; i < probe_inputs.size() && recovers; ++i) {
        const Eigen::Matrix2cd projected = k * probe_inputs[i] * k.adjoint();
        const double q = projected.trace().real();
        if (q <= kProbeProbabilityFloor) {
          recovers = false;
          break;
        }
        recovers = ((projected / q) - targets[i]).cwiseAbs().maxCoeff() <=
                   kProbeStateTol;
      }
      const bool equivalent = kraus_proportional(k, k_spec);
      if (recovers != equivalent) return false;
      if (recovers) ++candidates_found;
    }
  }
  return candidates_found > 0;
}

BlochVector distinctness_phi2_bloch() {
  return {std::sqrt(2.0 / 17.0), std::sqrt(5.0 / 17.0),
          std::sqrt(10.0 / 17.0)};
}

BlochVector distinctness_psi_bloch() {
  return {std::sqrt(1.0 / 11.0), std::sqrt(3.0 / 11.0), std::sqrt(7.0 / 11.0)};
}

std::vector<DistinctnessRow> distinctness_table() {
  const BlochVector phi2 = distinctness_phi2_bloch();
  const BlochVector psi = distinctness_psi_bloch();
  const std::array<double, 3> b2{phi2.x, phi2.y, phi2.z};
  const std::array<double, 3> bp{psi.x, psi.y, psi.z};
  std::vector<DistinctnessRow> rows;
  rows.reserve(18);
  for (int sign : {+1, -1}) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        // lambda30 = sigma_j0 and lambda33 = sign * sigma_0k, so that
        // lambda03 = lambda30 * lambda33 with a03 = a30 * a33.
        DistinctnessRow row;
        row.lambda03 = {sign, static_cast<SinglePauli>(j),
                        static_cast<SinglePauli>(k)};
        row.a30 = b2[j - 1];
        row.a33 = sign * bp[k - 1];
        row.a03 = row.a30 * row.a33;
        row.v = (row.a30 + row.a33) / (1.0 + row.a03);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace stabrec
