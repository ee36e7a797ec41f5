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

#include "stabrec/circuits.hpp"

#include <stdexcept>

namespace stabrec {

KrausMatrix kraus_from_matrix(const Eigen::Matrix4cd& unitary, int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("outcome bit must be 0 or 1");
  }
  KrausMatrix k;
  k.row(0) = unitary.row(outcome);
  k.row(1) = unitary.row(2 + outcome);
  return k;
}

KrausMatrix kraus_of(const PostselectedCircuit& pc) {
  return kraus_from_matrix(matrix_of(pc.clifford), pc.outcome);
}

double outcome_probability(const PostselectedCircuit& pc,
                           const Eigen::Matrix4cd& rho) {
  const KrausMatrix k = kraus_of(pc);
  return (k * rho * k.adjoint()).trace().real();
}

MeasuredOutput output_state(const PostselectedCircuit& pc,
                            const Eigen::Matrix4cd& rho) {
  const KrausMatrix k = kraus_of(pc);
  const Eigen::Matrix2cd projected = k * rho * k.adjoint();
  const double probability = projected.trace().real();
  if (probability <= kZeroProbabilityTol) {
    throw ZeroProbabilityError("postselection branch has zero probability");
  }
  return {probability, projected / probability};
}

bool kraus_proportional(const KrausMatrix& a, const KrausMatrix& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const std::complex<double> phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > kKrausTol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() <= kKrausTol;
}

bool strictly_equivalent(const PostselectedCircuit& a,
                         const PostselectedCircuit& b) {
  return kraus_proportional(kraus_of(a), kraus_of(b));
}

std::optional<CliffordElement> clifford_equivalent(
    const PostselectedCircuit& a, const PostselectedCircuit& b) {
  const KrausMatrix ka = kraus_of(a);
  const KrausMatrix kb = kraus_of(b);
  // Both Kraus maps are coisometries, so any G with K_a = phase * G K_b must
  // equal K_a K_b^dag (up to the phase); no search over states is needed.
  const Eigen::Matrix2cd g = ka * kb.adjoint();
  if ((ka - g * kb).cwiseAbs().maxCoeff() > kKrausTol) return std::nullopt;
  const CliffordGroupTable& table = clifford_group(1);
  const std::vector<Eigen::MatrixXcd>& mats = clifford_group_matrices(1);
  for (std::size_t ordinal = 0; ordinal < table.size(); ++ordinal) {
    if (equal_up_to_phase(g, mats[ordinal], 1e-8)) {
      return table[ordinal];
    }
  }
  return std::nullopt;
}

}  // namespace stabrec
