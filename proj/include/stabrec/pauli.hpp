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

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace stabrec {

/// Index of a single-qubit Pauli operator.
enum class SinglePauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline int index_of(SinglePauli p) { return static_cast<int>(p); }
SinglePauli single_pauli_from_index(int index);  // throws on index out of range
char letter_of(SinglePauli p);

/// 2x2 matrix realization of a single-qubit Pauli.
const Eigen::Matrix2cd& pauli_matrix(SinglePauli p);

/// i^phase_exp * (first (x) second).  Phases are kept as an exponent of i
/// modulo 4 so the Pauli algebra stays exact; single-qubit products leave
/// `second` at I.
struct PhasedPauliProduct {
  int phase_exp = 0;  // exponent of i, reduced mod 4
  SinglePauli first = SinglePauli::I;
  SinglePauli second = SinglePauli::I;

  bool hermitian() const { return (phase_exp & 1) == 0; }
  friend bool operator==(const PhasedPauliProduct&,
                         const PhasedPauliProduct&) = default;
};

/// Componentwise product with exact phase tracking.
PhasedPauliProduct mul(const PhasedPauliProduct& a, const PhasedPauliProduct& b);

/// +/- sigma_j (x) sigma_k.  Hermitian by construction; membership in the
/// nontrivial set requires j != I and k != I.
struct SignedTwoQubitPauli {
  int sign = +1;  // +1 or -1
  SinglePauli j = SinglePauli::I;
  SinglePauli k = SinglePauli::I;

  bool nontrivial() const { return j != SinglePauli::I || k != SinglePauli::I; }
  bool in_nontrivial_set() const {
    return j != SinglePauli::I && k != SinglePauli::I;
  }
  /// 5-bit packing (sign, j, k); distinct for distinct operators.
  std::uint32_t key() const {
    return static_cast<std::uint32_t>(sign < 0) << 4 |
           static_cast<std::uint32_t>(index_of(j)) << 2 |
           static_cast<std::uint32_t>(index_of(k));
  }
  std::string str() const;  // e.g. "+sigma_33"

  friend bool operator==(const SignedTwoQubitPauli&,
                         const SignedTwoQubitPauli&) = default;
};

/// Dense 4x4 realization sign * kron(sigma_j, sigma_k); qubit 1 is the left
/// tensor factor.
Eigen::Matrix4cd matrix_of(const SignedTwoQubitPauli& p);

PhasedPauliProduct as_product(const SignedTwoQubitPauli& p);
/// Inverse of as_product; throws std::invalid_argument if the phase is odd.
SignedTwoQubitPauli as_signed(const PhasedPauliProduct& p);

/// Product of two signed two-qubit Paulis, phase tracked exactly.
PhasedPauliProduct pauli_mul(const SignedTwoQubitPauli& a,
                             const SignedTwoQubitPauli& b);

/// True iff the two operators commute (they otherwise anticommute).
bool commutes(const SignedTwoQubitPauli& a, const SignedTwoQubitPauli& b);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// (Tr(X rho), Tr(Y rho), Tr(Z rho)) of a single-qubit density matrix.
BlochVector bloch_of(const Eigen::Matrix2cd& rho);

/// (I + xX + yY + zZ) / 2.  Throws std::invalid_argument when the vector
/// lies outside the Bloch ball (|v| > 1 + 1e-9).
Eigen::Matrix2cd density_of(const BlochVector& v);

/// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-9.
bool is_density_matrix(const Eigen::MatrixXcd& rho);

/// kron(a, b) with qubit 1 on the left.
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

}  // namespace stabrec
