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

#include "stabrec/pauli.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

namespace stabrec {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// sigma_a * sigma_b = i^kPhaseExp[a][b] * sigma_kProduct[a][b]
constexpr int kProduct[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr int kPhaseExp[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // ZX = iY, ZY = -iX
};

}  // namespace

SinglePauli single_pauli_from_index(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("single-qubit Pauli index must be 0..3");
  }
  return static_cast<SinglePauli>(index);
}

char letter_of(SinglePauli p) { return "IXYZ"[index_of(p)]; }

const Eigen::Matrix2cd& pauli_matrix(SinglePauli p) {
  static const std::array<Eigen::Matrix2cd, 4> mats = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -kI, kI, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return mats[index_of(p)];
}

PhasedPauliProduct mul(const PhasedPauliProduct& a,
                       const PhasedPauliProduct& b) {
  const int ja = index_of(a.first), jb = index_of(b.first);
  const int ka = index_of(a.second), kb = index_of(b.second);
  PhasedPauliProduct out;
  out.phase_exp = (a.phase_exp + b.phase_exp + kPhaseExp[ja][jb] +
                   kPhaseExp[ka][kb]) &
                  3;
  out.first = static_cast<SinglePauli>(kProduct[ja][jb]);
  out.second = static_cast<SinglePauli>(kProduct[ka][kb]);
  return out;
}

std::string SignedTwoQubitPauli::str() const {
  std::string s(sign < 0 ? "-" : "+");
  s += "sigma_";
  s += static_cast<char>('0' + index_of(j));
  s += static_cast<char>('0' + index_of(k));
  return s;
}

Eigen::Matrix4cd matrix_of(const SignedTwoQubitPauli& p) {
  return static_cast<double>(p.sign) * kron2(pauli_matrix(p.j), pauli_matrix(p.k));
}

PhasedPauliProduct as_product(const SignedTwoQubitPauli& p) {
  return {p.sign < 0 ? 2 : 0, p.j, p.k};
}

SignedTwoQubitPauli as_signed(const PhasedPauliProduct& p) {
  if (!p.hermitian()) {
    throw std::invalid_argument("Pauli product has an imaginary phase");
  }
  return {p.phase_exp == 2 ? -1 : +1, p.first, p.second};
}

PhasedPauliProduct pauli_mul(const SignedTwoQubitPauli& a,
                             const SignedTwoQubitPauli& b) {
  return mul(as_product(a), as_product(b));
}

bool commutes(const SignedTwoQubitPauli& a, const SignedTwoQubitPauli& b) {
  return pauli_mul(a, b).phase_exp == pauli_mul(b, a).phase_exp;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector bloch_of(const Eigen::Matrix2cd& rho) {
  BlochVector v;
  v.x = (pauli_matrix(SinglePauli::X) * rho).trace().real();
  v.y = (pauli_matrix(SinglePauli::Y) * rho).trace().real();
  v.z = (pauli_matrix(SinglePauli::Z) * rho).trace().real();
  return v;
}

Eigen::Matrix2cd density_of(const BlochVector& v) {
  if (v.norm() > 1.0 + 1e-9) {
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  }
  return 0.5 * (pauli_matrix(SinglePauli::I) +
                v.x * pauli_matrix(SinglePauli::X) +
                v.y * pauli_matrix(SinglePauli::Y) +
                v.z * pauli_matrix(SinglePauli::Z));
}

bool is_density_matrix(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) return false;
  if (std::abs(rho.trace() - std::complex<double>{1.0, 0.0}) > 1e-12)
    return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  return es.eigenvalues().minCoeff() >= -1e-9;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace stabrec
