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

#include "stabrec/clifford.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace stabrec {

namespace {

using P = SinglePauli;

SignedTwoQubitPauli sp(int sign, P j, P k) { return {sign, j, k}; }

// Conjugation image of the X- or Z-axis Pauli on one wire, as a phased
// product.  The Y axis is reconstructed from Y = i X Z.
PhasedPauliProduct axis_image(const CliffordElement& c, int wire, P axis) {
  const SignedTwoQubitPauli& x_img = c.images[2 * wire];
  const SignedTwoQubitPauli& z_img = c.images[2 * wire + 1];
  switch (axis) {
    case P::I:
      return {};
    case P::X:
      return as_product(x_img);
    case P::Z:
      return as_product(z_img);
    case P::Y: {
      PhasedPauliProduct p = mul(as_product(x_img), as_product(z_img));
      p.phase_exp = (p.phase_exp + 1) & 3;
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

Eigen::Matrix2cd hadamard_matrix() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Eigen::Matrix2cd phase_gate_matrix() {
  Eigen::Matrix2cd p;
  p << 1, 0, 0, std::complex<double>{0, 1};
  return p;
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1;
  return c;
}

Eigen::MatrixXcd gate_matrix(Gate g, int arity) {
  static const Eigen::Matrix2cd h = hadamard_matrix();
  static const Eigen::Matrix2cd p = phase_gate_matrix();
  static const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  if (arity == 1) {
    switch (g) {
      case Gate::H1:
        return h;
      case Gate::P1:
        return p;
      default:
        throw std::invalid_argument("two-qubit gate in an arity-1 word");
    }
  }
  switch (g) {
    case Gate::H1:
      return kron2(h, id2);
    case Gate::P1:
      return kron2(p, id2);
    case Gate::H2:
      return kron2(id2, h);
    case Gate::P2:
      return kron2(id2, p);
    case Gate::CNOT:
      return cnot_matrix();
  }
  throw std::logic_error("unreachable");
}

std::vector<Gate> generator_order(int arity) {
  if (arity == 1) return {Gate::H1, Gate::P1};
  return {Gate::H1, Gate::P1, Gate::H2, Gate::P2, Gate::CNOT};
}

}  // namespace

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::H1:
      return "H1";
    case Gate::P1:
      return "P1";
    case Gate::H2:
      return "H2";
    case Gate::P2:
      return "P2";
    case Gate::CNOT:
      return "CNOT";
  }
  throw std::logic_error("unreachable");
}

std::uint32_t CliffordElement::tableau_key() const {
  std::uint32_t key = static_cast<std::uint32_t>(arity - 1);
  for (const SignedTwoQubitPauli& img : images) {
    key = key << 5 | img.key();
  }
  return key;
}

bool CliffordElement::is_identity() const {
  return *this == identity_element(arity);
}

CliffordElement identity_element(int arity) {
  if (arity != 1 && arity != 2) {
    throw std::invalid_argument("arity must be 1 or 2");
  }
  CliffordElement e;
  e.arity = arity;
  return e;
}

CliffordElement generator_element(Gate g, int arity) {
  CliffordElement e = identity_element(arity);
  e.word = {g};
  if (arity == 1) {
    switch (g) {
      case Gate::H1:  // X <-> Z
        e.images[0] = sp(+1, P::Z, P::I);
        e.images[1] = sp(+1, P::X, P::I);
        return e;
      case Gate::P1:  // X -> Y
        e.images[0] = sp(+1, P::Y, P::I);
        return e;
      default:
        throw std::invalid_argument("two-qubit gate in an arity-1 element");
    }
  }
  switch (g) {
    case Gate::H1:
      e.images[0] = sp(+1, P::Z, P::I);
      e.images[1] = sp(+1, P::X, P::I);
      return e;
    case Gate::P1:
      e.images[0] = sp(+1, P::Y, P::I);
      return e;
    case Gate::H2:
      e.images[2] = sp(+1, P::I, P::Z);
      e.images[3] = sp(+1, P::I, P::X);
      return e;
    case Gate::P2:
      e.images[2] = sp(+1, P::I, P::Y);
      return e;
    case Gate::CNOT:  // X1 -> X1X2, Z2 -> Z1Z2
      e.images[0] = sp(+1, P::X, P::X);
      e.images[3] = sp(+1, P::Z, P::Z);
      return e;
  }
  throw std::logic_error("unreachable");
}

SignedTwoQubitPauli conjugate(const CliffordElement& c,
                              const SignedTwoQubitPauli& p) {
  if (c.arity == 1 && p.k != P::I) {
    throw std::invalid_argument("arity mismatch in conjugate()");
  }
  PhasedPauliProduct out = axis_image(c, 0, p.j);
  if (c.arity == 2) {
    out = mul(out, axis_image(c, 1, p.k));
  }
  if (p.sign < 0) out.phase_exp = (out.phase_exp + 2) & 3;
  return as_signed(out);  // conjugation preserves Hermiticity
}

CliffordElement compose(const CliffordElement& a, const CliffordElement& b) {
  if (a.arity != b.arity) {
    throw std::invalid_argument("arity mismatch in compose()");
  }
  CliffordElement out = identity_element(a.arity);
  const int n_images = a.arity == 1 ? 2 : 4;
  for (int i = 0; i < n_images; ++i) {
    out.images[i] = conjugate(a, b.images[i]);
  }
  out.word = b.word;
  out.word.insert(out.word.end(), a.word.begin(), a.word.end());
  return out;
}

CliffordElement invert(const CliffordElement& c) {
  CliffordElement inv = identity_element(c.arity);
  // Invert the signed permutation that c induces on the basis Paulis.
  const int n_images = c.arity == 1 ? 2 : 4;
  const int k_max = c.arity == 1 ? 0 : 3;
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; k <= k_max; ++k) {
      if (j == 0 && k == 0) continue;
      const SignedTwoQubitPauli basis =
          sp(+1, static_cast<P>(j), static_cast<P>(k));
      const SignedTwoQubitPauli img = conjugate(c, basis);
      for (int i = 0; i < n_images; ++i) {
        const SignedTwoQubitPauli& gen = identity_element(c.arity).images[i];
        if (img.j == gen.j && img.k == gen.k) {
          inv.images[i] = sp(img.sign, basis.j, basis.k);
        }
      }
    }
  }
  inv.word.reserve(c.word.size());
  for (auto it = c.word.rbegin(); it != c.word.rend(); ++it) {
    switch (*it) {
      case Gate::P1:  // P^3 = P^dag
        inv.word.insert(inv.word.end(), {Gate::P1, Gate::P1, Gate::P1});
        break;
      case Gate::P2:
        inv.word.insert(inv.word.end(), {Gate::P2, Gate::P2, Gate::P2});
        break;
      default:  // H and CNOT are involutions
        inv.word.push_back(*it);
        break;
    }
  }
  return inv;
}

Eigen::MatrixXcd matrix_of(const CliffordElement& c) {
  const int dim = c.arity == 1 ? 2 : 4;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (Gate g : c.word) {
    m = gate_matrix(g, c.arity) * m;
  }
  return m;
}

CliffordElement embed_on_wire(const CliffordElement& single, int wire) {
  if (single.arity != 1) {
    throw std::invalid_argument("embed_on_wire expects an arity-1 element");
  }
  if (wire != 0 && wire != 1) {
    throw std::invalid_argument("wire must be 0 or 1");
  }
  CliffordElement out = identity_element(2);
  for (int i = 0; i < 2; ++i) {
    const SignedTwoQubitPauli& img = single.images[i];
    out.images[2 * wire + i] = wire == 0 ? sp(img.sign, img.j, P::I)
                                         : sp(img.sign, P::I, img.j);
  }
  out.word.reserve(single.word.size());
  for (Gate g : single.word) {
    if (wire == 0) {
      out.word.push_back(g);
    } else {
      out.word.push_back(g == Gate::H1 ? Gate::H2 : Gate::P2);
    }
  }
  return out;
}

CliffordElement tensor_product(const CliffordElement& first,
                               const CliffordElement& second) {
  return compose(embed_on_wire(first, 0), embed_on_wire(second, 1));
}

const CliffordElement& swap_element() {
  static const CliffordElement swap = [] {
    const CliffordElement cnot = generator_element(Gate::CNOT);
    const CliffordElement hh = compose(generator_element(Gate::H1),
                                       generator_element(Gate::H2));
    return compose(cnot, compose(hh, compose(cnot, compose(hh, cnot))));
  }();
  return swap;
}

const CliffordElement& cnot_element() {
  static const CliffordElement cnot = generator_element(Gate::CNOT);
  return cnot;
}

const CliffordElement& pauli_gate_element(SinglePauli p) {
  static const std::array<CliffordElement, 4> gates = [] {
    const CliffordElement h = generator_element(Gate::H1, 1);
    const CliffordElement ph = generator_element(Gate::P1, 1);
    const CliffordElement z = compose(ph, ph);
    const CliffordElement x = compose(h, compose(z, h));
    const CliffordElement y = compose(z, x);  // conjugation action of Y
    return std::array<CliffordElement, 4>{identity_element(1), x, y, z};
  }();
  return gates[index_of(p)];
}

std::size_t CliffordGroupTable::ordinal_of(const CliffordElement& c) const {
  return index.at(c.tableau_key());
}

CliffordGroupTable enumerate_group(int arity) {
  CliffordGroupTable table;
  table.arity = arity;
  std::vector<CliffordElement> generators;
  for (Gate g : generator_order(arity)) {
    generators.push_back(generator_element(g, arity));
  }
  table.elements.push_back(identity_element(arity));
  table.index.emplace(table.elements[0].tableau_key(), 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t ordinal = frontier.front();
    frontier.pop_front();
    for (const CliffordElement& gen : generators) {
      CliffordElement next = compose(gen, table.elements[ordinal]);
      const std::uint32_t key = next.tableau_key();
      if (table.index.emplace(key, table.elements.size()).second) {
        frontier.push_back(table.elements.size());
        table.elements.push_back(std::move(next));
      }
    }
  }
  return table;
}

const CliffordGroupTable& clifford_group(int arity) {
  static const CliffordGroupTable one = enumerate_group(1);
  static const CliffordGroupTable two = enumerate_group(2);
  if (arity != 1 && arity != 2) {
    throw std::invalid_argument("arity must be 1 or 2");
  }
  return arity == 1 ? one : two;
}

const std::vector<Eigen::MatrixXcd>& clifford_group_matrices(int arity) {
  static const std::vector<Eigen::MatrixXcd> one = [] {
    std::vector<Eigen::MatrixXcd> mats;
    for (const CliffordElement& e : clifford_group(1).elements) {
      mats.push_back(matrix_of(e));
    }
    return mats;
  }();
  static const std::vector<Eigen::MatrixXcd> two = [] {
    std::vector<Eigen::MatrixXcd> mats;
    for (const CliffordElement& e : clifford_group(2).elements) {
      mats.push_back(matrix_of(e));
    }
    return mats;
  }();
  if (arity != 1 && arity != 2) {
    throw std::invalid_argument("arity must be 1 or 2");
  }
  return arity == 1 ? one : two;
}

void write_table_listing(std::ostream& out, const CliffordGroupTable& table) {
  out << (table.arity == 1 ? "ordinal,word,x1,z1\n"
                           : "ordinal,word,x1,z1,x2,z2\n");
  const int n_images = table.arity == 1 ? 2 : 4;
  for (std::size_t ordinal = 0; ordinal < table.size(); ++ordinal) {
    const CliffordElement& e = table[ordinal];
    out << ordinal << ',' << word_to_string(e.word);
    for (int i = 0; i < n_images; ++i) {
      out << ',' << e.images[i].str();
    }
    out << '\n';
  }
}

std::string word_to_string(const std::vector<Gate>& word) {
  if (word.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += gate_name(word[i]);
  }
  return s;
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const std::complex<double> phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace stabrec
