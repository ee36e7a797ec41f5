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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabrec/pauli.hpp"

namespace stabrec {

/// Clifford group generators.  Subscripts name the wire; arity-1 elements use
/// H1/P1 only.
enum class Gate : std::uint8_t { H1, P1, H2, P2, CNOT };

std::string gate_name(Gate g);

/// A one- or two-qubit Clifford element, identified (modulo global phase) by
/// its conjugation tableau.  `images[0..1]` are the images of X and Z on wire
/// 1; `images[2..3]` are the images of I(x)X and I(x)Z and stay at the
/// identity slots for arity 1.  Arity-1 Paulis are embedded as sigma_j0.
///
/// `word` is a generator sequence realizing the element, applied left to
/// right (so the unitary is the reversed matrix product).  Words are not
/// canonical; two distinct words may name the same element.
struct CliffordElement {
  int arity = 1;
  std::array<SignedTwoQubitPauli, 4> images{
      SignedTwoQubitPauli{+1, SinglePauli::X, SinglePauli::I},
      SignedTwoQubitPauli{+1, SinglePauli::Z, SinglePauli::I},
      SignedTwoQubitPauli{+1, SinglePauli::I, SinglePauli::X},
      SignedTwoQubitPauli{+1, SinglePauli::I, SinglePauli::Z}};
  std::vector<Gate> word;

  /// Packed tableau; uniquely identifies the element modulo global phase.
  std::uint32_t tableau_key() const;
  bool is_identity() const;

  /// Tableau equality (words are ignored).
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.arity == b.arity && a.images == b.images;
  }
};

CliffordElement identity_element(int arity);
CliffordElement generator_element(Gate g, int arity = 2);

/// C p C^dag with exact sign tracking.  Throws std::invalid_argument when the
/// arities do not match (for arity 1 the input must have k = I).
SignedTwoQubitPauli conjugate(const CliffordElement& c,
                              const SignedTwoQubitPauli& p);

/// Composition a.b (b acts first).  Throws on arity mismatch.
CliffordElement compose(const CliffordElement& a, const CliffordElement& b);

CliffordElement invert(const CliffordElement& c);

/// Product of the generator matrices along the word: 2x2 for arity 1, 4x4 for
/// arity 2.  Agrees with the tableau action up to a global phase.
Eigen::MatrixXcd matrix_of(const CliffordElement& c);

/// Lift an arity-1 element onto wire 0 or 1 of a two-qubit register.
CliffordElement embed_on_wire(const CliffordElement& single, int wire);
CliffordElement tensor_product(const CliffordElement& first,
                               const CliffordElement& second);

const CliffordElement& swap_element();
const CliffordElement& cnot_element();
/// Arity-1 Pauli gates as Clifford elements.
const CliffordElement& pauli_gate_element(SinglePauli p);

struct CliffordGroupTable {
  int arity = 1;
  std::vector<CliffordElement> elements;
  std::unordered_map<std::uint32_t, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  const CliffordElement& operator[](std::size_t ordinal) const {
    return elements[ordinal];
  }
  /// Ordinal of an element by tableau; throws std::out_of_range if absent.
  std::size_t ordinal_of(const CliffordElement& c) const;
};

/// Breadth-first closure from the identity over the generator set
/// (H1, P1, H2, P2, CNOT), deduplicated by tableau; every element carries a
/// shortest-found word.  Sizes are 24 (arity 1) and 11520 (arity 2).
CliffordGroupTable enumerate_group(int arity);

/// Cached shared tables; built once, immutable afterwards.
const CliffordGroupTable& clifford_group(int arity);
/// Matrix realizations of every table element, cached in ordinal order.
const std::vector<Eigen::MatrixXcd>& clifford_group_matrices(int arity);

/// Deterministic `ordinal,word,images...` listing for golden-file tests.
void write_table_listing(std::ostream& out, const CliffordGroupTable& table);

std::string word_to_string(const std::vector<Gate>& word);

/// a == phase * b for some unimodular phase, within tol (max-abs).
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       double tol);

}  // namespace stabrec
