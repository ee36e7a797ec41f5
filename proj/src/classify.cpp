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

#include "stabrec/classify.hpp"

#include <stdexcept>
#include <unordered_set>

namespace stabrec {

namespace {

using P = SinglePauli;

// Snap a numerically unitary 2x2 onto the single-qubit Clifford table.  A
// failure here indicates a bug, not an input condition.
const CliffordElement& snap_to_single_clifford(const Eigen::Matrix2cd& m) {
  const CliffordGroupTable& table = clifford_group(1);
  const std::vector<Eigen::MatrixXcd>& mats = clifford_group_matrices(1);
  for (std::size_t ordinal = 0; ordinal < table.size(); ++ordinal) {
    if (equal_up_to_phase(m, mats[ordinal], 1e-8)) {
      return table[ordinal];
    }
  }
  throw std::logic_error("residual gate is not a single-qubit Clifford");
}

// The measurement-free part of the canonical circuit for a given projector
// Pauli; its projector equals lambda by construction.
CliffordElement base_circuit(FormKind kind, const CliffordElement& g1,
                             const CliffordElement* g2) {
  switch (kind) {
    case FormKind::Trivial:
      return embed_on_wire(g1, 1);
    case FormKind::Swap:
      return compose(embed_on_wire(g1, 1), swap_element());
    case FormKind::Interacting:
      return compose(cnot_element(), tensor_product(g1, *g2));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

const char* form_kind_name(FormKind kind) {
  switch (kind) {
    case FormKind::Trivial:
      return "trivial";
    case FormKind::Swap:
      return "swap";
    case FormKind::Interacting:
      return "interacting";
  }
  throw std::logic_error("unreachable");
}

const CliffordElement& z_conjugator(SinglePauli axis, int sign) {
  // W^dag Z W = sign*axis for W in {I, X, H, HZ, HP^3, HP}.
  static const std::array<CliffordElement, 6> lookup = [] {
    const CliffordElement h = generator_element(Gate::H1, 1);
    const CliffordElement p = generator_element(Gate::P1, 1);
    const CliffordElement z = pauli_gate_element(P::Z);
    std::array<CliffordElement, 6> w;
    w[0] = h;                                    // +X
    w[1] = compose(h, z);                        // -X
    w[2] = compose(h, compose(p, compose(p, p)));  // +Y
    w[3] = compose(h, p);                        // -Y
    w[4] = identity_element(1);                  // +Z
    w[5] = pauli_gate_element(P::X);             // -Z
    return w;
  }();
  if (axis == P::I) {
    throw std::invalid_argument("z_conjugator target must be nontrivial");
  }
  return lookup[2 * (index_of(axis) - 1) + (sign < 0 ? 1 : 0)];
}

ProjectorDecomposition projector_pauli(const PostselectedCircuit& pc) {
  // lambda = (-1)^b C^dag sigma_03 C: search the basis Pauli whose image
  // under C is +/- sigma_03.
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; k <= 3; ++k) {
      if (j == 0 && k == 0) continue;
      const SignedTwoQubitPauli basis{+1, static_cast<P>(j),
                                      static_cast<P>(k)};
      const SignedTwoQubitPauli img = conjugate(pc.clifford, basis);
      if (img.j == P::I && img.k == P::Z) {
        const int sign = pc.outcome == 0 ? img.sign : -img.sign;
        return {SignedTwoQubitPauli{sign, basis.j, basis.k}};
      }
    }
  }
  throw std::logic_error("conjugation tableau is not invertible");
}

PostselectedCircuit reconstruct(const CanonicalForm& form) {
  const CliffordElement base =
      base_circuit(form.kind, form.g1, form.g2 ? &*form.g2 : nullptr);
  return {compose(embed_on_wire(form.g3, 0), base), form.outcome};
}

CanonicalForm canonicalize(const PostselectedCircuit& pc) {
  const SignedTwoQubitPauli lambda = projector_pauli(pc).lambda03;
  CanonicalForm form;
  if (lambda.j == P::I) {
    form.kind = FormKind::Trivial;
    form.g1 = z_conjugator(lambda.k, lambda.sign);
  } else if (lambda.k == P::I) {
    form.kind = FormKind::Swap;
    form.g1 = z_conjugator(lambda.j, lambda.sign);
  } else {
    form.kind = FormKind::Interacting;
    form.g1 = z_conjugator(lambda.j, lambda.sign);
    form.g2 = z_conjugator(lambda.k, +1);
  }
  // The residual is the product of the two Kraus coisometries.
  const CliffordElement base =
      base_circuit(form.kind, form.g1, form.g2 ? &*form.g2 : nullptr);
  const KrausMatrix k_circuit = kraus_of(pc);
  const KrausMatrix k_base =
      kraus_from_matrix(Eigen::Matrix4cd(matrix_of(base)), 0);
  form.g3 = snap_to_single_clifford(k_circuit * k_base.adjoint());
  return form;
}

CanonicalForm flip_outcome(const CanonicalForm& form) {
  const CliffordElement& x = pauli_gate_element(P::X);
  CanonicalForm flipped = form;
  if (form.kind == FormKind::Interacting) {
    flipped.g2 = compose(x, *form.g2);
  } else {
    flipped.g1 = compose(x, form.g1);
  }
  return flipped;
}

bool is_interacting(const PostselectedCircuit& pc) {
  return projector_pauli(pc).lambda03.in_nontrivial_set();
}

Census census() {
  const CliffordGroupTable& table = clifford_group(2);
  Census counts;
  std::unordered_set<std::uint32_t> projector_keys;
  std::unordered_set<std::uint32_t> interacting, trivial, swap;
  std::unordered_set<std::uint64_t> strict_interacting;
  for (const CliffordElement& element : table.elements) {
    for (int b = 0; b < 2; ++b) {
      const PostselectedCircuit pc{element, b};
      const SignedTwoQubitPauli lambda = projector_pauli(pc).lambda03;
      projector_keys.insert(lambda.key());
      if (lambda.j == P::I) {
        trivial.insert(lambda.key());
      } else if (lambda.k == P::I) {
        swap.insert(lambda.key());
      } else {
        interacting.insert(lambda.key());
        const CanonicalForm form = canonicalize(pc);
        const std::uint64_t g3 = clifford_group(1).ordinal_of(form.g3);
        strict_interacting.insert(std::uint64_t{lambda.key()} << 8 | g3);
      }
    }
  }
  counts.projector_classes = projector_keys.size();
  counts.interacting_classes = interacting.size();
  counts.trivial_classes = trivial.size();
  counts.swap_classes = swap.size();
  counts.strict_interacting_classes = strict_interacting.size();
  return counts;
}

}  // namespace stabrec
