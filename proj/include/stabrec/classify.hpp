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

#include <cstddef>
#include <optional>

#include "stabrec/circuits.hpp"

namespace stabrec {

/// The signed Pauli lambda with 2 Pi = sigma_00 + lambda, where Pi is the
/// measurement projector pulled back through the circuit.  Two circuits share
/// lambda iff they are Clifford equivalent.
struct ProjectorDecomposition {
  SignedTwoQubitPauli lambda03;
};

ProjectorDecomposition projector_pauli(const PostselectedCircuit& pc);

enum class FormKind { Trivial, Swap, Interacting };

const char* form_kind_name(FormKind kind);

/// One of the three canonical shapes every postselected circuit reduces to,
/// always normalized to outcome 0:
///   Trivial:      (G3 (x) I) (I (x) G1)
///   Swap:         (G3 (x) I) (I (x) G1) SWAP
///   Interacting:  (G3 (x) I) CNOT (G1 (x) G2)
/// The original circuit is strictly equivalent to reconstruct(form).
struct CanonicalForm {
  FormKind kind = FormKind::Trivial;
  CliffordElement g1;                 // arity 1
  std::optional<CliffordElement> g2;  // arity 1, Interacting only
  CliffordElement g3;                 // arity 1, residual first-qubit gate
  int outcome = 0;                    // always 0 after normalization
};

PostselectedCircuit reconstruct(const CanonicalForm& form);

CanonicalForm canonicalize(const PostselectedCircuit& pc);

/// Canonical form of (C, 1-b) given the form of (C, b): the measurement flip
/// folds into an X on the measured wire, so G1 (Trivial/Swap) or G2
/// (Interacting) gains a leading X.  Flipping twice returns the original.
CanonicalForm flip_outcome(const CanonicalForm& form);

bool is_interacting(const PostselectedCircuit& pc);

/// The fixed lookup of single-qubit Cliffords W with W^dag Z W = sign*axis,
/// used to pick canonical G1/G2 deterministically.
const CliffordElement& z_conjugator(SinglePauli axis, int sign);

struct Census {
  std::size_t projector_classes = 0;
  std::size_t interacting_classes = 0;
  std::size_t trivial_classes = 0;
  std::size_t swap_classes = 0;
  std::size_t strict_interacting_classes = 0;
};

/// Sweep all 11520 x 2 postselected circuits, bucketing by projector Pauli
/// and, for the interacting ones, by strict class (projector plus residual).
Census census();

}  // namespace stabrec
