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

#include <string>
#include <vector>

#include "stabrec/circuits.hpp"

namespace stabrec {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Group orders: |C(1)| = 24 and |C(2)| = 11520.
CheckResult check_group_orders();
/// Projector census: 30 classes split 18/6/6, 432 strict interacting ones.
CheckResult check_census();
/// Every one of the 23040 postselected circuits reconstructs strictly from
/// its canonical form.
CheckResult check_canonicalization();
/// Recovery round trip on random interacting circuits with pure and mixed
/// first-qubit states, and agreement of the closed-form recovery probability
/// with the direct outcome probability.
CheckResult check_recovery_round_trip(std::uint64_t seed = 20260809);
/// The 18-row distinctness table: v-values and the pairwise separation of the
/// 36 signed values.
CheckResult check_distinctness();
/// For a representative of each of the 18 interacting classes, the exhaustive
/// sweep finds exactly the strict equivalence class of the synthesized
/// recovery circuit.
CheckResult check_uniqueness();

/// Representative (CNOT(G1 (x) G2), 0) circuits, one per interacting class,
/// in distinctness_table row order.
std::vector<PostselectedCircuit> interacting_class_representatives();

std::vector<CheckResult> run_verification_suites();

}  // namespace stabrec
