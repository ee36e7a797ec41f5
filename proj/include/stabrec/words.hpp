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

#include "stabrec/clifford.hpp"

namespace stabrec {

/// Parse a whitespace-separated circuit word over the tokens
///   H1 H2 P1 P2 CNOT SWAP X1 X2 Y1 Y2 Z1 Z2
/// composed left to right (the first token acts first).  "I" (or an empty
/// word) names the identity circuit.  Throws std::invalid_argument on an
/// unknown token.
CliffordElement parse_circuit_word(const std::string& text);

}  // namespace stabrec
