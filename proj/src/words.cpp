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

#include "stabrec/words.hpp"

#include <sstream>
#include <stdexcept>

namespace stabrec {

namespace {

const CliffordElement& token_element(const std::string& token) {
  static const std::unordered_map<std::string, CliffordElement> tokens = [] {
    std::unordered_map<std::string, CliffordElement> m;
    m.emplace("H1", generator_element(Gate::H1));
    m.emplace("P1", generator_element(Gate::P1));
    m.emplace("H2", generator_element(Gate::H2));
    m.emplace("P2", generator_element(Gate::P2));
    m.emplace("CNOT", generator_element(Gate::CNOT));
    m.emplace("SWAP", swap_element());
    for (SinglePauli p : {SinglePauli::X, SinglePauli::Y, SinglePauli::Z}) {
      std::string name{letter_of(p)};
      m.emplace(name + "1", embed_on_wire(pauli_gate_element(p), 0));
      m.emplace(name + "2", embed_on_wire(pauli_gate_element(p), 1));
    }
    return m;
  }();
  auto it = tokens.find(token);
  if (it == tokens.end()) {
    throw std::invalid_argument("unknown circuit token: " + token);
  }
  return it->second;
}

}  // namespace

CliffordElement parse_circuit_word(const std::string& text) {
  CliffordElement circuit = identity_element(2);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "I" || token == "I\xE2\x8A\x97I") continue;  // identity
    circuit = compose(token_element(token), circuit);
  }
  return circuit;
}

}  // namespace stabrec
