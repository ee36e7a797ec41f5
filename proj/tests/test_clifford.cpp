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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "stabrec/clifford.hpp"
#include "stabrec/words.hpp"

using namespace stabrec;
using P = SinglePauli;

namespace {

// Dense conjugation oracle: U (sign * sigma_j (x) sigma_k) U^dag.
Eigen::MatrixXcd conj_oracle(const Eigen::MatrixXcd& u,
                             const Eigen::MatrixXcd& p) {
  return u * p * u.adjoint();
}

Eigen::MatrixXcd dense_pauli(const SignedTwoQubitPauli& p, int arity) {
  if (arity == 1) {
    return double(p.sign) * oracle::paulis()[index_of(p.j)];
  }
  return oracle::two_qubit_pauli(p.sign, index_of(p.j), index_of(p.k));
}

}  // namespace

TEST_CASE("group orders are 24 and 11520") {
  CHECK(clifford_group(1).size() == 24);
  CHECK(clifford_group(2).size() == 11520);
}

TEST_CASE("identity element sits at ordinal 0 with an empty word") {
  for (int arity : {1, 2}) {
    const CliffordGroupTable& table = clifford_group(arity);
    CHECK(table[0].is_identity());
    CHECK(table[0].word.empty());
    CHECK(table.ordinal_of(identity_element(arity)) == 0);
  }
}

TEST_CASE("tableau conjugation agrees with the dense oracle everywhere") {
  std::mt19937_64 rng(5);
  for (int arity : {1, 2}) {
    const CliffordGroupTable& table = clifford_group(arity);
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    const std::size_t samples = arity == 1 ? table.size() : 500;
    for (std::size_t n = 0; n < samples; ++n) {
      const CliffordElement& e =
          arity == 1 ? table[n] : table[pick(rng)];
      const Eigen::MatrixXcd u = matrix_of(e);
      const int k_max = arity == 1 ? 0 : 3;
      for (int j = 0; j <= 3; ++j) {
        for (int k = 0; k <= k_max; ++k) {
          if (j == 0 && k == 0) continue;
          const SignedTwoQubitPauli p{+1, static_cast<P>(j),
                                      static_cast<P>(k)};
          const SignedTwoQubitPauli img = conjugate(e, p);
          const Eigen::MatrixXcd expected = conj_oracle(u, dense_pauli(p, arity));
          CHECK((expected - dense_pauli(img, arity)).cwiseAbs().maxCoeff() <
                1e-12);
        }
      }
    }
  }
}

TEST_CASE("CNOT maps sigma_33 to sigma_03") {
  const SignedTwoQubitPauli img =
      conjugate(cnot_element(), {+1, P::Z, P::Z});
  CHECK(img == SignedTwoQubitPauli{+1, P::I, P::Z});
}

TEST_CASE("H maps X to Z; P-squared flips X; P inverse sends X to -Y") {
  const CliffordElement h = generator_element(Gate::H1, 1);
  CHECK(conjugate(h, {+1, P::X, P::I}) == SignedTwoQubitPauli{+1, P::Z, P::I});

  const CliffordElement p = generator_element(Gate::P1, 1);
  const CliffordElement pp = compose(p, p);
  CHECK(conjugate(pp, {+1, P::X, P::I}) ==
        SignedTwoQubitPauli{-1, P::X, P::I});

  // dense oracle: P^dag X P = -Y
  const Eigen::Matrix2cd expected =
      oracle::phase_gate().adjoint() * oracle::paulis()[1] *
      oracle::phase_gate();
  CHECK((expected + oracle::paulis()[2]).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(conjugate(invert(p), {+1, P::X, P::I}) ==
        SignedTwoQubitPauli{-1, P::Y, P::I});
}

TEST_CASE("compose/invert round trips") {
  std::mt19937_64 rng(17);
  for (int arity : {1, 2}) {
    const CliffordGroupTable& table = clifford_group(arity);
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    for (int n = 0; n < 100; ++n) {
      const CliffordElement& e = table[pick(rng)];
      CHECK(compose(e, identity_element(arity)) == e);
      CHECK(compose(e, invert(e)).is_identity());
      CHECK(compose(invert(e), e).is_identity());
    }
  }
  const CliffordElement h = generator_element(Gate::H1, 1);
  CHECK(compose(h, h).is_identity());
  CHECK(invert(cnot_element()) == cnot_element());
}

TEST_CASE("words realize the inverse matrix exactly") {
  std::mt19937_64 rng(23);
  const CliffordGroupTable& table = clifford_group(2);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  for (int n = 0; n < 50; ++n) {
    const CliffordElement& e = table[pick(rng)];
    const Eigen::MatrixXcd prod = matrix_of(e) * matrix_of(invert(e));
    CHECK(equal_up_to_phase(prod, Eigen::MatrixXcd::Identity(4, 4), 1e-10));
  }
}

TEST_CASE("tableau composition agrees with matrix multiplication") {
  std::mt19937_64 rng(31);
  const CliffordGroupTable& table = clifford_group(2);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  for (int n = 0; n < 1000; ++n) {
    const CliffordElement& a = table[pick(rng)];
    const CliffordElement& b = table[pick(rng)];
    const CliffordElement c = compose(a, b);
    // Tableau of the composition equals the tableau recovered from the
    // matrix product.
    const Eigen::MatrixXcd m = matrix_of(a) * matrix_of(b);
    for (int i = 0; i < 4; ++i) {
      const SignedTwoQubitPauli gen = identity_element(2).images[i];
      const Eigen::MatrixXcd expected = conj_oracle(m, dense_pauli(gen, 2));
      CHECK((expected - dense_pauli(c.images[i], 2)).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("CNOT generator matrix matches the reference matrix") {
  CHECK((matrix_of(cnot_element()) - oracle::cnot()).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("word [H1, CNOT] matrix is consistent with its tableau") {
  const CliffordElement e =
      compose(cnot_element(), generator_element(Gate::H1));
  const Eigen::MatrixXcd expected =
      oracle::cnot() * oracle::kron(oracle::hadamard(),
                                    Eigen::Matrix2cd::Identity());
  CHECK((matrix_of(e) - expected).cwiseAbs().maxCoeff() < 1e-15);
  for (int i = 0; i < 4; ++i) {
    const SignedTwoQubitPauli gen = identity_element(2).images[i];
    const Eigen::MatrixXcd img = conj_oracle(matrix_of(e), dense_pauli(gen, 2));
    CHECK((img - dense_pauli(e.images[i], 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("enumeration is deterministic and BFS words are shortest-found") {
  const CliffordGroupTable& table = clifford_group(1);
  // BFS layering: word lengths are nondecreasing along ordinals.
  for (std::size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i].word.size() >= table[i - 1].word.size());
  }
  CHECK(table[1].word == std::vector<Gate>{Gate::H1});
  CHECK(table[2].word == std::vector<Gate>{Gate::P1});
  std::ostringstream first, second;
  write_table_listing(first, clifford_group(1));
  write_table_listing(second, enumerate_group(1));
  CHECK(first.str() == second.str());
}

TEST_CASE("conjugation preserves the commutation structure") {
  std::mt19937_64 rng(41);
  const CliffordGroupTable& table = clifford_group(2);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  const std::array<SignedTwoQubitPauli, 4> gens =
      identity_element(2).images;
  for (int n = 0; n < 500; ++n) {
    const CliffordElement& e = table[pick(rng)];
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        CHECK(commutes(gens[a], gens[b]) ==
              commutes(conjugate(e, gens[a]), conjugate(e, gens[b])));
      }
    }
  }
}

TEST_CASE("embedding and swap behave as tensor-level operations") {
  const CliffordElement h = generator_element(Gate::H1, 1);
  CHECK(embed_on_wire(h, 0) == generator_element(Gate::H1, 2));
  CHECK(embed_on_wire(h, 1) == generator_element(Gate::H2, 2));
  const Eigen::MatrixXcd swap = matrix_of(swap_element());
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 0) = expected(1, 2) = expected(2, 1) = expected(3, 3) = 1;
  CHECK(equal_up_to_phase(swap, expected, 1e-12));
}

TEST_CASE("arity mismatches are rejected") {
  CHECK_THROWS_AS(
      compose(identity_element(1), identity_element(2)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      conjugate(identity_element(1), SignedTwoQubitPauli{+1, P::X, P::X}),
      std::invalid_argument);
}

TEST_CASE("circuit words parse left to right") {
  const CliffordElement zc = parse_circuit_word("Z1 CNOT");
  const Eigen::MatrixXcd expected =
      oracle::cnot() * oracle::kron(oracle::paulis()[3],
                                    Eigen::Matrix2cd::Identity());
  CHECK(equal_up_to_phase(matrix_of(zc), expected, 1e-12));
  CHECK(parse_circuit_word("").is_identity());
  CHECK(parse_circuit_word("I").is_identity());
  CHECK(parse_circuit_word("H1 H1").is_identity());
  CHECK(parse_circuit_word("SWAP") == swap_element());
  CHECK_THROWS_AS(parse_circuit_word("H3"), std::invalid_argument);
}
