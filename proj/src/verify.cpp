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

#include "stabrec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "stabrec/classify.hpp"
#include "stabrec/recovery.hpp"

namespace stabrec {

namespace {

Eigen::Vector2cd random_pure_ket(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector2cd ket{{normal(rng), normal(rng)}, {normal(rng), normal(rng)}};
  return ket / ket.norm();
}

Eigen::Matrix2cd random_pure_density(std::mt19937_64& rng) {
  const Eigen::Vector2cd ket = random_pure_ket(rng);
  return ket * ket.adjoint();
}

// Reduced first-qubit state of a Haar-random two-qubit pure state.
Eigen::Matrix2cd random_mixed_density(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector4cd ket;
  for (int i = 0; i < 4; ++i) ket(i) = {normal(rng), normal(rng)};
  ket /= ket.norm();
  const Eigen::Matrix4cd rho = ket * ket.adjoint();
  Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      reduced(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    }
  }
  return reduced;
}

PostselectedCircuit random_interacting_circuit(std::mt19937_64& rng) {
  const CliffordGroupTable& table = clifford_group(2);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  std::uniform_int_distribution<int> bit(0, 1);
  for (;;) {
    PostselectedCircuit pc{table[pick(rng)], bit(rng)};
    if (is_interacting(pc)) return pc;
  }
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail = "") {
  return {std::move(name), true, std::move(detail)};
}

}  // namespace

CheckResult check_group_orders() {
  const std::size_t one = clifford_group(1).size();
  const std::size_t two = clifford_group(2).size();
  std::ostringstream detail;
  detail << "|C(1)| = " << one << ", |C(2)| = " << two;
  if (one != 24 || two != 11520) {
    return fail("group_orders", detail.str());
  }
  return pass("group_orders", detail.str());
}

CheckResult check_census() {
  const Census counts = census();
  std::ostringstream detail;
  detail << counts.projector_classes << " projector classes ("
         << counts.interacting_classes << " interacting, "
         << counts.trivial_classes << " trivial, " << counts.swap_classes
         << " swap), " << counts.strict_interacting_classes
         << " strict interacting";
  const bool ok = counts.projector_classes == 30 &&
                  counts.interacting_classes == 18 &&
                  counts.trivial_classes == 6 && counts.swap_classes == 6 &&
                  counts.strict_interacting_classes == 432;
  return ok ? pass("census", detail.str()) : fail("census", detail.str());
}

CheckResult check_canonicalization() {
  const CliffordGroupTable& table = clifford_group(2);
  std::size_t checked = 0;
  for (const CliffordElement& element : table.elements) {
    for (int b = 0; b < 2; ++b) {
      const PostselectedCircuit pc{element, b};
      if (!strictly_equivalent(pc, reconstruct(canonicalize(pc)))) {
        std::ostringstream detail;
        detail << "reconstruction mismatch at ordinal "
               << table.ordinal_of(element) << " bit " << b;
        return fail("canonicalization", detail.str());
      }
      ++checked;
    }
  }
  std::ostringstream detail;
  detail << checked << " circuits reconstruct strictly";
  return pass("canonicalization", detail.str());
}

CheckResult check_recovery_round_trip(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double max_state_err = 0.0;
  double max_prob_err = 0.0;
  const int n_pure = 1000, n_mixed = 200;
  for (int n = 0; n < n_pure + n_mixed; ++n) {
    const PostselectedCircuit pc = random_interacting_circuit(rng);
    const RecoverySpec spec = synthesize_recovery(pc);
    const Eigen::Matrix2cd g = matrix_of(spec.g);
    Eigen::Matrix2cd psi;
    do {
      psi = random_pure_density(rng);
    } while (std::abs(bloch_of(g * psi * g.adjoint()).z) >= 0.999);
    const Eigen::Matrix2cd phi =
        n < n_pure ? random_pure_density(rng) : random_mixed_density(rng);
    const MeasuredOutput failed =
        output_state({pc.clifford, 1 - pc.outcome}, kron2(phi, psi));
    const MeasuredOutput recovered =
        output_state(spec.circuit, kron2(failed.state, psi));
    max_state_err = std::max(
        max_state_err, (recovered.state - phi).cwiseAbs().maxCoeff());
    max_prob_err =
        std::max(max_prob_err, std::abs(recovery_probability(spec, pc, phi, psi) -
                                        recovered.probability));
  }
  std::ostringstream detail;
  detail << n_pure << " pure + " << n_mixed
         << " mixed instances; max state error " << max_state_err
         << ", max closed-form probability error " << max_prob_err;
  const bool ok = max_state_err <= 1e-9 && max_prob_err <= 1e-12;
  return ok ? pass("recovery_round_trip", detail.str())
            : fail("recovery_round_trip", detail.str());
}

CheckResult check_distinctness() {
  static constexpr double kExpected[18] = {
      0.5841, 0.7338, 0.8957, 0.7252, 0.8296, 0.9354, 0.8678, 0.9205, 0.9708,
      0.0463, -0.2183, -0.6260, 0.2879, 0.0280, -0.4501, 0.6055, 0.4083,
      -0.0792};
  const std::vector<DistinctnessRow> rows = distinctness_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i].v - kExpected[i]) > 5e-5) {
      std::ostringstream detail;
      detail << rows[i].lambda03.str() << ": v = " << rows[i].v
             << ", expected " << kExpected[i];
      return fail("distinctness_table", detail.str());
    }
  }
  std::vector<double> signed_values;
  for (const DistinctnessRow& row : rows) {
    signed_values.push_back(row.v);
    signed_values.push_back(-row.v);
  }
  std::sort(signed_values.begin(), signed_values.end());
  double min_gap = 2.0;
  for (std::size_t i = 1; i < signed_values.size(); ++i) {
    min_gap = std::min(min_gap, signed_values[i] - signed_values[i - 1]);
  }
  std::ostringstream detail;
  detail << "18 rows at 4 d.p.; min gap of the 36 signed values " << min_gap;
  return min_gap > 1e-3 ? pass("distinctness_table", detail.str())
                        : fail("distinctness_table", detail.str());
}

std::vector<PostselectedCircuit> interacting_class_representatives() {
  std::vector<PostselectedCircuit> reps;
  reps.reserve(18);
  for (const DistinctnessRow& row : distinctness_table()) {
    const CliffordElement g1 = z_conjugator(row.lambda03.j, row.lambda03.sign);
    const CliffordElement g2 = z_conjugator(row.lambda03.k, +1);
    reps.push_back(
        {compose(cnot_element(), tensor_product(g1, g2)), 0});
  }
  return reps;
}

CheckResult check_uniqueness() {
  const std::vector<PostselectedCircuit> reps =
      interacting_class_representatives();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!verify_uniqueness(reps[i])) {
      std::ostringstream detail;
      detail << "class " << projector_pauli(reps[i]).lambda03.str()
             << " admits an inequivalent recovery circuit";
      return fail("uniqueness", detail.str());
    }
  }
  return pass("uniqueness", "18 interacting classes swept exhaustively");
}

std::vector<CheckResult> run_verification_suites() {
  return {check_group_orders(),  check_census(),
          check_canonicalization(), check_recovery_round_trip(),
          check_distinctness(), check_uniqueness()};
}

}  // namespace stabrec
