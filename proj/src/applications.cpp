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

#include "stabrec/applications.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabrec {

LadderState ladder_state(int i) {
  if (i < 0) throw std::invalid_argument("ladder index must be nonnegative");
  const double tan_pi8 = std::tan(std::numbers::pi / 8.0);
  return {i, std::atan(std::pow(tan_pi8, i + 1))};
}

Eigen::Matrix2cd ladder_density(int i) {
  const double theta = ladder_state(i).theta;
  return density_of({std::sin(2.0 * theta), 0.0, std::cos(2.0 * theta)});
}

BranchOutputs ladder_step(int i) {
  const Eigen::Matrix4cd rho = kron2(ladder_density(i), ladder_density(0));
  return {output_state({cnot_element(), 0}, rho),
          output_state({cnot_element(), 1}, rho)};
}

Eigen::Matrix2cd phase_resource(double gamma) {
  return density_of({std::cos(gamma), std::sin(gamma), 0.0});
}

BranchOutputs par_rotate(const Eigen::Matrix2cd& q, double gamma) {
  const Eigen::Matrix4cd rho = kron2(q, phase_resource(gamma));
  return {output_state({cnot_element(), 0}, rho),
          output_state({cnot_element(), 1}, rho)};
}

}  // namespace stabrec
