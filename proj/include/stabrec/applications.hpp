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

#include "stabrec/circuits.hpp"

namespace stabrec {

/// Ladder state |H_i> = cos(theta_i)|0> + sin(theta_i)|1> with
/// cot(theta_i) = cot^(i+1)(pi/8).  theta_0 = pi/8 and theta_i decreases
/// monotonically toward 0; beyond i of a few hundred the angle underflows to
/// exactly 0 in double precision.
struct LadderState {
  int index = 0;
  double theta = 0.0;
};

LadderState ladder_state(int i);
Eigen::Matrix2cd ladder_density(int i);

struct BranchOutputs {
  MeasuredOutput success;  // outcome 0
  MeasuredOutput failure;  // outcome 1
};

/// One CNOT ladder step on |H_i> (x) |H_0>: success advances to |H_{i+1}>,
/// failure drops back to |H_{i-1}| (for i = 0, to the theta = pi/4 state).
BranchOutputs ladder_step(int i);

/// |gamma> = (|0> + e^{i gamma}|1>)/sqrt(2) as a density matrix.
Eigen::Matrix2cd phase_resource(double gamma);

/// Programmable ancilla rotation: consuming |gamma> applies a Z-rotation of
/// +gamma to q on success and -gamma on failure.  Running the same circuit on
/// the failed output with a fresh |gamma> recovers q.
BranchOutputs par_rotate(const Eigen::Matrix2cd& q, double gamma);

}  // namespace stabrec
