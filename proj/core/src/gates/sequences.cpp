// Copyright 2026 The HQPU Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqpu/gates/sequences.hpp"

#include <algorithm>

#include "hqpu/gates/raman.hpp"

namespace hqpu::gates {

qcore::Operator controlled_phase() {
  Matrix u = Matrix::Identity(4, 4);
  u(0, 0) = -1.0;
  return {effective::logical_space(), u};
}

std::vector<SingleQubitGate> hadamard(Target target) {
  if (target == Target::kQd) {
    const SingleQubitGate z = qd_rotation(Axis::kZ, kPi / 2.0);
    return {z, qd_rotation(Axis::kX, kPi / 2.0), z};
  }
  // exp(i 3pi/4 sigma_x) = -exp(-i pi/4 sigma_x); a phase -pi/2 on |g> is
  // a z rotation by +pi/2 in the (g, f) order.
  const SingleQubitGate z = nv_phase(1.5 * kPi);
  return {z, nv_raman_rotation(0.75 * kPi), z};
}

std::vector<GateStep> swap_sequence() {
  std::vector<GateStep> steps;
  auto add_h = [&](Target t) {
    for (auto& g : hadamard(t)) steps.push_back({GateStep::Kind::kSingle, std::move(g)});
  };
  auto add_cz = [&] { steps.push_back({GateStep::Kind::kControlledPhase, {}}); };
  // C_nv, C_qd, C_nv with C_t = H_t CZ H_t
  for (Target t : {Target::kNv, Target::kQd, Target::kNv}) {
    add_h(t);
    add_cz();
    add_h(t);
  }
  return steps;
}

qcore::Operator compose(const std::vector<GateStep>& steps) {
  qcore::Operator u = qcore::Operator::identity(effective::logical_space());
  const qcore::Operator cz = controlled_phase();
  for (const auto& step : steps) {
    u = (step.kind == GateStep::Kind::kControlledPhase ? cz : to_logical(step.gate)) * u;
  }
  return u;
}

qcore::Operator swap_gate() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 2) = 1.0;
  u(2, 1) = 1.0;
  u(3, 3) = 1.0;
  return {effective::logical_space(), u};
}

std::size_t entangling_count(const std::vector<GateStep>& steps) noexcept {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const GateStep& s) {
    return s.kind == GateStep::Kind::kControlledPhase;
  }));
}

}  // namespace hqpu::gates
