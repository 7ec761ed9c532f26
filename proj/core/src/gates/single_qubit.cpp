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

#include "hqpu/gates/single_qubit.hpp"

#include <cmath>

namespace hqpu::gates {

const char* to_string(Target t) noexcept { return t == Target::kQd ? "QD" : "NV"; }

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::kRamanEffective:
      return "raman_effective";
    case Provenance::kIdealRotation:
      return "ideal_rotation";
    case Provenance::kCorrectionPhase:
      return "correction_phase";
  }
  return "?";
}

SingleQubitGate qd_rotation(Axis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Matrix u(2, 2);
  if (axis == Axis::kX) {
    u << c, -kI * s, -kI * s, c;
  } else {
    u << std::exp(-kI * (angle / 2.0)), 0.0, 0.0, std::exp(kI * (angle / 2.0));
  }
  return {Target::kQd, u, Provenance::kIdealRotation};
}

SingleQubitGate nv_phase(double beta) {
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = std::exp(kI * beta);
  return {Target::kNv, u, Provenance::kCorrectionPhase};
}

std::array<SingleQubitGate, 3> correction_phases(const effective::GateSchedule& sched) {
  Matrix plus = Matrix::Identity(2, 2);
  plus(0, 0) = std::exp(kI * sched.correction_plus);
  Matrix minus = Matrix::Identity(2, 2);
  minus(1, 1) = std::exp(kI * sched.correction_minus);
  return {SingleQubitGate{Target::kQd, plus, Provenance::kCorrectionPhase},
          SingleQubitGate{Target::kQd, minus, Provenance::kCorrectionPhase},
          nv_phase(sched.correction_g)};
}

qcore::Operator to_logical(const SingleQubitGate& gate) {
  const qcore::HilbertSpace space = effective::logical_space();
  if (gate.target == Target::kQd) return qcore::embed(gate.unitary, space, "QD");
  // (f, g) -> (g, f)
  Matrix swapped(2, 2);
  swapped << gate.unitary(1, 1), gate.unitary(1, 0), gate.unitary(0, 1), gate.unitary(0, 0);
  return qcore::embed(swapped, space, "NV");
}

}  // namespace hqpu::gates
