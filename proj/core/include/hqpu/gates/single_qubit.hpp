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

#pragma once

#include <array>

#include "hqpu/effective/phases.hpp"
#include "hqpu/qcore/operator.hpp"

namespace hqpu::gates {

enum class Target { kQd, kNv };
enum class Provenance { kRamanEffective, kIdealRotation, kCorrectionPhase };
enum class Axis { kX, kZ };

/// A 2x2 unitary on one qubit. Basis order: QD (x+, x-); NV (f, g).
struct SingleQubitGate {
  Target target = Target::kQd;
  Matrix unitary = Matrix::Identity(2, 2);
  Provenance provenance = Provenance::kIdealRotation;
};

const char* to_string(Target t) noexcept;
const char* to_string(Provenance p) noexcept;

/// exp(-i angle sigma / 2) on {x+, x-}, sigma = sigma_x or sigma_z.
SingleQubitGate qd_rotation(Axis axis, double angle);

/// diag(1, exp(i beta)) on NV (f, g): a phase on |g>.
SingleQubitGate nv_phase(double beta);

/// Local phase fixes after the conditional-phase evolution: exp(i Phi_+ t)
/// on |x+>, exp(i Phi_- t) on |x->, exp(i (Phi_g + Phi_-g) t) on |g>, all
/// with t = sched.t_gate and phases divided by hbar.
std::array<SingleQubitGate, 3> correction_phases(const effective::GateSchedule& sched);

/// Lifts a gate to effective::logical_space() (QD [x+, x-] x NV [g, f]).
qcore::Operator to_logical(const SingleQubitGate& gate);

}  // namespace hqpu::gates
