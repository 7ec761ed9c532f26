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

#include <vector>

#include "hqpu/gates/single_qubit.hpp"

namespace hqpu::gates {

/// One step of a two-qubit circuit: either a single-qubit gate or the
/// conditional-phase gate diag(-1, 1, 1, 1) on |x+ g>, |x+ f>, |x- g>, |x- f>.
struct GateStep {
  enum class Kind { kSingle, kControlledPhase };
  Kind kind = Kind::kSingle;
  SingleQubitGate gate;
};

/// Ideal conditional-phase gate on effective::logical_space().
qcore::Operator controlled_phase();

/// Hadamard (up to a global phase) from native operations: z-x-z ideal
/// rotations on the QD; phase, Raman, phase on the NV.
std::vector<SingleQubitGate> hadamard(Target target);

/// SWAP from three controlled-phase gates and Hadamard conjugations,
/// listed in application order.
std::vector<GateStep> swap_sequence();

/// Product of the steps (first step applied first) on logical_space().
qcore::Operator compose(const std::vector<GateStep>& steps);

/// |x+ f> <-> |x- g> exchange matrix on logical_space().
qcore::Operator swap_gate();

/// Number of controlled-phase steps.
std::size_t entangling_count(const std::vector<GateStep>& steps) noexcept;

}  // namespace hqpu::gates
