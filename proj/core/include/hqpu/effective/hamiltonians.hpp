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

#include "hqpu/effective/effective_params.hpp"
#include "hqpu/qcore/modulated_hamiltonian.hpp"

namespace hqpu::effective {

/// First-stage Hamiltonian after eliminating the excited qubit levels, in
/// the normal-mode interaction picture. `space` must contain the QD, NV,
/// c0, c1 and c2 subsystems of model::two_qubit_space.
qcore::ModulatedHamiltonian build_heff1(const EffectiveParams& e, const model::PhysicalParams& p,
                                        const qcore::HilbertSpace& space);

/// Second-stage, time-independent Hamiltonian after eliminating the modes,
/// on the same space as build_heff1.
qcore::Operator build_heff2(const EffectiveParams& e, const model::PhysicalParams& p,
                            const qcore::HilbertSpace& space);

/// Vacuum restriction of build_heff2 on effective::logical_space(). Diagonal.
qcore::Operator build_heff_final(const EffectiveParams& e, const model::PhysicalParams& p);

}  // namespace hqpu::effective
