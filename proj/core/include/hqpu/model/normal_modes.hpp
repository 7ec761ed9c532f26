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

#include "hqpu/model/params.hpp"
#include "hqpu/qcore/types.hpp"

namespace hqpu::model {

/// Single-excitation coupling matrix of the cavity-fiber Hamiltonian in the
/// (a1, a2, b) basis.
Matrix cavity_fiber_coupling_matrix(const PhysicalParams& p);

/// Unitary T with rows giving the (a1, a2, b) components of (c0, c1, c2):
/// T^dag M T = diag(0, sqrt2 nu, -sqrt2 nu).
Matrix normal_mode_transform(double phi);

/// Normal-mode frequencies (0, sqrt2 nu, -sqrt2 nu) in meV.
Eigen::Vector3d normal_mode_frequencies(const PhysicalParams& p);

}  // namespace hqpu::model
