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

#include <cstddef>

#include "hqpu/qcore/operator.hpp"

namespace hqpu::qcore {

/// |<psi|phi>|^2. Throws std::invalid_argument on a space mismatch.
double fidelity(const StateVector& psi, const StateVector& phi);

/// Average gate fidelity (d + |Tr(U^dagger V)|^2) / (d (d + 1)) between two
/// unitaries on a d-dimensional space. Insensitive to global phase.
double average_gate_fidelity(const Matrix& u, const Matrix& v, std::size_t d);

inline double average_gate_fidelity(const Operator& u, const Operator& v, std::size_t d) {
  return average_gate_fidelity(u.matrix(), v.matrix(), d);
}

}  // namespace hqpu::qcore
