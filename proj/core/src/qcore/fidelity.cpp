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

#include "hqpu/qcore/fidelity.hpp"

#include <stdexcept>

namespace hqpu::qcore {

double fidelity(const StateVector& psi, const StateVector& phi) {
  return std::norm(psi.inner(phi));
}

double average_gate_fidelity(const Matrix& u, const Matrix& v, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  if (d == 0 || u.rows() != n || u.cols() != n || v.rows() != n || v.cols() != n) {
    throw std::invalid_argument("average_gate_fidelity expects two d x d matrices");
  }
  const double overlap = std::norm((u.adjoint() * v).trace());
  const double dd = static_cast<double>(d);
  return (dd + overlap) / (dd * (dd + 1.0));
}

}  // namespace hqpu::qcore
