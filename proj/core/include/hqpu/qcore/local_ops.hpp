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

#include <cmath>
#include <cstddef>

#include "hqpu/qcore/types.hpp"

// Small dense building blocks for single-subsystem operators.
namespace hqpu::qcore::local {

/// |to><from| on a `dim`-level system.
inline Matrix transition(std::size_t dim, std::size_t to, std::size_t from) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix m = Matrix::Zero(n, n);
  m(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from)) = 1.0;
  return m;
}

inline Matrix projector(std::size_t dim, std::size_t level) { return transition(dim, level, level); }

/// Bosonic annihilation operator truncated to `levels` Fock states (n_max + 1).
inline Matrix annihilation(std::size_t levels) {
  const auto n = static_cast<Eigen::Index>(levels);
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

inline Matrix creation(std::size_t levels) { return annihilation(levels).adjoint(); }

inline Matrix number(std::size_t levels) {
  const auto n = static_cast<Eigen::Index>(levels);
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace hqpu::qcore::local
