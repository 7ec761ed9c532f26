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

#include <initializer_list>
#include <string_view>
#include <utility>

#include "hqpu/qcore/hilbert_space.hpp"
#include "hqpu/qcore/types.hpp"

namespace hqpu::qcore {

/// Dense square matrix acting on a composite space.
class Operator {
 public:
  Operator() = default;
  /// Throws std::invalid_argument unless `matrix` is total_dim x total_dim.
  Operator(HilbertSpace space, Matrix matrix);

  static Operator identity(const HilbertSpace& space);
  static Operator zero(const HilbertSpace& space);

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return space_.total_dim(); }

  Operator adjoint() const { return {space_, matrix_.adjoint()}; }

  /// ||A - A^dagger||_max <= tol * max(1, ||A||_max).
  bool is_hermitian(double tol = 1e-12) const;
  /// ||A^dagger A - I||_max <= tol.
  bool is_unitary(double tol = 1e-12) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex s) {
    matrix_ *= s;
    return *this;
  }

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Complex s, Operator op) { return op *= s; }
  friend Operator operator*(Operator op, Complex s) { return op *= s; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

/// Lifts `local` acting on subsystem `slot` to the full space as
/// 1 (x) ... (x) local (x) ... (x) 1. Throws std::invalid_argument on an
/// unknown slot or a dimension mismatch.
Operator embed(const Matrix& local, const HilbertSpace& space, std::string_view slot);

/// Normalised (or not) amplitude vector on a composite space.
class StateVector {
 public:
  StateVector() = default;
  StateVector(HilbertSpace space, Vector amplitudes);

  /// Product basis state; subsystems not listed sit in level 0.
  static StateVector basis(const HilbertSpace& space,
                           std::initializer_list<std::pair<std::string_view, std::size_t>> levels);
  static StateVector basis(const HilbertSpace& space, std::size_t flat_index);

  const HilbertSpace& space() const noexcept { return space_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Vector& amplitudes() noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return space_.total_dim(); }

  double norm_squared() const { return amplitudes_.squaredNorm(); }
  /// <this|other>; throws std::invalid_argument on a space mismatch.
  Complex inner(const StateVector& other) const;
  /// Probability mass of basis states where subsystem `slot` is at `level`.
  double population(std::string_view slot, std::size_t level) const;
  /// Probability mass where subsystem `slot` is at a level >= `min_level`.
  double population_at_least(std::string_view slot, std::size_t min_level) const;

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

/// Applies an operator to a state on the same space.
StateVector operator*(const Operator& op, const StateVector& psi);

}  // namespace hqpu::qcore
