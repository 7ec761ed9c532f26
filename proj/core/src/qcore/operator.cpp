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

#include "hqpu/qcore/operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hqpu::qcore {

namespace {

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": Hilbert space mismatch");
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

Operator::Operator(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(space_.total_dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", space dimension is " +
                                std::to_string(n));
  }
}

Operator Operator::identity(const HilbertSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.total_dim());
  return {space, Matrix::Identity(n, n)};
}

Operator Operator::zero(const HilbertSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.total_dim());
  return {space, Matrix::Zero(n, n)};
}

bool Operator::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs(matrix_));
  return max_abs(matrix_ - matrix_.adjoint()) <= tol * scale;
}

bool Operator::is_unitary(double tol) const {
  const auto n = matrix_.rows();
  return max_abs(matrix_.adjoint() * matrix_ - Matrix::Identity(n, n)) <= tol;
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_space(space_, rhs.space_, "operator +");
  matrix_ += rhs.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_space(space_, rhs.space_, "operator -");
  matrix_ -= rhs.matrix_;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_space(lhs.space(), rhs.space(), "operator *");
  return {lhs.space(), lhs.matrix() * rhs.matrix()};
}

Operator embed(const Matrix& local, const HilbertSpace& space, std::string_view slot) {
  const std::size_t k = space.slot(slot);
  const std::size_t d = space.subsystems()[k].dim;
  if (static_cast<std::size_t>(local.rows()) != d || static_cast<std::size_t>(local.cols()) != d) {
    throw std::invalid_argument("local operator dimension does not match subsystem '" +
                                std::string(slot) + "'");
  }
  const std::size_t right = space.stride(k);
  const std::size_t left = space.total_dim() / (d * right);
  const auto n = static_cast<Eigen::Index>(space.total_dim());
  Matrix full = Matrix::Zero(n, n);
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Complex v = local(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (v == Complex{}) continue;
        const std::size_t row0 = (l * d + i) * right;
        const std::size_t col0 = (l * d + j) * right;
        for (std::size_t r = 0; r < right; ++r) {
          full(static_cast<Eigen::Index>(row0 + r), static_cast<Eigen::Index>(col0 + r)) = v;
        }
      }
    }
  }
  return {space, std::move(full)};
}

StateVector::StateVector(HilbertSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_.total_dim()) {
    throw std::invalid_argument("state vector length does not match the space dimension");
  }
}

StateVector StateVector::basis(
    const HilbertSpace& space,
    std::initializer_list<std::pair<std::string_view, std::size_t>> levels) {
  return basis(space, space.index(levels));
}

StateVector StateVector::basis(const HilbertSpace& space, std::size_t flat_index) {
  if (flat_index >= space.total_dim()) throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.total_dim()));
  v(static_cast<Eigen::Index>(flat_index)) = 1.0;
  return {space, std::move(v)};
}

Complex StateVector::inner(const StateVector& other) const {
  require_same_space(space_, other.space_, "inner product");
  return amplitudes_.dot(other.amplitudes_);  // conjugates the left operand
}

double StateVector::population(std::string_view slot, std::size_t level) const {
  const std::size_t k = space_.slot(slot);
  double p = 0.0;
  for (std::size_t i = 0; i < space_.total_dim(); ++i) {
    if (space_.level(i, k) == level) p += std::norm(amplitudes_(static_cast<Eigen::Index>(i)));
  }
  return p;
}

double StateVector::population_at_least(std::string_view slot, std::size_t min_level) const {
  const std::size_t k = space_.slot(slot);
  double p = 0.0;
  for (std::size_t i = 0; i < space_.total_dim(); ++i) {
    if (space_.level(i, k) >= min_level) p += std::norm(amplitudes_(static_cast<Eigen::Index>(i)));
  }
  return p;
}

StateVector operator*(const Operator& op, const StateVector& psi) {
  require_same_space(op.space(), psi.space(), "operator application");
  return {psi.space(), op.matrix() * psi.amplitudes()};
}

}  // namespace hqpu::qcore
