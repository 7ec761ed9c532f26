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

#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "hqpu/qcore/operator.hpp"

namespace hqpu::qcore {

/// Real, dimensionless time profile multiplying a term's amplitude.
class Envelope {
 public:
  enum class Shape { kConstant, kRectangular, kGaussian };

  Envelope() = default;
  static Envelope constant() { return {}; }
  /// 1 on [t_on, t_off), 0 elsewhere (ps).
  static Envelope rectangular(double t_on, double t_off);
  /// Unit-peak Gaussian centred at `center` with full width at half maximum
  /// `fwhm` (ps).
  static Envelope gaussian(double center, double fwhm);

  Shape shape() const noexcept { return shape_; }
  bool is_constant() const noexcept { return shape_ == Shape::kConstant; }
  double operator()(double t) const;

 private:
  Shape shape_ = Shape::kConstant;
  double a_ = 0.0;
  double b_ = 0.0;
};

/// One summand amplitude * envelope(t) * exp(i * frequency * t / hbar) * op,
/// optionally accompanied by its Hermitian conjugate.
struct ModulatedTerm {
  Operator op;
  Complex amplitude;   // meV
  double frequency;    // meV
  bool add_conjugate;
  Envelope envelope;
};

/// Interaction-picture Hamiltonian H(t) = sum_k f_k(t) O_k (+ h.c.). Terms are
/// kept dense for inspection and compiled to sparse form for the propagation
/// hot path. Immutable once handed to a propagator.
class ModulatedHamiltonian {
 public:
  ModulatedHamiltonian() = default;
  explicit ModulatedHamiltonian(HilbertSpace space) : space_(std::move(space)) {}

  ModulatedHamiltonian& add(Operator op, Complex amplitude, double frequency, bool add_conjugate,
                            Envelope envelope = {});
  /// Time-independent Hermitian contribution (amplitude 1, frequency 0).
  ModulatedHamiltonian& add_static(Operator op);
  ModulatedHamiltonian& append(const ModulatedHamiltonian& other);

  const HilbertSpace& space() const noexcept { return space_; }
  std::span<const ModulatedTerm> terms() const noexcept { return terms_; }
  /// Number of summands with Hermitian conjugates counted separately.
  std::size_t expanded_term_count() const noexcept;

  /// Dense H(t) in meV.
  Matrix evaluate(double t) const;
  /// out = H(t) * psi using the sparse term representation.
  void apply(double t, const Complex* psi, Complex* out) const;
  void apply(double t, const Vector& psi, Vector& out) const;

  /// Largest |frequency| over all terms (meV).
  double max_frequency() const noexcept;
  /// Sum over terms of |amplitude| * max |matrix element| (meV), a cheap
  /// upper scale for the instantaneous energy.
  double energy_scale() const noexcept;

 private:
  using Sparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
  struct Compiled {
    Sparse op;
    Sparse op_adjoint;
  };

  HilbertSpace space_;
  std::vector<ModulatedTerm> terms_;
  std::vector<Compiled> compiled_;
};

}  // namespace hqpu::qcore
