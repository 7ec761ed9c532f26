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

#include "hqpu/qcore/modulated_hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hqpu::qcore {

Envelope Envelope::rectangular(double t_on, double t_off) {
  if (!(t_off >= t_on)) throw std::invalid_argument("rectangular envelope needs t_off >= t_on");
  Envelope e;
  e.shape_ = Shape::kRectangular;
  e.a_ = t_on;
  e.b_ = t_off;
  return e;
}

Envelope Envelope::gaussian(double center, double fwhm) {
  if (!(fwhm > 0.0)) throw std::invalid_argument("gaussian envelope needs fwhm > 0");
  Envelope e;
  e.shape_ = Shape::kGaussian;
  e.a_ = center;
  e.b_ = fwhm;
  return e;
}

double Envelope::operator()(double t) const {
  switch (shape_) {
    case Shape::kConstant:
      return 1.0;
    case Shape::kRectangular:
      return (t >= a_ && t < b_) ? 1.0 : 0.0;
    case Shape::kGaussian: {
      const double x = (t - a_) / b_;
      return std::exp(-4.0 * std::numbers::ln2 * x * x);
    }
  }
  return 1.0;
}

ModulatedHamiltonian& ModulatedHamiltonian::add(Operator op, Complex amplitude, double frequency,
                                                bool add_conjugate, Envelope envelope) {
  if (!(op.space() == space_)) {
    throw std::invalid_argument("modulated term acts on a different Hilbert space");
  }
  if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()) ||
      !std::isfinite(frequency)) {
    throw std::invalid_argument("modulated term has a non-finite amplitude or frequency");
  }
  Compiled c;
  c.op = op.matrix().sparseView();
  c.op.makeCompressed();
  c.op_adjoint = Sparse(c.op.adjoint());
  c.op_adjoint.makeCompressed();
  compiled_.push_back(std::move(c));
  terms_.push_back({std::move(op), amplitude, frequency, add_conjugate, envelope});
  return *this;
}

ModulatedHamiltonian& ModulatedHamiltonian::add_static(Operator op) {
  return add(std::move(op), 1.0, 0.0, false);
}

ModulatedHamiltonian& ModulatedHamiltonian::append(const ModulatedHamiltonian& other) {
  for (const auto& t : other.terms_) add(t.op, t.amplitude, t.frequency, t.add_conjugate, t.envelope);
  return *this;
}

std::size_t ModulatedHamiltonian::expanded_term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.add_conjugate ? 2 : 1;
  return n;
}

Matrix ModulatedHamiltonian::evaluate(double t) const {
  const auto n = static_cast<Eigen::Index>(space_.total_dim());
  Matrix h = Matrix::Zero(n, n);
  for (const auto& term : terms_) {
    const Complex f =
        term.amplitude * term.envelope(t) * std::exp(kI * (term.frequency * t / kHbar));
    h += f * term.op.matrix();
    if (term.add_conjugate) h += std::conj(f) * term.op.matrix().adjoint();
  }
  return h;
}

void ModulatedHamiltonian::apply(double t, const Complex* psi, Complex* out) const {
  const auto n = static_cast<Eigen::Index>(space_.total_dim());
  Eigen::Map<const Vector> x(psi, n);
  Eigen::Map<Vector> y(out, n);
  y.setZero();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& term = terms_[k];
    const double env = term.envelope(t);
    if (env == 0.0 || term.amplitude == Complex{}) continue;
    const Complex f = term.amplitude * env * std::exp(kI * (term.frequency * t / kHbar));
    y.noalias() += f * (compiled_[k].op * x);
    if (term.add_conjugate) y.noalias() += std::conj(f) * (compiled_[k].op_adjoint * x);
  }
}

void ModulatedHamiltonian::apply(double t, const Vector& psi, Vector& out) const {
  out.resize(psi.size());
  apply(t, psi.data(), out.data());
}

double ModulatedHamiltonian::max_frequency() const noexcept {
  double w = 0.0;
  for (const auto& t : terms_) w = std::max(w, std::abs(t.frequency));
  return w;
}

double ModulatedHamiltonian::energy_scale() const noexcept {
  double e = 0.0;
  for (const auto& t : terms_) {
    const double m = t.op.matrix().size() == 0 ? 0.0 : t.op.matrix().cwiseAbs().maxCoeff();
    e += std::abs(t.amplitude) * m * (t.add_conjugate ? 2.0 : 1.0);
  }
  return e;
}

}  // namespace hqpu::qcore
