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

#include "hqpu/effective/phases.hpp"

#include <cmath>

#include "hqpu/errors.hpp"

namespace hqpu::effective {

std::array<double, 4> PhaseSet::logical_energies() const noexcept {
  return {phi_plus + phi_g + phi_plus_g, phi_plus, phi_minus + phi_g + phi_minus_g, phi_minus};
}

std::array<double, 3> mode_weights(const model::PhysicalParams& p) {
  const double s = p.sqrt2_nu();
  const double d = p.delta_small;
  return {1.0 / checked_denominator(d, 0.0, "delta"),
          1.0 / checked_denominator(d, -s, "delta-sqrt2nu"),
          1.0 / checked_denominator(d, s, "delta+sqrt2nu")};
}

namespace {

double self_shift(const std::array<double, 3>& lambda, const std::array<double, 3>& w) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) sum += lambda[i] * lambda[i] * w[i];
  return sum;
}

double cross_shift(const std::array<double, 3>& qd, const std::array<double, 3>& nv,
                   const std::array<double, 3>& w, double phi) {
  // the c0 contribution enters with the opposite sign of the NV coupling
  const double inner = qd[1] * nv[1] * w[1] + qd[2] * nv[2] * w[2] - qd[0] * nv[0] * w[0];
  return 2.0 * std::cos(phi) * inner;
}

}  // namespace

PhaseSet compute_phases(const EffectiveParams& e, const model::PhysicalParams& p) {
  const auto w = mode_weights(p);
  PhaseSet ps;
  ps.phi_plus = self_shift(e.lambda_plus, w) - e.eps0_plus;
  ps.phi_minus = self_shift(e.lambda_minus, w) - e.eps0_minus;
  ps.phi_g = self_shift(e.lambda_g, w) - e.eps0_g;
  ps.phi_plus_g = cross_shift(e.lambda_plus, e.lambda_g, w, p.phi);
  ps.phi_minus_g = cross_shift(e.lambda_minus, e.lambda_g, w, p.phi);
  return ps;
}

GateSchedule schedule_at(const PhaseSet& phases, double t) {
  GateSchedule s;
  s.phases = phases;
  s.t_gate = t;
  s.correction_plus = phases.phi_plus * t / kHbar;
  s.correction_minus = phases.phi_minus * t / kHbar;
  s.correction_g = (phases.phi_g + phases.phi_minus_g) * t / kHbar;
  s.conditional_phase = (phases.phi_plus_g - phases.phi_minus_g) * t / kHbar;
  return s;
}

GateSchedule gate_time(const PhaseSet& phases) {
  const double diff = phases.phi_plus_g - phases.phi_minus_g;
  const double scale = std::abs(phases.phi_plus_g) + std::abs(phases.phi_minus_g);
  if (diff == 0.0 || std::abs(diff) <= 1e-12 * scale) {
    throw DegenerateParameterError("Phi_+g=Phi_-g",
                                   "degenerate resonance: conditional phase rate vanishes");
  }
  return schedule_at(phases, kPi * kHbar / std::abs(diff));
}

qcore::HilbertSpace logical_space() { return qcore::HilbertSpace::compose({{"QD", 2}, {"NV", 2}}); }

qcore::Operator logical_evolution(const PhaseSet& phases, double t) {
  const auto energies = phases.logical_energies();
  Matrix u = Matrix::Zero(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    u(k, k) = std::exp(-kI * (energies[static_cast<std::size_t>(k)] * t / kHbar));
  }
  return {logical_space(), u};
}

qcore::Operator cz_unitary(const GateSchedule& sched) { return cz_unitary(sched, sched.t_gate); }

qcore::Operator cz_unitary(const GateSchedule& sched, double t) {
  const double theta = (sched.phases.phi_plus_g - sched.phases.phi_minus_g) * t / kHbar;
  Matrix u = Matrix::Identity(4, 4);
  u(0, 0) = std::exp(-kI * theta);
  return {logical_space(), u};
}

}  // namespace hqpu::effective
