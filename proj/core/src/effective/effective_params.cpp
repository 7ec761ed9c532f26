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

#include "hqpu/effective/effective_params.hpp"

#include <cmath>
#include <string>

#include "hqpu/errors.hpp"

namespace hqpu::effective {

double checked_denominator(double a, double b, const char* resonance) {
  const double sum = a + b;
  if (std::abs(sum) <= 1e-9 * (std::abs(a) + std::abs(b)) || sum == 0.0) {
    throw DegenerateParameterError(resonance, std::string("degenerate resonance: ") + resonance +
                                                  " vanishes");
  }
  return sum;
}

std::vector<Resonance> resonances(const model::PhysicalParams& p) {
  const double s = p.sqrt2_nu();
  const double d = p.delta_small;
  const double zd = p.zeeman_sum();
  auto r = [](const char* name, double a, double b) {
    return Resonance{name, a + b, std::abs(a) + std::abs(b)};
  };
  return {r("delta1+Delta", p.delta1, zd),
          r("delta1", p.delta1, 0.0),
          r("delta2", p.delta2, 0.0),
          r("delta1+delta+Delta", p.delta1 + zd, d),
          r("delta1+delta+Delta-sqrt2nu", p.delta1 + zd + d, -s),
          r("delta1+delta+Delta+sqrt2nu", p.delta1 + zd + d, s),
          r("delta1+delta", p.delta1, d),
          r("delta1+delta-sqrt2nu", p.delta1 + d, -s),
          r("delta1+delta+sqrt2nu", p.delta1 + d, s),
          r("delta2+delta", p.delta2, d),
          r("delta2+delta-sqrt2nu", p.delta2 + d, -s),
          r("delta2+delta+sqrt2nu", p.delta2 + d, s),
          r("delta", d, 0.0),
          r("delta-sqrt2nu", d, -s),
          r("delta+sqrt2nu", d, s)};
}

EffectiveParams effective_params(const model::PhysicalParams& p) {
  const double s = p.sqrt2_nu();
  const double d = p.delta_small;
  const double zd = p.zeeman_sum();

  // detuning denominators
  const double q_plus = checked_denominator(p.delta1, zd, "delta1+Delta");
  const double q_minus = checked_denominator(p.delta1, 0.0, "delta1");
  const double q_nv = checked_denominator(p.delta2, 0.0, "delta2");
  const double c_plus = checked_denominator(p.delta1 + zd, d, "delta1+delta+Delta");
  const double c_plus_lo = checked_denominator(p.delta1 + zd + d, -s, "delta1+delta+Delta-sqrt2nu");
  const double c_plus_hi = checked_denominator(p.delta1 + zd + d, s, "delta1+delta+Delta+sqrt2nu");
  const double c_minus = checked_denominator(p.delta1, d, "delta1+delta");
  const double c_minus_lo = checked_denominator(p.delta1 + d, -s, "delta1+delta-sqrt2nu");
  const double c_minus_hi = checked_denominator(p.delta1 + d, s, "delta1+delta+sqrt2nu");
  const double c_nv = checked_denominator(p.delta2, d, "delta2+delta");
  const double c_nv_lo = checked_denominator(p.delta2 + d, -s, "delta2+delta-sqrt2nu");
  const double c_nv_hi = checked_denominator(p.delta2 + d, s, "delta2+delta+sqrt2nu");

  const double go1 = p.g1 * p.omega1 / 4.0;
  const double go2 = p.g2 * p.omega2 / 4.0;
  const double gg1 = p.g1 * p.g1;
  const double gg2 = p.g2 * p.g2;

  EffectiveParams e;
  e.lambda_plus[1] = go1 * (1.0 / c_plus_lo + 1.0 / q_plus);
  e.lambda_plus[2] = go1 * (1.0 / c_plus_hi + 1.0 / q_plus);
  e.lambda_plus[0] = kSqrt2 * go1 * (1.0 / c_plus + 1.0 / q_plus);
  e.lambda_minus[1] = go1 * (1.0 / c_minus_lo + 1.0 / q_minus);
  e.lambda_minus[2] = go1 * (1.0 / c_minus_hi + 1.0 / q_minus);
  e.lambda_minus[0] = kSqrt2 * go1 * (1.0 / c_minus + 1.0 / q_minus);
  e.lambda_g[1] = go2 * (1.0 / c_nv_lo + 1.0 / q_nv);
  e.lambda_g[2] = go2 * (1.0 / c_nv_hi + 1.0 / q_nv);
  e.lambda_g[0] = kSqrt2 * go2 * (1.0 / c_nv + 1.0 / q_nv);

  e.kappa_plus[1] = gg1 / 8.0 * (1.0 / c_plus_lo + 1.0 / c_plus_hi);
  e.kappa_plus[2] = kSqrt2 * gg1 / 8.0 * (1.0 / c_plus_hi + 1.0 / c_plus);
  e.kappa_plus[0] = kSqrt2 * gg1 / 8.0 * (1.0 / c_plus_lo + 1.0 / c_plus);
  e.kappa_minus[1] = gg1 / 8.0 * (1.0 / c_minus_lo + 1.0 / c_minus_hi);
  e.kappa_minus[2] = kSqrt2 * gg1 / 8.0 * (1.0 / c_minus_hi + 1.0 / c_minus);
  e.kappa_minus[0] = kSqrt2 * gg1 / 8.0 * (1.0 / c_minus_lo + 1.0 / c_minus);
  e.kappa_g[1] = gg2 / 8.0 * (1.0 / c_nv_lo + 1.0 / c_nv_hi);
  e.kappa_g[2] = kSqrt2 * gg2 / 8.0 * (1.0 / c_nv_hi + 1.0 / c_nv);
  e.kappa_g[0] = kSqrt2 * gg2 / 8.0 * (1.0 / c_nv_lo + 1.0 / c_nv);

  // Photon-number Stark coefficients, transcribed term by term (including
  // the factor-2 and Delta1 entries among the NV and x- rows).
  e.eps_plus[1] = gg1 / (4.0 * c_plus_lo);
  e.eps_plus[2] = gg1 / (4.0 * c_plus_hi);
  e.eps_plus[0] = gg1 / (2.0 * c_plus);
  e.eps_minus[1] = gg1 / (4.0 * c_minus_lo);
  e.eps_minus[2] = gg1 / (2.0 * c_minus_hi);
  e.eps_minus[0] = gg1 / (2.0 * c_minus);
  e.eps_g[1] = gg2 / (4.0 * c_minus_lo);
  e.eps_g[2] = gg2 / (2.0 * c_nv_hi);
  e.eps_g[0] = gg2 / (2.0 * c_minus);

  e.eps0_plus = p.omega1 * p.omega1 / (2.0 * q_plus);
  e.eps0_minus = p.omega1 * p.omega1 / (2.0 * q_minus);
  e.eps0_g = p.omega2 * p.omega2 / (2.0 * q_nv);
  return e;
}

}  // namespace hqpu::effective
