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

#include "hqpu/effective/hamiltonians.hpp"

#include <array>

#include "hqpu/effective/phases.hpp"
#include "hqpu/model/level_scheme.hpp"
#include "hqpu/qcore/local_ops.hpp"

namespace hqpu::effective {

namespace {

namespace lv = model::levels;
namespace local = qcore::local;
using qcore::embed;
using qcore::HilbertSpace;
using qcore::Operator;

// |x+><x+|, |x-><x-| and |g><g| on a space whose QD and NV slots start with
// [x+, x-, ...] and [g, ...]; this holds for both the full and the logical
// spaces.
struct Projectors {
  Operator plus;
  Operator minus;
  Operator g;
};

Projectors projectors(const HilbertSpace& s) {
  const std::size_t qd = s.dim(lv::kQd);
  const std::size_t nv = s.dim(lv::kNv);
  return {embed(local::projector(qd, lv::kXPlus), s, lv::kQd),
          embed(local::projector(qd, lv::kXMinus), s, lv::kQd),
          embed(local::projector(nv, lv::kG), s, lv::kNv)};
}

constexpr std::array<std::string_view, 3> kModes{lv::kC0, lv::kC1, lv::kC2};

// Lambda_i; the NV part of the c0 operator carries a minus sign.
Operator lambda_op(const EffectiveParams& e, const model::PhysicalParams& p, const Projectors& pr,
                   std::size_t i) {
  const double sign = i == 0 ? -1.0 : 1.0;
  return e.lambda_plus[i] * pr.plus + e.lambda_minus[i] * pr.minus +
         (sign * e.lambda_g[i] * std::exp(-kI * p.phi)) * pr.g;
}

// K_i = kappa_{+,i} P_+ + kappa_{-,i} P_- - kappa_{g,i} P_g
Operator kappa_op(const EffectiveParams& e, const Projectors& pr, std::size_t i) {
  return e.kappa_plus[i] * pr.plus + e.kappa_minus[i] * pr.minus - e.kappa_g[i] * pr.g;
}

Operator stark_block(const EffectiveParams& e, const Projectors& pr, const HilbertSpace& s) {
  const Operator id = Operator::identity(s);
  Operator n_plus = e.eps0_plus * id;
  Operator n_minus = e.eps0_minus * id;
  Operator n_g = e.eps0_g * id;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!s.contains(kModes[i])) continue;
    const Operator n = embed(local::number(s.dim(kModes[i])), s, kModes[i]);
    n_plus += e.eps_plus[i] * n;
    n_minus += e.eps_minus[i] * n;
    n_g += e.eps_g[i] * n;
  }
  return Complex(-1.0) * (n_plus * pr.plus + n_minus * pr.minus + n_g * pr.g);
}

}  // namespace

qcore::ModulatedHamiltonian build_heff1(const EffectiveParams& e, const model::PhysicalParams& p,
                                        const HilbertSpace& space) {
  qcore::ModulatedHamiltonian h(space);
  const Projectors pr = projectors(space);
  const double s = p.sqrt2_nu();
  const double d = p.delta_small;
  std::array<Operator, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = embed(local::annihilation(space.dim(kModes[i])), space, kModes[i]);
  }
  const std::array<double, 3> freq{d, d - s, d + s};
  for (std::size_t i = 0; i < 3; ++i) {
    h.add(lambda_op(e, p, pr, i) * c[i], -1.0, freq[i], true);
  }
  h.add(kappa_op(e, pr, 1) * (c[2].adjoint() * c[1]), -1.0, -2.0 * s, true);
  h.add(kappa_op(e, pr, 2) * (c[0].adjoint() * c[2]), -1.0, s, true);
  h.add(kappa_op(e, pr, 0) * (c[1].adjoint() * c[0]), -1.0, s, true);
  h.add_static(stark_block(e, pr, space));
  return h;
}

Operator build_heff2(const EffectiveParams& e, const model::PhysicalParams& p,
                     const HilbertSpace& space) {
  const Projectors pr = projectors(space);
  const auto w = mode_weights(p);
  const double s = checked_denominator(p.sqrt2_nu(), 0.0, "sqrt2nu");
  std::array<Operator, 3> n;
  for (std::size_t i = 0; i < 3; ++i) {
    n[i] = embed(local::number(space.dim(kModes[i])), space, kModes[i]);
  }
  Operator h = stark_block(e, pr, space);
  for (std::size_t i = 0; i < 3; ++i) {
    const Operator l = lambda_op(e, p, pr, i);
    h += w[i] * (l * l.adjoint());
  }
  std::array<Operator, 3> k2;
  for (std::size_t i = 0; i < 3; ++i) {
    const Operator k = kappa_op(e, pr, i);
    k2[i] = k * k;
  }
  h += (1.0 / (2.0 * s)) * (k2[1] * (n[2] - n[1]));
  h += (1.0 / s) * (k2[2] * (n[1] - n[0]));
  h += (1.0 / s) * (k2[0] * (n[0] - n[2]));
  return h;
}

Operator build_heff_final(const EffectiveParams& e, const model::PhysicalParams& p) {
  const HilbertSpace space = logical_space();
  const Projectors pr = projectors(space);
  const auto w = mode_weights(p);
  Operator h = stark_block(e, pr, space);
  for (std::size_t i = 0; i < 3; ++i) {
    const Operator l = lambda_op(e, p, pr, i);
    h += w[i] * (l * l.adjoint());
  }
  return h;
}

}  // namespace hqpu::effective
