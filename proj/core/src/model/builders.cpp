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

#include "hqpu/model/builders.hpp"

#include <array>
#include <span>
#include <string_view>

#include "hqpu/qcore/local_ops.hpp"

namespace hqpu::model {

using qcore::embed;
using qcore::HilbertSpace;
using qcore::ModulatedHamiltonian;
using qcore::Operator;
namespace local = qcore::local;
namespace lv = levels;

HilbertSpace qd_space() { return HilbertSpace::compose({{std::string(lv::kQd), lv::kQdDim}}); }

HilbertSpace nv_space() { return HilbertSpace::compose({{std::string(lv::kNv), lv::kNvDim}}); }

HilbertSpace two_qubit_space(std::size_t n_max) {
  const std::size_t n = n_max + 1;
  return HilbertSpace::compose({{std::string(lv::kQd), lv::kQdDim},
                                {std::string(lv::kNv), lv::kNvDim},
                                {std::string(lv::kC0), n},
                                {std::string(lv::kC1), n},
                                {std::string(lv::kC2), n}});
}

HilbertSpace qubit_cavity_space(std::size_t n_max) {
  const std::size_t n = n_max + 1;
  return HilbertSpace::compose({{std::string(lv::kQd), lv::kQdDim},
                                {std::string(lv::kNv), lv::kNvDim},
                                {std::string(lv::kA1), n},
                                {std::string(lv::kA2), n}});
}

HilbertSpace cavity_fiber_space(std::size_t n_max) {
  const std::size_t n = n_max + 1;
  return HilbertSpace::compose({{std::string(lv::kA1), n},
                                {std::string(lv::kA2), n},
                                {std::string(lv::kB), n}});
}

HilbertSpace raman_space(std::size_t n_max) {
  return HilbertSpace::compose({{std::string(lv::kNv), lv::kNvDim},
                                {std::string(lv::kCavity), n_max + 1}});
}

namespace {

// Adds v|j><k| (+ h.c.) to a single-system Hamiltonian with diagonal energies
// `diag`, either as a constant coupling or in the interaction picture.
void add_coupling(ModulatedHamiltonian& h, std::string_view slot, std::size_t dim,
                  std::span<const double> diag, std::size_t j, std::size_t k, Complex v,
                  const qcore::Envelope& envelope, Frame frame) {
  const double freq = frame == Frame::kInteraction ? diag[j] - diag[k] : 0.0;
  h.add(embed(local::transition(dim, j, k), h.space(), slot), v, freq, true, envelope);
}

Operator annihilate(const HilbertSpace& space, std::string_view mode) {
  return embed(local::annihilation(space.dim(mode)), space, mode);
}

Operator create(const HilbertSpace& space, std::string_view mode) {
  return embed(local::creation(space.dim(mode)), space, mode);
}

}  // namespace

ModulatedHamiltonian build_laser_qd(const PhysicalParams& p, Frame frame) {
  ModulatedHamiltonian h(qd_space());
  std::array<double, lv::kQdDim> diag{};
  diag[lv::kXPlus] = -p.delta_e;
  diag[lv::kXMinus] = 0.0;
  diag[lv::kTauPlus] = p.delta1 + p.delta_h;
  diag[lv::kTauMinus] = p.delta1;

  if (frame == Frame::kRotating) {
    Matrix d = Matrix::Zero(lv::kQdDim, lv::kQdDim);
    for (std::size_t i = 0; i < lv::kQdDim; ++i) d(i, i) = diag[i];
    h.add_static(Operator(h.space(), d));
  }
  // vertical transitions
  add_coupling(h, lv::kQd, lv::kQdDim, diag, lv::kTauMinus, lv::kXMinus, 0.5 * p.omega_v,
               p.envelope_v, frame);
  add_coupling(h, lv::kQd, lv::kQdDim, diag, lv::kTauPlus, lv::kXPlus, 0.5 * p.omega_v,
               p.envelope_v, frame);
  // cross transitions
  add_coupling(h, lv::kQd, lv::kQdDim, diag, lv::kXPlus, lv::kTauMinus, 0.5 * kI * p.omega_h,
               p.envelope_h, frame);
  add_coupling(h, lv::kQd, lv::kQdDim, diag, lv::kXMinus, lv::kTauPlus, 0.5 * kI * p.omega_h,
               p.envelope_h, frame);
  return h;
}

ModulatedHamiltonian build_laser_nv(const PhysicalParams& p) {
  ModulatedHamiltonian h(nv_space());
  h.add_static(embed(p.delta2 * local::projector(lv::kNvDim, lv::kE), h.space(), lv::kNv));
  const std::array<double, lv::kNvDim> diag{0.0, 0.0, p.delta2};
  add_coupling(h, lv::kNv, lv::kNvDim, diag, lv::kG, lv::kE, p.omega_v_prime, p.envelope_v_prime,
               Frame::kRotating);
  add_coupling(h, lv::kNv, lv::kNvDim, diag, lv::kF, lv::kE, p.omega_plus, p.envelope_plus,
               Frame::kRotating);
  return h;
}

ModulatedHamiltonian build_qubit_cavity(const PhysicalParams& p) {
  ModulatedHamiltonian h(qubit_cavity_space(p.n_max));
  const auto& s = h.space();
  const Operator a1 = annihilate(s, lv::kA1);
  const Operator a2 = annihilate(s, lv::kA2);
  const Operator up_plus = embed(local::transition(lv::kQdDim, lv::kTauPlus, lv::kXPlus), s, lv::kQd);
  const Operator up_minus =
      embed(local::transition(lv::kQdDim, lv::kTauMinus, lv::kXMinus), s, lv::kQd);
  const Operator up_nv = embed(local::transition(lv::kNvDim, lv::kE, lv::kG), s, lv::kNv);
  const double cavity1 = p.delta1 + p.delta_small;
  const double cavity2 = p.delta2 + p.delta_small;
  h.add(up_plus * a1, p.g1, cavity1 + p.zeeman_sum(), true);
  h.add(up_minus * a1, p.g1, cavity1, true);
  h.add(up_nv * a2, p.g2, cavity2, true);
  return h;
}

ModulatedHamiltonian build_cavity_fiber(const PhysicalParams& p) {
  ModulatedHamiltonian h(cavity_fiber_space(p.n_max));
  const auto& s = h.space();
  const Operator b = annihilate(s, lv::kB);
  h.add(create(s, lv::kA1) * b, p.nu, 0.0, true);
  h.add(create(s, lv::kA2) * b, p.nu * std::exp(kI * p.phi), 0.0, true);
  return h;
}

namespace {

ModulatedHamiltonian two_qubit(const PhysicalParams& p, bool with_cavity) {
  ModulatedHamiltonian h(two_qubit_space(p.n_max));
  const auto& s = h.space();
  const Operator c0 = annihilate(s, lv::kC0);
  const Operator c1 = annihilate(s, lv::kC1);
  const Operator c2 = annihilate(s, lv::kC2);
  const double split = p.sqrt2_nu();
  const double d = p.delta_small;

  struct Transition {
    Operator raise;
    Complex g_half;      // (g/2) times any fiber phase
    double c0_sign;      // sign of the sqrt(2) c0 contribution
    double drive;        // Omega_j
    double detuning;     // classical-drive detuning of this transition
  };
  const Complex fiber = std::exp(-kI * p.phi);
  const std::array<Transition, 3> transitions{{
      {embed(local::transition(lv::kQdDim, lv::kTauPlus, lv::kXPlus), s, lv::kQd), 0.5 * p.g1,
       +1.0, p.omega1, p.delta1 + p.zeeman_sum()},
      {embed(local::transition(lv::kQdDim, lv::kTauMinus, lv::kXMinus), s, lv::kQd), 0.5 * p.g1,
       +1.0, p.omega1, p.delta1},
      {embed(local::transition(lv::kNvDim, lv::kE, lv::kG), s, lv::kNv), 0.5 * p.g2 * fiber, -1.0,
       p.omega2, p.delta2},
  }};

  for (const auto& tr : transitions) {
    if (with_cavity) {
      const double cavity = tr.detuning + d;
      h.add(tr.raise * c1, tr.g_half, cavity - split, true);
      h.add(tr.raise * c2, tr.g_half, cavity + split, true);
      h.add(tr.raise * c0, tr.c0_sign * kSqrt2 * tr.g_half, cavity, true);
    }
    h.add(tr.raise, tr.drive, tr.detuning, true);
  }
  return h;
}

}  // namespace

ModulatedHamiltonian build_laser_qubit(const PhysicalParams& p) { return two_qubit(p, false); }

ModulatedHamiltonian build_two_qubit_interaction(const PhysicalParams& p) {
  return two_qubit(p, true);
}

ModulatedHamiltonian build_nv_raman(const PhysicalParams& p) {
  ModulatedHamiltonian h(raman_space(p.n_max));
  const auto& s = h.space();
  h.add_static(embed(p.delta2 * local::projector(lv::kNvDim, lv::kE), s, lv::kNv));
  const Operator down_g = embed(local::transition(lv::kNvDim, lv::kG, lv::kE), s, lv::kNv);
  const Operator down_f = embed(local::transition(lv::kNvDim, lv::kF, lv::kE), s, lv::kNv);
  h.add(create(s, lv::kCavity) * down_g, p.g2, 0.0, true);
  h.add(down_f, p.omega_plus, 0.0, true, p.envelope_plus);
  return h;
}

Operator excitation_number(const HilbertSpace& s) {
  Operator n = embed(local::projector(lv::kQdDim, lv::kTauPlus) +
                         local::projector(lv::kQdDim, lv::kTauMinus),
                     s, lv::kQd);
  n += embed(local::projector(lv::kNvDim, lv::kE), s, lv::kNv);
  for (auto mode : {lv::kC0, lv::kC1, lv::kC2}) {
    n += embed(local::number(s.dim(mode)), s, mode);
  }
  return n;
}

}  // namespace hqpu::model
