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

#include "hqpu/effective/dynamics_check.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "hqpu/effective/effective_params.hpp"
#include "hqpu/effective/phases.hpp"
#include "hqpu/model/builders.hpp"
#include "hqpu/qcore/propagate.hpp"

namespace hqpu::effective {

namespace {

namespace lv = model::levels;

struct BasisLabel {
  const char* label;
  std::size_t qd;
  std::size_t nv;
};

constexpr BasisLabel kBasis[4] = {{"x+g", lv::kXPlus, lv::kG},
                                  {"x+f", lv::kXPlus, lv::kF},
                                  {"x-g", lv::kXMinus, lv::kG},
                                  {"x-f", lv::kXMinus, lv::kF}};

// Per-basis-index membership flags used by the observer.
struct Masks {
  std::vector<char> excited;
  std::vector<char> vacuum;
  std::vector<char> top;
};

Masks build_masks(const qcore::HilbertSpace& s) {
  const std::size_t qd = s.slot(lv::kQd);
  const std::size_t nv = s.slot(lv::kNv);
  const std::size_t modes[3] = {s.slot(lv::kC0), s.slot(lv::kC1), s.slot(lv::kC2)};
  Masks m;
  m.excited.resize(s.total_dim());
  m.vacuum.resize(s.total_dim());
  m.top.resize(s.total_dim());
  for (std::size_t k = 0; k < s.total_dim(); ++k) {
    const std::size_t q = s.level(k, qd);
    m.excited[k] = q == lv::kTauPlus || q == lv::kTauMinus || s.level(k, nv) == lv::kE;
    bool vac = true;
    bool top = false;
    for (std::size_t slot : modes) {
      const std::size_t n = s.level(k, slot);
      vac = vac && n == 0;
      top = top || n + 1 == s.subsystems()[slot].dim;
    }
    m.vacuum[k] = vac;
    m.top[k] = top;
  }
  return m;
}

double wrap(double x) { return std::remainder(x, 2.0 * kPi); }

}  // namespace

DynamicsCheckResult full_vs_effective(const model::PhysicalParams& p,
                                      const DynamicsCheckOptions& options) {
  const EffectiveParams e = effective_params(p);
  const PhaseSet phases = compute_phases(e, p);
  const auto energies = phases.logical_energies();
  const double t_final = options.t_final;

  const qcore::ModulatedHamiltonian h = model::build_two_qubit_interaction(p);
  const qcore::HilbertSpace& space = h.space();
  const Masks masks = build_masks(space);

  std::optional<qcore::FramePropagator> frame;
  DynamicsCheckResult out;
  for (std::size_t b = 0; b < 4; ++b) {
    BasisStateResult& r = out.states[b];
    r.label = kBasis[b].label;
    r.predicted_phase = -energies[b] * t_final / kHbar;

    const std::size_t k0 = space.index({{lv::kQd, kBasis[b].qd}, {lv::kNv, kBasis[b].nv}});
    const qcore::StateVector psi0 = qcore::StateVector::basis(space, k0);

    // arg <psi0|psi(t)> followed continuously from t = 0
    double unwrapped = 0.0;
    double last = 0.0;
    auto observe = [&](const Vector& psi) {
      double excited = 0.0;
      double vacuum = 0.0;
      double top = 0.0;
      for (Eigen::Index k = 0; k < psi.size(); ++k) {
        const double w = std::norm(psi(k));
        const auto ku = static_cast<std::size_t>(k);
        if (masks.excited[ku]) excited += w;
        if (masks.vacuum[ku]) vacuum += w;
        if (masks.top[ku]) top += w;
      }
      r.max_excited_population = std::max(r.max_excited_population, excited);
      r.max_photon_population = std::max(r.max_photon_population, 1.0 - vacuum);
      r.top_fock_population = std::max(r.top_fock_population, top);
      const double now = std::arg(psi(static_cast<Eigen::Index>(k0)));
      unwrapped += wrap(now - last);
      last = now;
    };

    qcore::StateVector final_state;
    if (options.method == PropagationMethod::kSpectral) {
      if (!frame) frame.emplace(h);
      const auto steps = static_cast<std::size_t>(
          std::max(1.0, std::ceil(t_final / options.sample_interval)));
      for (std::size_t k = 0; k <= steps; ++k) {
        const double t = t_final * static_cast<double>(k) / static_cast<double>(steps);
        final_state = frame->evolve(psi0, t);
        observe(final_state.amplitudes());
      }
      r.norm_drift = std::abs(final_state.norm_squared() - 1.0);
    } else {
      qcore::PropagationOptions opts;
      opts.tol = options.tol;
      opts.observer = [&](double, const Vector& psi) { observe(psi); };
      qcore::PropagationResult run;
      if (options.refine) {
        auto check = qcore::propagate_with_refinement(h, psi0, 0.0, t_final, opts);
        r.refinement_deviation = check.max_deviation;
        run = std::move(check.coarse);
      } else {
        run = qcore::propagate(h, psi0, 0.0, t_final, opts);
      }
      r.norm_drift = run.norm_drift;
      final_state = std::move(run.state);
    }
    const Complex amp = psi0.inner(final_state);
    r.overlap = std::abs(amp);
    // final phase pinned to the exact overlap, branch chosen by the tracked path
    r.extracted_phase = unwrapped + wrap(std::arg(amp) - unwrapped);
  }

  out.conditional_extracted = out.states[0].extracted_phase - out.states[1].extracted_phase -
                              out.states[2].extracted_phase + out.states[3].extracted_phase;
  out.conditional_predicted =
      -(phases.phi_plus_g - phases.phi_minus_g) * t_final / kHbar;
  out.conditional_relative_error =
      std::abs(out.conditional_extracted - out.conditional_predicted) /
      std::abs(out.conditional_predicted);
  return out;
}

}  // namespace hqpu::effective
