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

#include "hqpu/gates/raman.hpp"

#include <algorithm>
#include <cmath>

#include "hqpu/effective/effective_params.hpp"
#include "hqpu/model/builders.hpp"
#include "hqpu/qcore/local_ops.hpp"
#include "hqpu/qcore/propagate.hpp"

namespace hqpu::gates {

namespace lv = model::levels;

double nv_raman_effective_coupling(const model::PhysicalParams& p) {
  return p.g2 * p.omega_plus / effective::checked_denominator(p.delta2, 0.0, "delta2");
}

SingleQubitGate nv_raman_rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix u(2, 2);
  u << c, kI * s, kI * s, c;
  return {Target::kNv, u, Provenance::kRamanEffective};
}

SingleQubitGate nv_raman_unitary(double g_prime, double t) {
  return nv_raman_rotation(g_prime * t / kHbar);
}

Matrix raman_reduced_hamiltonian(const model::PhysicalParams& p, bool with_stark) {
  const double d = effective::checked_denominator(p.delta2, 0.0, "delta2");
  const double gp = p.g2 * p.omega_plus / d;
  Matrix h(2, 2);
  if (with_stark) {
    h << -p.omega_plus * p.omega_plus / d, -gp, -gp, -p.g2 * p.g2 / d;
  } else {
    h << 0.0, -gp, -gp, 0.0;
  }
  return h;
}

RamanRun simulate_raman_full(const model::PhysicalParams& p, double t, const RamanOptions& options) {
  qcore::ModulatedHamiltonian h = model::build_nv_raman(p);
  const auto& space = h.space();
  if (options.compensate_stark) {
    const double d = effective::checked_denominator(p.delta2, 0.0, "delta2");
    const std::size_t nc = space.dim(lv::kCavity);
    qcore::Operator shift =
        (p.omega_plus * p.omega_plus / d) *
        qcore::embed(qcore::local::projector(lv::kNvDim, lv::kF), space, lv::kNv);
    shift += (p.g2 * p.g2 / d) *
             (qcore::embed(qcore::local::projector(lv::kNvDim, lv::kG), space, lv::kNv) *
              qcore::embed(qcore::local::number(nc), space, lv::kCavity));
    h.add_static(shift);
  }

  const std::size_t f0 = space.index({{lv::kNv, lv::kF}, {lv::kCavity, 0}});
  const std::size_t g1 = space.index({{lv::kNv, lv::kG}, {lv::kCavity, 1}});
  const qcore::StateVector psi0 = qcore::StateVector::basis(space, f0);

  qcore::PropagationOptions opts;
  opts.tol = options.tol;
  const std::size_t n = std::max<std::size_t>(options.samples, 1);
  for (std::size_t k = 0; k <= n; ++k) {
    opts.sample_times.push_back(t * static_cast<double>(k) / static_cast<double>(n));
  }
  RamanRun run;
  run.g_prime = nv_raman_effective_coupling(p);
  double max_excited = 0.0;
  opts.observer = [&](double, const Vector& psi) {
    double pe = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      if (space.level(static_cast<std::size_t>(k), space.slot(lv::kNv)) == lv::kE) {
        pe += std::norm(psi(k));
      }
    }
    max_excited = std::max(max_excited, pe);
  };
  qcore::PropagationResult result = qcore::propagate(h, psi0, 0.0, t, opts);

  const Matrix h_stark = raman_reduced_hamiltonian(p, true);
  const qcore::HilbertSpace two = qcore::HilbertSpace::compose({{"raman", 2}});
  for (std::size_t k = 0; k < result.samples.size(); ++k) {
    const double tk = result.sample_times[k];
    const Vector& amps = result.samples[k].amplitudes();
    RamanSample s;
    s.t = tk;
    s.amp_f0 = amps(static_cast<Eigen::Index>(f0));
    s.amp_g1 = amps(static_cast<Eigen::Index>(g1));
    for (Eigen::Index j = 0; j < amps.size(); ++j) {
      if (space.level(static_cast<std::size_t>(j), space.slot(lv::kNv)) == lv::kE) {
        s.p_excited += std::norm(amps(j));
      }
    }
    const Matrix ideal = nv_raman_unitary(run.g_prime, tk).unitary;
    s.ideal_f0 = ideal(0, 0);
    s.ideal_g1 = ideal(1, 0);
    if (options.include_stark) {
      const Matrix u = qcore::matrix_propagator(qcore::Operator(two, h_stark), tk).matrix();
      s.stark_f0 = u(0, 0);
      s.stark_g1 = u(1, 0);
      run.max_stark_deviation =
          std::max(run.max_stark_deviation,
                   std::sqrt(std::norm(s.amp_f0 - s.stark_f0) + std::norm(s.amp_g1 - s.stark_g1)));
    }
    run.max_population_error =
        std::max({run.max_population_error, std::abs(std::norm(s.amp_f0) - std::norm(s.ideal_f0)),
                  std::abs(std::norm(s.amp_g1) - std::norm(s.ideal_g1))});
    run.max_ideal_deviation =
        std::max(run.max_ideal_deviation,
                 std::sqrt(std::norm(s.amp_f0 - s.ideal_f0) + std::norm(s.amp_g1 - s.ideal_g1)));
    run.samples.push_back(s);
  }
  run.max_excited = max_excited;
  run.final_state = std::move(result.state);
  return run;
}

}  // namespace hqpu::gates
