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

#include <cstddef>
#include <vector>

#include "hqpu/gates/single_qubit.hpp"
#include "hqpu/model/params.hpp"
#include "hqpu/qcore/operator.hpp"

namespace hqpu::gates {

/// Two-photon coupling g' = g2 Omega_+ / Delta2 (meV). Throws
/// DegenerateParameterError if Delta2 vanishes.
double nv_raman_effective_coupling(const model::PhysicalParams& p);

/// exp(i theta sigma_x) = [[cos theta, i sin theta], [i sin theta, cos theta]]
/// on NV (f, g) with theta = g' t / hbar.
SingleQubitGate nv_raman_unitary(double g_prime, double t);

/// Raman x-rotation with a prescribed angle theta in [0, pi).
SingleQubitGate nv_raman_rotation(double theta);

struct RamanOptions {
  /// Add +|Omega_+|^2/Delta2 |f><f| + |g2|^2/Delta2 a^dag a |g><g| to the
  /// full Hamiltonian, cancelling the two dispersive Stark shifts.
  bool compensate_stark = false;
  /// Also propagate the reduced two-level model that keeps the Stark shifts.
  bool include_stark = false;
  /// Equal intervals on [0, t]; the series has samples + 1 points.
  std::size_t samples = 200;
  double tol = 1e-12;
};

struct RamanSample {
  double t = 0.0;         // ps
  Complex amp_f0;         // <f, 0|psi(t)>
  Complex amp_g1;         // <g, 1|psi(t)>
  double p_excited = 0.0; // population of |e>
  /// Ideal rotation exp(i theta sigma_x) applied to |f, 0>.
  Complex ideal_f0;
  Complex ideal_g1;
  /// Reduced model with Stark shifts (zero unless include_stark).
  Complex stark_f0;
  Complex stark_g1;
};

struct RamanRun {
  qcore::StateVector final_state;
  std::vector<RamanSample> samples;
  double g_prime = 0.0;
  double max_excited = 0.0;
  /// max over samples of |P_full - P_ideal| for |f,0> and |g,1>.
  double max_population_error = 0.0;
  /// max over samples of the amplitude distance to the ideal rotation.
  double max_ideal_deviation = 0.0;
  /// max over samples of the amplitude distance to the Stark-shifted
  /// reduced model (zero unless include_stark).
  double max_stark_deviation = 0.0;
};

/// Propagates |f, 0> (cavity in vacuum) under the full Lambda-system
/// Hamiltonian on NV x cav for [0, t] and compares with the reduced models.
RamanRun simulate_raman_full(const model::PhysicalParams& p, double t,
                             const RamanOptions& options = {});

/// The reduced 2x2 Hamiltonian on {|f,0>, |g,1>} obtained by eliminating
/// |e>: -(1/Delta2) [[Omega_+^2, g2 Omega_+], [g2 Omega_+, g2^2]], minus the
/// compensated shifts if requested.
Matrix raman_reduced_hamiltonian(const model::PhysicalParams& p, bool with_stark);

}  // namespace hqpu::gates
