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

#include "hqpu/effective/effective_params.hpp"
#include "hqpu/qcore/operator.hpp"

namespace hqpu::effective {

/// Energy shifts (meV) of the logical states in the dispersive regime.
/// phi_plus_g and phi_minus_g already include the complex-conjugate doubling.
struct PhaseSet {
  double phi_plus = 0.0;
  double phi_minus = 0.0;
  double phi_g = 0.0;
  double phi_plus_g = 0.0;
  double phi_minus_g = 0.0;

  /// Energies of |x+ g>, |x+ f>, |x- g>, |x- f> in that order.
  std::array<double, 4> logical_energies() const noexcept;
};

/// Second-stage mode weights indexed like EffectiveParams:
/// [0] = 1/delta, [1] = 1/(delta - sqrt2 nu), [2] = 1/(delta + sqrt2 nu).
/// Throws DegenerateParameterError if a gap vanishes.
std::array<double, 3> mode_weights(const model::PhysicalParams& p);

PhaseSet compute_phases(const EffectiveParams& e, const model::PhysicalParams& p);

struct GateSchedule {
  PhaseSet phases;
  double t_gate = 0.0;               // ps
  double correction_plus = 0.0;      // Phi_+ t / hbar (rad)
  double correction_minus = 0.0;     // Phi_- t / hbar (rad)
  double correction_g = 0.0;         // (Phi_g + Phi_-g) t / hbar (rad)
  double conditional_phase = 0.0;    // (Phi_+g - Phi_-g) t / hbar (rad)
};

/// Schedule at time t (ps) for the given phases.
GateSchedule schedule_at(const PhaseSet& phases, double t);

/// Schedule at t_gate = pi hbar / |Phi_+g - Phi_-g|. Throws
/// DegenerateParameterError if the two cross phases coincide.
GateSchedule gate_time(const PhaseSet& phases);

/// Two-qubit logical space QD(2) x NV(2); levels QD: [x+, x-], NV: [g, f].
qcore::HilbertSpace logical_space();

/// Diagonal evolution exp(-i E t / hbar) of the logical states under the
/// final effective Hamiltonian, on logical_space().
qcore::Operator logical_evolution(const PhaseSet& phases, double t);

/// Conditional-phase gate after the three local corrections:
/// diag(exp(-i (Phi_+g - Phi_-g) t / hbar), 1, 1, 1) on |x+ g>, |x+ f>,
/// |x- g>, |x- f>. Evaluated at sched.t_gate.
qcore::Operator cz_unitary(const GateSchedule& sched);
/// As above, at an arbitrary time t (ps).
qcore::Operator cz_unitary(const GateSchedule& sched, double t);

}  // namespace hqpu::effective
