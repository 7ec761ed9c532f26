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

#include "hqpu/qcore/modulated_hamiltonian.hpp"
#include "hqpu/qcore/types.hpp"

namespace hqpu::model {

/// Physical parameters of the QD / NV / cavity / fiber unit. Energies in meV,
/// decay times in ns, the fiber phase in radians.
struct PhysicalParams {
  // qubit-cavity couplings
  double g1 = 0.01;
  double g2 = 0.02;
  // classical drives of the two-qubit gate (vertical polarisation)
  double omega1 = 0.1;
  double omega2 = 0.15;
  // laser detunings from the QD and NV transitions
  double delta1 = 2.0;
  double delta2 = 2.2;
  // Zeeman splittings of the QD electron and trion; only their sum enters
  // the two-qubit gate
  double delta_e = 0.05;
  double delta_h = 0.05;
  // cavity-fiber coupling and the laser/cavity detuning offset
  double nu = 0.0145;
  double delta_small = 0.02;
  double phi = 0.0;

  // local pulses for single-qubit control
  double omega_v = 0.0;
  double omega_h = 0.0;
  double omega_v_prime = 0.0;
  double omega_plus = 0.1;
  qcore::Envelope envelope_v;
  qcore::Envelope envelope_h;
  qcore::Envelope envelope_v_prime;
  qcore::Envelope envelope_plus;

  // excited-level lifetimes
  double tau_qd = 1.4;
  double tau_nv = 12.0;

  std::size_t n_max = 2;

  /// Total Zeeman splitting delta_e + delta_h.
  double zeeman_sum() const noexcept { return delta_e + delta_h; }
  double sqrt2_nu() const noexcept { return kSqrt2 * nu; }

  /// Throws hqpu::ConfigError on non-finite energies, negative g1/g2/nu,
  /// non-positive lifetimes or n_max < 1.
  void validate() const;

  /// Multiplies g1, g2, omega1 and omega2 by `s`.
  PhysicalParams with_coupling_scale(double s) const;

  /// The experimentally motivated parameter set used for the gate-time and
  /// decoherence estimates.
  static PhysicalParams paper();
  /// Stronger couplings and wider detuning gaps, chosen so that brute-force
  /// propagation of the full interaction Hamiltonian finishes in seconds.
  static PhysicalParams desk_scale();
};

}  // namespace hqpu::model
