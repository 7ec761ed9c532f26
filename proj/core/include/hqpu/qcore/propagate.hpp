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
#include <functional>
#include <vector>

#include "hqpu/qcore/modulated_hamiltonian.hpp"
#include "hqpu/qcore/operator.hpp"

namespace hqpu::qcore {

struct PropagationOptions {
  /// Per-step local error bound on each amplitude (absolute; states are
  /// normalised so this is also relative to the state norm). The scheme is
  /// not norm preserving; its drift grows roughly linearly with tol, and
  /// 1e-12 keeps it below 1e-8 over a few thousand oscillation periods.
  double tol = 1e-12;
  /// First trial step in ps; 0 selects 2*pi*hbar / (50 * E_max) where E_max
  /// is the largest modulation frequency or energy scale of H.
  double initial_step = 0.0;
  /// Upper bound on the step in ps; 0 means unbounded.
  double max_step = 0.0;
  /// A step below this (ps) raises ConvergenceError.
  double min_step = 1e-10;
  std::size_t max_steps = 100'000'000;
  /// Times (ps, within [t_start, t_end]) at which the state is recorded
  /// exactly; the integrator lands on each of them.
  std::vector<double> sample_times;
  /// Called at t_start and after every accepted step.
  std::function<void(double t, const Vector& psi)> observer;
};

struct PropagationResult {
  StateVector state;
  std::vector<double> sample_times;
  std::vector<StateVector> samples;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  /// | ||psi(t_end)||^2 - ||psi(t_start)||^2 |
  double norm_drift = 0.0;
};

/// Integrates i*hbar d/dt psi = H(t) psi from t_start to t_end (ps) with an
/// adaptive Dormand-Prince 5(4) scheme. The returned state is not
/// renormalised; `norm_drift` reports the loss.
///
/// Throws std::invalid_argument for t_end < t_start, tol <= 0 or a space
/// mismatch, and hqpu::ConvergenceError on non-finite amplitudes, step
/// underflow or exhausting `max_steps`.
PropagationResult propagate(const ModulatedHamiltonian& h, const StateVector& psi0, double t_start,
                            double t_end, const PropagationOptions& options = {});

/// Result of repeating a propagation with the tolerance divided by 32, which
/// halves the typical step of a fifth-order scheme.
struct RefinementCheck {
  PropagationResult coarse;
  PropagationResult fine;
  /// max_i |psi_coarse_i - psi_fine_i|
  double max_deviation = 0.0;
};

RefinementCheck propagate_with_refinement(const ModulatedHamiltonian& h, const StateVector& psi0,
                                          double t_start, double t_end,
                                          const PropagationOptions& options = {});

/// exp(-i H t / hbar) for a time-independent Hermitian H (meV), t in ps.
/// Throws std::invalid_argument if H deviates from Hermitian by more than
/// 1e-10 (relative).
Operator matrix_propagator(const Operator& h, double t);

/// Exact evolution for a modulated Hamiltonian that becomes time independent
/// in some diagonal rotating frame, i.e. there are energies D with
/// D_j - D_k = frequency for every nonzero element (j, k) of every term.
/// Then psi(t) = exp(i D t / hbar) exp(-i (D + H(0)) t / hbar) psi(0).
///
/// The constructor diagonalises D + H(0) once; evolve() is a pair of dense
/// matrix-vector products. Throws std::invalid_argument if a term has a
/// non-constant envelope or no consistent frame exists.
class FramePropagator {
 public:
  explicit FramePropagator(const ModulatedHamiltonian& h);

  const HilbertSpace& space() const noexcept { return space_; }
  /// Frame energies D (meV); zero on the first state of each coupled block.
  const Eigen::VectorXd& frame_energies() const noexcept { return frame_; }

  /// State at time t (ps) from psi0 at time 0.
  StateVector evolve(const StateVector& psi0, double t) const;

 private:
  HilbertSpace space_;
  Eigen::VectorXd frame_;
  Eigen::VectorXd energies_;
  Matrix vectors_;
};

}  // namespace hqpu::qcore
