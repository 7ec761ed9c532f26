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

#include <array>
#include <string>

#include "hqpu/model/params.hpp"

namespace hqpu::effective {

enum class PropagationMethod {
  /// Adaptive Dormand-Prince integration of the time-dependent Hamiltonian.
  kOde,
  /// Exact diagonalisation in the static rotating frame (qcore::FramePropagator).
  kSpectral,
};

struct DynamicsCheckOptions {
  double t_final = 2000.0;  // ps
  PropagationMethod method = PropagationMethod::kOde;
  /// ODE only: per-step tolerance.
  double tol = 1e-12;
  /// ODE only: also rerun at tol / 32 and report the largest amplitude change.
  bool refine = false;
  /// Spectral only: spacing (ps) of the samples used for the population
  /// maxima and phase tracking.
  double sample_interval = 1.0;
};

struct BasisStateResult {
  std::string label;               // "x+g", "x+f", "x-g", "x-f"
  double extracted_phase = 0.0;    // arg <psi0|psi(T)>, rad
  double predicted_phase = 0.0;    // -E T / hbar from the final effective Hamiltonian, rad
  double overlap = 0.0;            // |<psi0|psi(T)>|
  double max_excited_population = 0.0;  // max over steps (or samples) of trion + NV excited population
  double max_photon_population = 0.0;   // max over steps of 1 - P(all modes in vacuum)
  double top_fock_population = 0.0;     // max over steps of P(any mode at n_max)
  double norm_drift = 0.0;
  double refinement_deviation = 0.0;    // 0 unless refine was requested
};

struct DynamicsCheckResult {
  /// Ordered x+g, x+f, x-g, x-f.
  std::array<BasisStateResult, 4> states;
  /// phi(x+g) - phi(x+f) - phi(x-g) + phi(x-f), unwrapped towards the prediction.
  double conditional_extracted = 0.0;
  /// -(Phi_+g - Phi_-g) T / hbar.
  double conditional_predicted = 0.0;
  double conditional_relative_error = 0.0;
};

/// Propagates each logical basis state (modes in vacuum) under the full
/// two-qubit interaction Hamiltonian and compares the accumulated phases
/// with the closed-form effective theory.
DynamicsCheckResult full_vs_effective(const model::PhysicalParams& p,
                                      const DynamicsCheckOptions& options = {});

}  // namespace hqpu::effective
