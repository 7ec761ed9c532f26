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
#include <vector>

#include "hqpu/model/params.hpp"

namespace hqpu::effective {

/// Coefficients of the first-stage effective Hamiltonian, in meV. Arrays are
/// indexed by normal mode: [0] -> c0, [1] -> c1, [2] -> c2.
struct EffectiveParams {
  std::array<double, 3> lambda_plus{};
  std::array<double, 3> lambda_minus{};
  std::array<double, 3> lambda_g{};
  std::array<double, 3> kappa_plus{};
  std::array<double, 3> kappa_minus{};
  std::array<double, 3> kappa_g{};
  std::array<double, 3> eps_plus{};
  std::array<double, 3> eps_minus{};
  std::array<double, 3> eps_g{};
  // classical-drive Stark scalars on |x+>, |x->, |g>
  double eps0_plus = 0.0;
  double eps0_minus = 0.0;
  double eps0_g = 0.0;
};

/// Evaluates every coefficient from the physical parameters.
///
/// Throws DegenerateParameterError when a detuning combination in a
/// denominator vanishes (relative to the magnitudes it is built from).
EffectiveParams effective_params(const model::PhysicalParams& p);

/// A detuning combination that appears in a denominator: value = a + b,
/// scale = |a| + |b|.
struct Resonance {
  std::string name;
  double value = 0.0;
  double scale = 0.0;
};

/// Every denominator used by effective_params and the second-stage mode
/// weights, in a fixed order.
std::vector<Resonance> resonances(const model::PhysicalParams& p);

/// Returns a + b, or throws DegenerateParameterError naming `resonance` if
/// |a + b| <= 1e-9 (|a| + |b|).
double checked_denominator(double a, double b, const char* resonance);

}  // namespace hqpu::effective
