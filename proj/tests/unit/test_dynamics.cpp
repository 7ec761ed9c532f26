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

#include <gtest/gtest.h>

#include <cmath>

#include "hqpu/effective/dynamics_check.hpp"

namespace hqpu::effective {
namespace {

using model::PhysicalParams;

TEST(DynamicsCheck, OdeAndSpectralRoutesAgreeOnShortHorizon) {
  const auto p = PhysicalParams::desk_scale();
  DynamicsCheckOptions ode;
  ode.t_final = 100.0;
  ode.tol = 1e-11;
  DynamicsCheckOptions spectral = ode;
  spectral.method = PropagationMethod::kSpectral;
  spectral.sample_interval = 0.05;
  const auto a = full_vs_effective(p, ode);
  const auto b = full_vs_effective(p, spectral);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(a.states[k].label, b.states[k].label);
    EXPECT_NEAR(a.states[k].extracted_phase, b.states[k].extracted_phase, 1e-6);
    EXPECT_NEAR(a.states[k].overlap, b.states[k].overlap, 1e-7);
    EXPECT_NEAR(a.states[k].max_excited_population, b.states[k].max_excited_population, 1e-3);
    EXPECT_LT(a.states[k].norm_drift, 1e-8);
    EXPECT_LT(b.states[k].norm_drift, 1e-10);
  }
  EXPECT_DOUBLE_EQ(a.conditional_predicted, b.conditional_predicted);
}

TEST(DynamicsCheck, WithoutCavityCouplingTheQubitsStayIndependent) {
  auto p = PhysicalParams::desk_scale();
  p.g1 = 0.0;
  p.g2 = 0.0;
  DynamicsCheckOptions opt;
  opt.t_final = 500.0;
  opt.method = PropagationMethod::kSpectral;
  opt.sample_interval = 0.5;
  const auto r = full_vs_effective(p, opt);
  EXPECT_EQ(r.conditional_predicted, 0.0);
  EXPECT_NEAR(r.conditional_extracted, 0.0, 1e-9);
  for (const auto& s : r.states) {
    EXPECT_EQ(s.max_photon_population, 0.0);
    // the classical drives push each ground state down in energy, so the
    // phase advances
    EXPECT_GT(s.extracted_phase, 0.0);
    EXPECT_GT(s.predicted_phase, 0.0);
  }
}

TEST(DynamicsCheck, RefinementReportsSmallDeviation) {
  const auto p = PhysicalParams::desk_scale();
  DynamicsCheckOptions opt;
  opt.t_final = 20.0;
  opt.refine = true;
  const auto r = full_vs_effective(p, opt);
  for (const auto& s : r.states) {
    EXPECT_GT(s.refinement_deviation, 0.0);
    EXPECT_LT(s.refinement_deviation, 1e-7);
  }
}

}  // namespace
}  // namespace hqpu::effective
