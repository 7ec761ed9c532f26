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

#include "hqpu/effective/effective_params.hpp"
#include "hqpu/effective/phases.hpp"
#include "hqpu/errors.hpp"
#include "hqpu/gates/raman.hpp"
#include "hqpu/gates/sequences.hpp"
#include "hqpu/gates/single_qubit.hpp"
#include "hqpu/qcore/fidelity.hpp"

namespace hqpu::gates {
namespace {

using model::PhysicalParams;

bool unitary(const Matrix& u, double tol = 1e-12) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

Matrix hadamard_matrix() {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Matrix product(const std::vector<SingleQubitGate>& gates) {
  Matrix u = Matrix::Identity(2, 2);
  for (const auto& g : gates) u = g.unitary * u;
  return u;
}

effective::GateSchedule default_schedule() {
  const auto p = PhysicalParams::paper();
  return effective::gate_time(effective::compute_phases(effective::effective_params(p), p));
}

TEST(QdRotation, ZeroAngleIsIdentity) {
  for (Axis a : {Axis::kX, Axis::kZ}) {
    EXPECT_TRUE(qd_rotation(a, 0.0).unitary.isApprox(Matrix::Identity(2, 2)));
  }
}

TEST(QdRotation, PiAboutZFlipsRelativePhase) {
  const Matrix u = qd_rotation(Axis::kZ, kPi).unitary;
  EXPECT_NEAR(std::abs(u(1, 1) / u(0, 0) + 1.0), 0.0, 1e-15);
  EXPECT_EQ(u(0, 1), Complex(0.0));
}

TEST(QdRotation, SameAxisAnglesAdd) {
  for (Axis a : {Axis::kX, Axis::kZ}) {
    const Matrix u = qd_rotation(a, 0.4).unitary * qd_rotation(a, 1.1).unitary;
    EXPECT_LT((u - qd_rotation(a, 1.5).unitary).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(qd_rotation(a, 0.4).target, Target::kQd);
    EXPECT_EQ(qd_rotation(a, 0.4).provenance, Provenance::kIdealRotation);
  }
}

TEST(Raman, EffectiveCoupling) {
  PhysicalParams p;
  EXPECT_NEAR(nv_raman_effective_coupling(p), 9.0909e-4, 1e-8);
  p.omega_plus = 0.0;
  EXPECT_EQ(nv_raman_effective_coupling(p), 0.0);
  p = PhysicalParams{};
  p.g2 *= 3.0;
  EXPECT_NEAR(nv_raman_effective_coupling(p), 3.0 * nv_raman_effective_coupling(PhysicalParams{}),
              1e-18);
  p.delta2 = 0.0;
  EXPECT_THROW(nv_raman_effective_coupling(p), DegenerateParameterError);
}

TEST(Raman, UnitaryEndpoints) {
  EXPECT_TRUE(nv_raman_unitary(1e-3, 0.0).unitary.isApprox(Matrix::Identity(2, 2)));
  const Matrix u = nv_raman_rotation(kPi / 2.0).unitary;
  EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0) - kI), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1) - kI), 0.0, 1e-15);
  for (double theta : {0.0, 0.3, 1.0, 2.5}) {
    const Matrix r = nv_raman_rotation(theta).unitary;
    EXPECT_NEAR(std::abs(r.determinant() - 1.0), 0.0, 1e-15);
    EXPECT_TRUE(unitary(r));
  }
  const double g = 9e-4;
  const double t = 500.0;
  EXPECT_TRUE(nv_raman_unitary(g, t).unitary.isApprox(nv_raman_rotation(g * t / kHbar).unitary));
  EXPECT_EQ(nv_raman_unitary(g, t).provenance, Provenance::kRamanEffective);
}

TEST(Raman, ReducedHamiltonianWithoutStarkIsPureExchange) {
  const PhysicalParams p;
  const Matrix h = raman_reduced_hamiltonian(p, false);
  const double g = nv_raman_effective_coupling(p);
  EXPECT_NEAR(std::abs(h(0, 1) + g), 0.0, 1e-18);
  EXPECT_EQ(h(0, 0), Complex(0.0));
  const Matrix s = raman_reduced_hamiltonian(p, true);
  EXPECT_NEAR(s(0, 0).real(), -p.omega_plus * p.omega_plus / p.delta2, 1e-18);
  EXPECT_NEAR(s(1, 1).real(), -p.g2 * p.g2 / p.delta2, 1e-18);
}

TEST(Raman, NoCavityCouplingLeavesPopulationInPlace) {
  PhysicalParams p;
  p.g2 = 0.0;
  RamanOptions opt;
  opt.samples = 20;
  const auto run = simulate_raman_full(p, 2000.0, opt);
  for (const auto& s : run.samples) {
    EXPECT_EQ(std::norm(s.amp_g1), 0.0);
    EXPECT_NEAR(std::norm(s.amp_f0) + s.p_excited, 1.0, 1e-8);
  }
}

TEST(Raman, FullLambdaSystemTracksRotationAtModerateDetuning) {
  PhysicalParams p;
  p.delta2 = 20.0 * p.omega_plus;
  const double g = nv_raman_effective_coupling(p);
  RamanOptions opt;
  opt.compensate_stark = true;
  opt.samples = 50;
  const auto run = simulate_raman_full(p, kPi * kHbar / (2.0 * g), opt);
  const double bound = std::pow(p.omega_plus / p.delta2, 2);
  // the sudden switch-on lets |e> overshoot to 4 (Omega/Delta)^2
  EXPECT_LT(run.max_excited, 5.0 * bound);
  EXPECT_LT(run.max_population_error, 10.0 * bound);
  EXPECT_NEAR(std::norm(run.samples.back().amp_g1), 1.0, 10.0 * bound);
}

TEST(Corrections, ZeroPhasesGiveIdentities) {
  const auto sched = effective::schedule_at(effective::PhaseSet{}, 1000.0);
  for (const auto& g : correction_phases(sched)) {
    EXPECT_TRUE(g.unitary.isApprox(Matrix::Identity(2, 2)));
    EXPECT_EQ(g.provenance, Provenance::kCorrectionPhase);
  }
}

TEST(Corrections, TurnDiagonalEvolutionIntoControlledPhase) {
  const auto sched = default_schedule();
  Matrix u = effective::logical_evolution(sched.phases, sched.t_gate).matrix();
  for (const auto& g : correction_phases(sched)) {
    EXPECT_TRUE(unitary(g.unitary));
    u = to_logical(g).matrix() * u;
  }
  EXPECT_LT((u - effective::cz_unitary(sched).matrix()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_GE(qcore::average_gate_fidelity(u, controlled_phase().matrix(), 4), 1.0 - 1e-12);
}

TEST(Corrections, ArbitraryTimeLeavesOnlyConditionalPhase) {
  const auto sched = default_schedule();
  const double t = 0.37 * sched.t_gate;
  const auto at = effective::schedule_at(sched.phases, t);
  Matrix u = effective::logical_evolution(at.phases, t).matrix();
  for (const auto& g : correction_phases(at)) u = to_logical(g).matrix() * u;
  EXPECT_LT((u - effective::cz_unitary(sched, t).matrix()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Hadamard, NativeSequencesEqualHadamardUpToGlobalPhase) {
  for (Target t : {Target::kQd, Target::kNv}) {
    for (const auto& g : hadamard(t)) EXPECT_EQ(g.target, t);
  }
  EXPECT_NEAR(qcore::average_gate_fidelity(product(hadamard(Target::kQd)), hadamard_matrix(), 2),
              1.0, 1e-12);
  // NV matrices are written in (f, g) order while |g> plays the role of |0>
  Matrix flip(2, 2);
  flip << 0.0, 1.0, 1.0, 0.0;
  const Matrix nv_h = flip * hadamard_matrix() * flip;
  EXPECT_NEAR(qcore::average_gate_fidelity(product(hadamard(Target::kNv)), nv_h, 2), 1.0, 1e-12);
  const Matrix lifted = to_logical({Target::kNv, product(hadamard(Target::kNv)),
                                    Provenance::kIdealRotation}).matrix();
  Matrix expect = Matrix::Zero(4, 4);
  expect.block(0, 0, 2, 2) = hadamard_matrix();
  expect.block(2, 2, 2, 2) = hadamard_matrix();
  EXPECT_NEAR(qcore::average_gate_fidelity(lifted, expect, 4), 1.0, 1e-12);
}

TEST(Swap, SequenceComposesToSwap) {
  const auto steps = swap_sequence();
  EXPECT_EQ(entangling_count(steps), 3u);
  const Matrix u = compose(steps).matrix();
  EXPECT_TRUE(unitary(u));
  EXPECT_GE(qcore::average_gate_fidelity(u, swap_gate().matrix(), 4), 1.0 - 1e-12);
  // |x+ f> <-> |x- g> in tensor order (x+g, x+f, x-g, x-f)
  const Complex phase = u(0, 0);
  EXPECT_NEAR(std::abs(u(2, 1) - phase), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 2) - phase), 0.0, 1e-12);
}

TEST(Logical, LiftPlacesGatesOnTheirFactor) {
  const Matrix x = qd_rotation(Axis::kX, 0.8).unitary;
  const Matrix lifted = to_logical(qd_rotation(Axis::kX, 0.8)).matrix();
  Matrix expect = Matrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) expect.block(2 * i, 2 * j, 2, 2) = x(i, j) * Matrix::Identity(2, 2);
  }
  EXPECT_LT((lifted - expect).cwiseAbs().maxCoeff(), 1e-15);
  // NV gates are given in (f, g) order and act on (g, f) in the lift
  const Matrix p = to_logical(nv_phase(0.9)).matrix();
  EXPECT_NEAR(std::abs(p(0, 0) - std::exp(kI * 0.9)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p(1, 1) - 1.0), 0.0, 1e-15);
}

}  // namespace
}  // namespace hqpu::gates
