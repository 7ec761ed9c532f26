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

#include <algorithm>
#include <random>
#include <set>

#include "hqpu/errors.hpp"
#include "hqpu/model/builders.hpp"
#include "hqpu/model/normal_modes.hpp"
#include "hqpu/qcore/local_ops.hpp"

namespace hqpu::model {
namespace {

namespace lv = levels;
using qcore::ModulatedHamiltonian;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void expect_hermitian_at_random_times(const ModulatedHamiltonian& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(0.0, 1e5);
  for (int k = 0; k < 100; ++k) {
    const Matrix m = h.evaluate(time(rng));
    ASSERT_LE(max_abs(m - m.adjoint()), 1e-12 * std::max(1.0, max_abs(m)));
  }
}

PhysicalParams driven() {
  PhysicalParams p;
  p.omega_v = 0.03;
  p.omega_h = 0.02;
  p.omega_v_prime = 0.04;
  return p;
}

TEST(Params, ValidateRejectsBadValues) {
  PhysicalParams p;
  EXPECT_NO_THROW(p.validate());
  p.g1 = -1.0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = PhysicalParams{};
  p.tau_nv = 0.0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = PhysicalParams{};
  p.n_max = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = PhysicalParams{};
  p.delta2 = std::numeric_limits<double>::infinity();
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(Params, CouplingScaleTouchesOnlyGAndOmega) {
  const auto p = PhysicalParams::paper().with_coupling_scale(3.0);
  EXPECT_DOUBLE_EQ(p.g1, 0.03);
  EXPECT_DOUBLE_EQ(p.omega2, 0.45);
  EXPECT_DOUBLE_EQ(p.delta1, 2.0);
  EXPECT_DOUBLE_EQ(p.nu, 0.0145);
}

TEST(LaserQd, DriveFreeLimitIsDiagonal) {
  PhysicalParams p;
  const Matrix h = build_laser_qd(p).evaluate(0.0);
  Eigen::Vector4cd diag(-p.delta_e, 0.0, p.delta1 + p.delta_h, p.delta1);
  EXPECT_LT(max_abs(h - Matrix(diag.asDiagonal())), 1e-15);
}

TEST(LaserQd, MatrixElements) {
  const auto p = driven();
  const Matrix h = build_laser_qd(p).evaluate(0.0);
  EXPECT_EQ(h(lv::kTauMinus, lv::kXMinus), Complex(0.5 * p.omega_v));
  EXPECT_EQ(h(lv::kTauPlus, lv::kXPlus), Complex(0.5 * p.omega_v));
  EXPECT_EQ(h(lv::kXPlus, lv::kTauMinus), 0.5 * kI * p.omega_h);
  EXPECT_EQ(h(lv::kXMinus, lv::kTauPlus), 0.5 * kI * p.omega_h);
}

TEST(LaserQd, VerticalOnlySplitsIntoTwoLevelBlocks) {
  auto p = driven();
  p.omega_h = 0.0;
  const Matrix h = build_laser_qd(p).evaluate(0.0);
  // {x+, tau+} and {x-, tau-} do not talk to each other
  for (auto a : {lv::kXPlus, lv::kTauPlus}) {
    for (auto b : {lv::kXMinus, lv::kTauMinus}) EXPECT_EQ(h(a, b), Complex(0.0));
  }
}

TEST(LaserQd, InteractionPictureHasNoStaticPartAndMatchesAtZero) {
  const auto p = driven();
  const auto rot = build_laser_qd(p, Frame::kRotating).evaluate(0.0);
  const auto inter = build_laser_qd(p, Frame::kInteraction).evaluate(0.0);
  Matrix off = rot;
  for (Eigen::Index i = 0; i < 4; ++i) off(i, i) = 0.0;
  EXPECT_LT(max_abs(off - inter), 1e-15);
  expect_hermitian_at_random_times(build_laser_qd(p, Frame::kInteraction), 3);
}

TEST(LaserNv, MatrixElementsAndDriveFreeLimit) {
  auto p = driven();
  const Matrix h = build_laser_nv(p).evaluate(0.0);
  EXPECT_EQ(h(lv::kG, lv::kE), Complex(p.omega_v_prime));
  EXPECT_EQ(h(lv::kF, lv::kE), Complex(p.omega_plus));
  EXPECT_EQ(h(lv::kE, lv::kE), Complex(p.delta2));
  p.omega_v_prime = 0.0;
  p.omega_plus = 0.0;
  Eigen::Vector3cd diag(0.0, 0.0, p.delta2);
  EXPECT_LT(max_abs(build_laser_nv(p).evaluate(0.0) - Matrix(diag.asDiagonal())), 1e-15);
  expect_hermitian_at_random_times(build_laser_nv(driven()), 4);
}

TEST(QubitCavity, ModulationFrequencies) {
  const PhysicalParams p;
  const auto h = build_qubit_cavity(p);
  std::multiset<double> freqs;
  for (const auto& term : h.terms()) freqs.insert(term.frequency);
  const double d = p.delta_small;
  EXPECT_EQ(freqs, (std::multiset<double>{p.delta1 + d + p.zeeman_sum(), p.delta1 + d,
                                          p.delta2 + d}));
  expect_hermitian_at_random_times(h, 5);
}

TEST(QubitCavity, EachTermLowersAModeAndRaisesAQubit) {
  const PhysicalParams p;
  const auto h = build_qubit_cavity(p);
  const auto& s = h.space();
  for (const auto& term : h.terms()) {
    const Matrix& m = term.op.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (m(r, c) == Complex(0.0)) continue;
        const auto from = s.local_indices(static_cast<std::size_t>(c));
        const auto to = s.local_indices(static_cast<std::size_t>(r));
        const long photons = static_cast<long>(to[2] + to[3]) - static_cast<long>(from[2] + from[3]);
        EXPECT_EQ(photons, -1);
        EXPECT_TRUE(to[0] != from[0] || to[1] != from[1]);
      }
    }
  }
}

TEST(QubitCavity, ZeroG1DecouplesTheDot) {
  PhysicalParams p;
  p.g1 = 0.0;
  const Matrix h = build_qubit_cavity(p).evaluate(17.0);
  const auto& s = build_qubit_cavity(p).space();
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      if (h(r, c) == Complex(0.0)) continue;
      EXPECT_EQ(s.level(static_cast<std::size_t>(r), 0), s.level(static_cast<std::size_t>(c), 0));
    }
  }
}

TEST(CavityFiber, SingleExcitationEigenvalues) {
  const PhysicalParams p;
  const Matrix m = cavity_fiber_coupling_matrix(p);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  const auto& ev = eig.eigenvalues();
  EXPECT_NEAR(ev(0), -0.020506097, 1e-9);
  EXPECT_NEAR(ev(1), 0.0, 1e-15);
  EXPECT_NEAR(ev(2), 0.020506097, 1e-9);
  expect_hermitian_at_random_times(build_cavity_fiber(p), 6);
}

TEST(CavityFiber, ZeroNuGivesZeroOperator) {
  PhysicalParams p;
  p.nu = 0.0;
  EXPECT_EQ(max_abs(build_cavity_fiber(p).evaluate(1.0)), 0.0);
}

TEST(CavityFiber, HermitianForAnyPhase) {
  PhysicalParams p;
  for (double phi : {0.0, 0.7, 2.0, -3.0}) {
    p.phi = phi;
    const Matrix m = build_cavity_fiber(p).evaluate(0.0);
    EXPECT_LT(max_abs(m - m.adjoint()), 1e-15);
  }
}

TEST(NormalModes, TransformIsUnitaryAndDiagonalises) {
  for (double phi : {0.0, 0.4, kPi}) {
    PhysicalParams p;
    p.phi = phi;
    const Matrix t = normal_mode_transform(phi);
    EXPECT_LT(max_abs(t.adjoint() * t - Matrix::Identity(3, 3)), 1e-14);
    const Matrix d = t.adjoint() * cavity_fiber_coupling_matrix(p) * t;
    const auto f = normal_mode_frequencies(p);
    Matrix expect = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) expect(i, i) = f(i);
    EXPECT_LT(max_abs(d - expect), 1e-12);
    EXPECT_NEAR(f(1), kSqrt2 * p.nu, 1e-15);
    EXPECT_NEAR(f(2), -kSqrt2 * p.nu, 1e-15);
  }
}

TEST(NormalModes, PhaseOnlyOnSecondCavityComponent) {
  const Matrix t0 = normal_mode_transform(0.0);
  const Matrix t1 = normal_mode_transform(1.3);
  // the a2 components pick up exp(i phi); the rest is unchanged
  for (Eigen::Index c = 0; c < 3; ++c) {
    EXPECT_LT(std::abs(t1(0, c) - t0(0, c)), 1e-15);
    EXPECT_LT(std::abs(t1(2, c) - t0(2, c)), 1e-15);
    EXPECT_LT(std::abs(t1(1, c) - std::exp(kI * 1.3) * t0(1, c)), 1e-15);
  }
}

TEST(TwoQubit, TermCountAndHermiticity) {
  const PhysicalParams p;
  const auto h = build_two_qubit_interaction(p);
  EXPECT_EQ(h.terms().size(), 12u);
  EXPECT_EQ(h.expanded_term_count(), 24u);
  EXPECT_EQ(h.space().total_dim(), 4u * 3u * 27u);
  expect_hermitian_at_random_times(h, 8);
}

TEST(TwoQubit, CavityCouplingReadOffAtTimeZero) {
  const PhysicalParams p;
  const auto h = build_two_qubit_interaction(p);
  const auto& s = h.space();
  const Matrix m = h.evaluate(0.0);
  const auto from = s.index({{lv::kQd, lv::kXMinus}, {lv::kC1, 1}});
  const auto to = s.index({{lv::kQd, lv::kTauMinus}});
  EXPECT_NEAR(std::abs(m(to, from) - 0.5 * p.g1), 0.0, 1e-15);
  const auto from0 = s.index({{lv::kQd, lv::kXMinus}, {lv::kC0, 1}});
  EXPECT_NEAR(std::abs(m(to, from0) - kSqrt2 * 0.5 * p.g1), 0.0, 1e-15);
  const auto nv_from = s.index({{lv::kNv, lv::kG}, {lv::kC0, 1}});
  const auto nv_to = s.index({{lv::kNv, lv::kE}});
  EXPECT_NEAR(std::abs(m(nv_to, nv_from) + kSqrt2 * 0.5 * p.g2), 0.0, 1e-15);
}

TEST(TwoQubit, NoCavityCouplingReducesToClassicalDrives) {
  PhysicalParams p;
  const auto laser = build_laser_qubit(p);
  p.g1 = 0.0;
  p.g2 = 0.0;
  const auto full = build_two_qubit_interaction(p);
  for (double t : {0.0, 3.7, 1234.5}) {
    EXPECT_LT(max_abs(full.evaluate(t) - laser.evaluate(t)), 1e-15);
  }
  EXPECT_EQ(laser.expanded_term_count(), 6u);
}

TEST(TwoQubit, ZeroNuCollapsesModeFrequencies) {
  PhysicalParams p;
  p.nu = 0.0;
  const auto h = build_two_qubit_interaction(p);
  std::set<double> freqs;
  for (const auto& term : h.terms()) freqs.insert(term.frequency);
  // per transition: one cavity frequency shared by c0, c1, c2 plus the drive
  EXPECT_EQ(freqs.size(), 6u);
}

TEST(TwoQubit, CavityTermsConserveExcitationNumber) {
  PhysicalParams p;
  p.omega1 = 0.0;
  p.omega2 = 0.0;
  const auto h = build_two_qubit_interaction(p);
  const Matrix n = excitation_number(h.space()).matrix();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> time(0.0, 1e4);
  for (int k = 0; k < 20; ++k) {
    const Matrix m = h.evaluate(time(rng));
    EXPECT_LT(max_abs(m * n - n * m), 1e-12);
  }
}

TEST(TwoQubit, ClassicalDrivesChangeExcitationNumber) {
  const PhysicalParams p;
  const auto h = build_laser_qubit(p);
  const Matrix n = excitation_number(h.space()).matrix();
  const Matrix m = h.evaluate(0.0);
  EXPECT_GT(max_abs(m * n - n * m), 1e-3);
}

TEST(Raman, StructureAndHermiticity) {
  const PhysicalParams p;
  const auto h = build_nv_raman(p);
  const auto& s = h.space();
  const Matrix m = h.evaluate(0.0);
  const auto e0 = s.index({{lv::kNv, lv::kE}});
  EXPECT_EQ(m(e0, e0), Complex(p.delta2));
  EXPECT_EQ(m(s.index({{lv::kNv, lv::kF}}), e0), Complex(p.omega_plus));
  EXPECT_EQ(m(s.index({{lv::kNv, lv::kG}, {lv::kCavity, 1}}), e0), Complex(p.g2));
  expect_hermitian_at_random_times(h, 10);
}

}  // namespace
}  // namespace hqpu::model
