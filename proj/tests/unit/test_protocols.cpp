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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <random>

#include "hqpu/protocols/qnd.hpp"

namespace hqpu::protocols {
namespace {

LogicalState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::array<Complex, 4> a;
  double n = 0.0;
  for (auto& x : a) {
    x = Complex(gauss(rng), gauss(rng));
    n += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(n);
  return LogicalState::from(a[0], a[1], a[2], a[3]);
}

const LogicalState kUniform = LogicalState::from(0.5, 0.5, 0.5, 0.5);

TEST(QndMap, SingleBranch) {
  const auto j = qnd_map(LogicalState::from(1, 0, 0, 0));
  EXPECT_EQ(j.amplitudes[JointState::index(0, 1, 1)], Complex(1.0));
  EXPECT_DOUBLE_EQ(j.norm_squared(), 1.0);
}

TEST(QndMap, EachBranchCarriesItsFlags) {
  std::mt19937_64 rng(3);
  const auto s = random_state(rng);
  const auto j = qnd_map(s);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [n1, n2] = kBranchFlags[k];
    EXPECT_EQ(j.amplitudes[JointState::index(k, n1, n2)], s.amplitudes[k]);
  }
  const auto photons = j.photon_marginal();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [n1, n2] = kBranchFlags[k];
    EXPECT_NEAR(photons[static_cast<std::size_t>(2 * n1 + n2)], std::norm(s.amplitudes[k]), 1e-15);
  }
  EXPECT_NEAR(j.norm_squared(), 1.0, 1e-14);
}

TEST(QndMap, IsAnIsometry) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_state(rng);
    const auto b = random_state(rng);
    Complex direct{};
    for (std::size_t k = 0; k < 4; ++k) direct += std::conj(a.amplitudes[k]) * b.amplitudes[k];
    EXPECT_LT(std::abs(qnd_map(a).inner(qnd_map(b)) - direct), 1e-12);
  }
}

TEST(QndMap, RejectsUnnormalisedInput) {
  EXPECT_THROW(qnd_map(LogicalState::from(1, 1, 0, 0)), std::invalid_argument);
}

TEST(LogicalState, TensorOrderRoundTrip) {
  std::mt19937_64 rng(5);
  const auto s = random_state(rng);
  const Vector v = s.to_tensor();
  // tensor order (x+g, x+f, x-g, x-f) vs (a, b, c, d) = (x+g, x+f, x-f, x-g)
  EXPECT_EQ(v(2), s.amplitudes[3]);
  EXPECT_EQ(v(3), s.amplitudes[2]);
  EXPECT_EQ(LogicalState::from_tensor(v).amplitudes, s.amplitudes);
}

TEST(Cooling, TransfersAmplitudesToPhotonsAndResetsQubits) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    const auto j = cooling_transfer(qnd_map(s));
    const auto qubits = j.qubit_marginal();
    EXPECT_NEAR(qubits[0], 1.0, 1e-14);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto [n1, n2] = kBranchFlags[k];
      EXPECT_EQ(j.amplitudes[JointState::index(0, n1, n2)], s.amplitudes[k]);
    }
  }
}

TEST(Cooling, RejectsStatesOutsideTheMeasuredImage) {
  JointState j;
  j.amplitudes[JointState::index(1, 1, 1)] = 1.0;  // x+f with the wrong flags
  EXPECT_THROW(cooling_transfer(j), std::invalid_argument);
}

TEST(Sampling, SingleBranchAlwaysGivesItsOutcome) {
  const auto r = qnd_sample(LogicalState::from(1, 0, 0, 0), 1000, 1);
  EXPECT_EQ(r.histogram[3].n1, 1);
  EXPECT_EQ(r.histogram[3].n2, 1);
  EXPECT_EQ(r.histogram[3].count, 1000u);
  EXPECT_DOUBLE_EQ(r.histogram[3].frequency, 1.0);
}

TEST(Sampling, UniformStateWithinFourSigma) {
  const auto r = qnd_sample(kUniform, 10000, 2026);
  const double sigma = std::sqrt(0.25 * 0.75 / 10000.0);
  for (const auto& h : r.histogram) {
    EXPECT_DOUBLE_EQ(h.born_probability, 0.25);
    EXPECT_LT(std::abs(h.frequency - 0.25), 4.0 * sigma);
  }
}

TEST(Sampling, RepeatedMeasurementOfPostStateIsCertain) {
  QndOptions opt;
  opt.keep_records = true;
  const auto r = qnd_sample(kUniform, 50, 8, opt);
  ASSERT_EQ(r.records.size(), 50u);
  for (const auto& rec : r.records) {
    const auto again = outcome_probabilities(rec.post_state);
    EXPECT_DOUBLE_EQ(again[static_cast<std::size_t>(2 * rec.n1 + rec.n2)], 1.0);
  }
}

TEST(Sampling, SameSeedSameHistogram) {
  const auto a = qnd_sample(kUniform, 5000, 77);
  const auto b = qnd_sample(kUniform, 5000, 77);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(a.histogram[k].count, b.histogram[k].count);
  const auto c = qnd_sample(kUniform, 5000, 78);
  bool differs = false;
  for (std::size_t k = 0; k < 4; ++k) differs |= a.histogram[k].count != c.histogram[k].count;
  EXPECT_TRUE(differs);
}

TEST(Sampling, ChiSquareAgainstBornRule) {
  const boost::math::chi_squared dist(3.0);
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng);
    const std::uint64_t seed = rng();
    const auto r = qnd_sample(s, 10000, seed);
    double chi2 = 0.0;
    for (const auto& h : r.histogram) {
      const double expected = 10000.0 * h.born_probability;
      chi2 += std::pow(static_cast<double>(h.count) - expected, 2) / expected;
    }
    const double p_value = boost::math::cdf(boost::math::complement(dist, chi2));
    EXPECT_GT(p_value, 0.001) << "trial " << trial << " seed " << seed;
  }
}

TEST(Sampling, PhotonLossMovesWeightTowardsFewerClicks) {
  const auto p = outcome_probabilities(LogicalState::from(1, 0, 0, 0), 0.1);
  EXPECT_NEAR(p[3], 0.81, 1e-15);
  EXPECT_NEAR(p[1], 0.09, 1e-15);
  EXPECT_NEAR(p[2], 0.09, 1e-15);
  EXPECT_NEAR(p[0], 0.01, 1e-15);
}

TEST(Sampling, InvalidArguments) {
  EXPECT_THROW(qnd_sample(kUniform, 0, 1), std::invalid_argument);
  EXPECT_THROW(qnd_sample(kUniform, 10, 1, {1.5, false}), std::invalid_argument);
  EXPECT_THROW(qnd_sample(LogicalState::from(1, 1, 1, 1), 10, 1), std::invalid_argument);
}

}  // namespace
}  // namespace hqpu::protocols
