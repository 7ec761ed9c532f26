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

#include "hqpu/protocols/qnd.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hqpu::protocols {

namespace {

// logical order -> tensor order (x+ g, x+ f, x- g, x- f)
constexpr std::array<Eigen::Index, 4> kTensorIndex{0, 1, 3, 2};

void require_normalized(double norm) {
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("logical state is not normalized");
  }
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

LogicalState LogicalState::from(Complex a, Complex b, Complex c, Complex d) {
  LogicalState s;
  s.amplitudes = {a, b, c, d};
  return s;
}

double LogicalState::norm_squared() const noexcept {
  double n = 0.0;
  for (const auto& a : amplitudes) n += std::norm(a);
  return n;
}

Vector LogicalState::to_tensor() const {
  Vector v(4);
  for (std::size_t k = 0; k < 4; ++k) v(kTensorIndex[k]) = amplitudes[k];
  return v;
}

LogicalState LogicalState::from_tensor(const Vector& v) {
  if (v.size() != 4) throw std::invalid_argument("logical tensor vector must have 4 entries");
  LogicalState s;
  for (std::size_t k = 0; k < 4; ++k) s.amplitudes[k] = v(kTensorIndex[k]);
  return s;
}

double JointState::norm_squared() const noexcept {
  double n = 0.0;
  for (const auto& a : amplitudes) n += std::norm(a);
  return n;
}

Complex JointState::inner(const JointState& other) const noexcept {
  Complex z{};
  for (std::size_t k = 0; k < amplitudes.size(); ++k) z += std::conj(amplitudes[k]) * other.amplitudes[k];
  return z;
}

std::array<double, 4> JointState::qubit_marginal() const noexcept {
  std::array<double, 4> p{};
  for (std::size_t k = 0; k < amplitudes.size(); ++k) p[k / 4] += std::norm(amplitudes[k]);
  return p;
}

std::array<double, 4> JointState::photon_marginal() const noexcept {
  std::array<double, 4> p{};
  for (std::size_t k = 0; k < amplitudes.size(); ++k) p[k % 4] += std::norm(amplitudes[k]);
  return p;
}

JointState qnd_map(const LogicalState& s) {
  require_normalized(s.norm_squared());
  JointState j;
  for (std::size_t b = 0; b < 4; ++b) {
    j.amplitudes[JointState::index(b, kBranchFlags[b][0], kBranchFlags[b][1])] = s.amplitudes[b];
  }
  return j;
}

JointState cooling_transfer(const JointState& j) {
  double outside = 0.0;
  for (std::size_t b = 0; b < 4; ++b) {
    for (int n1 = 0; n1 < 2; ++n1) {
      for (int n2 = 0; n2 < 2; ++n2) {
        if (n1 == kBranchFlags[b][0] && n2 == kBranchFlags[b][1]) continue;
        outside += std::norm(j.amplitudes[JointState::index(b, n1, n2)]);
      }
    }
  }
  if (outside > 1e-9) {
    throw std::invalid_argument("joint state lies outside the measurement-cycle image");
  }
  JointState out;
  for (std::size_t b = 0; b < 4; ++b) {
    const auto [n1, n2] = kBranchFlags[b];
    out.amplitudes[JointState::index(0, n1, n2)] = j.amplitudes[JointState::index(b, n1, n2)];
  }
  return out;
}

std::array<double, 4> outcome_probabilities(const LogicalState& s, double loss) {
  std::array<double, 4> p{};
  for (std::size_t b = 0; b < 4; ++b) {
    const double w = std::norm(s.amplitudes[b]);
    const auto [e1, e2] = kBranchFlags[b];
    for (int n1 = 0; n1 <= e1; ++n1) {
      for (int n2 = 0; n2 <= e2; ++n2) {
        const double p1 = e1 == 0 ? 1.0 : (n1 == 1 ? 1.0 - loss : loss);
        const double p2 = e2 == 0 ? 1.0 : (n2 == 1 ? 1.0 - loss : loss);
        p[static_cast<std::size_t>(2 * n1 + n2)] += w * p1 * p2;
      }
    }
  }
  return p;
}

QndResult qnd_sample(const LogicalState& s, std::size_t shots, std::uint64_t seed,
                     const QndOptions& options) {
  if (shots == 0) throw std::invalid_argument("qnd_sample requires at least one shot");
  if (!(options.loss >= 0.0 && options.loss <= 1.0)) {
    throw std::invalid_argument("photon loss must lie in [0, 1]");
  }
  require_normalized(s.norm_squared());

  std::array<double, 4> born_branch{};
  for (std::size_t b = 0; b < 4; ++b) born_branch[b] = std::norm(s.amplitudes[b]);
  const auto born_outcome = outcome_probabilities(s, options.loss);

  QndResult result;
  result.seed = seed;
  result.shots = shots;
  result.loss = options.loss;
  for (int k = 0; k < 4; ++k) {
    result.histogram[static_cast<std::size_t>(k)] = {k / 2, k % 2, 0, 0.0,
                                                     born_outcome[static_cast<std::size_t>(k)]};
  }

  std::mt19937_64 rng(seed);
  for (std::size_t shot = 0; shot < shots; ++shot) {
    // branch by inverse CDF; fall back to the last populated branch on rounding
    const double u = unit_uniform(rng);
    std::size_t branch = 0;
    double acc = 0.0;
    for (std::size_t b = 0; b < 4; ++b) {
      if (born_branch[b] == 0.0) continue;
      branch = b;
      acc += born_branch[b];
      if (u < acc) break;
    }
    int n1 = kBranchFlags[branch][0];
    int n2 = kBranchFlags[branch][1];
    if (options.loss > 0.0) {
      if (n1 == 1 && unit_uniform(rng) < options.loss) n1 = 0;
      if (n2 == 1 && unit_uniform(rng) < options.loss) n2 = 0;
    }
    const auto slot = static_cast<std::size_t>(2 * n1 + n2);
    ++result.histogram[slot].count;
    if (options.keep_records) {
      LogicalState post;
      post.amplitudes = {};
      post.amplitudes[branch] = 1.0;
      result.records.push_back({n1, n2, born_outcome[slot], post, seed});
    }
  }
  for (auto& e : result.histogram) {
    e.frequency = static_cast<double>(e.count) / static_cast<double>(shots);
  }
  return result;
}

}  // namespace hqpu::protocols
