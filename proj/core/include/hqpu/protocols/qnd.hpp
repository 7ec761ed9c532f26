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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hqpu/qcore/types.hpp"

namespace hqpu::protocols {

/// a|x+ g> + b|x+ f> + c|x- f> + d|x- g>.
struct LogicalState {
  std::array<Complex, 4> amplitudes{Complex(1.0), Complex{}, Complex{}, Complex{}};

  static LogicalState from(Complex a, Complex b, Complex c, Complex d);
  double norm_squared() const noexcept;
  /// Same state in tensor order (x+ g, x+ f, x- g, x- f).
  Vector to_tensor() const;
  static LogicalState from_tensor(const Vector& v);
};

/// Amplitudes over the logical basis (order of LogicalState) times photon
/// flags (n1, n2), flat index = 4 * logical + 2 * n1 + n2.
struct JointState {
  std::array<Complex, 16> amplitudes{};

  static constexpr std::size_t index(std::size_t logical, int n1, int n2) noexcept {
    return 4 * logical + 2 * static_cast<std::size_t>(n1) + static_cast<std::size_t>(n2);
  }
  double norm_squared() const noexcept;
  Complex inner(const JointState& other) const noexcept;
  /// Probability of each logical basis state (qubit marginal).
  std::array<double, 4> qubit_marginal() const noexcept;
  /// Probability of each flag pair, index 2 n1 + n2.
  std::array<double, 4> photon_marginal() const noexcept;
};

/// Photon flags (n1, n2) emitted by each logical branch.
inline constexpr std::array<std::array<int, 2>, 4> kBranchFlags{{{1, 1}, {1, 0}, {0, 0}, {0, 1}}};

/// Ideal measurement cycle: each branch tagged with its photon flags.
/// Throws std::invalid_argument if | |s|^2 - 1 | > 1e-12.
JointState qnd_map(const LogicalState& s);

/// Ideal cooling cycle: returns |x+ g> (x) (a|1,1> + b|1,0> + c|0,0> + d|0,1>).
/// Throws std::invalid_argument if more than 1e-9 of the population sits
/// outside the image of qnd_map.
JointState cooling_transfer(const JointState& j);

struct MeasurementRecord {
  int n1 = 0;
  int n2 = 0;
  /// Born probability of this outcome.
  double probability = 0.0;
  /// Logical basis state the register is left in.
  LogicalState post_state;
  std::uint64_t seed = 0;
};

struct HistogramEntry {
  int n1 = 0;
  int n2 = 0;
  std::size_t count = 0;
  double frequency = 0.0;
  double born_probability = 0.0;
};

struct QndOptions {
  /// Probability that an emitted photon is not registered (per photon).
  double loss = 0.0;
  /// Keep every shot in QndResult::records.
  bool keep_records = false;
};

struct QndResult {
  std::uint64_t seed = 0;
  std::size_t shots = 0;
  double loss = 0.0;
  /// Ordered (0,0), (0,1), (1,0), (1,1).
  std::array<HistogramEntry, 4> histogram{};
  std::vector<MeasurementRecord> records;
};

/// Outcome probabilities, index 2 n1 + n2, including photon loss.
std::array<double, 4> outcome_probabilities(const LogicalState& s, double loss = 0.0);

/// Repeated measurement cycles on fresh copies of `s`, drawn with a
/// std::mt19937_64 seeded with `seed`. Throws std::invalid_argument on zero
/// shots, a loss outside [0, 1] or an unnormalized state.
QndResult qnd_sample(const LogicalState& s, std::size_t shots, std::uint64_t seed,
                     const QndOptions& options = {});

}  // namespace hqpu::protocols
