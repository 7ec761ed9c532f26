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
#include <string_view>

#include "hqpu/qcore/hilbert_space.hpp"

// Fixed index map shared by every builder.
//
//   QD: [x+, x-, tau+, tau-]   electron ground states, then trions
//   NV: [g, f, e]              m_s = 0, m_s = +-1, excited 3E
//   normal modes: [c0, c1, c2] (or [a1, a2, b] before the transform)
namespace hqpu::model::levels {

inline constexpr std::size_t kQdDim = 4;
inline constexpr std::size_t kXPlus = 0;
inline constexpr std::size_t kXMinus = 1;
inline constexpr std::size_t kTauPlus = 2;
inline constexpr std::size_t kTauMinus = 3;

inline constexpr std::size_t kNvDim = 3;
inline constexpr std::size_t kG = 0;
inline constexpr std::size_t kF = 1;
inline constexpr std::size_t kE = 2;

inline constexpr std::string_view kQd = "QD";
inline constexpr std::string_view kNv = "NV";
inline constexpr std::string_view kC0 = "c0";
inline constexpr std::string_view kC1 = "c1";
inline constexpr std::string_view kC2 = "c2";
inline constexpr std::string_view kA1 = "a1";
inline constexpr std::string_view kA2 = "a2";
inline constexpr std::string_view kB = "b";
inline constexpr std::string_view kCavity = "cav";

}  // namespace hqpu::model::levels

namespace hqpu::model {

qcore::HilbertSpace qd_space();
qcore::HilbertSpace nv_space();
/// QD (x) NV (x) c0 (x) c1 (x) c2 with n_max + 1 Fock levels per mode.
qcore::HilbertSpace two_qubit_space(std::size_t n_max);
/// QD (x) NV (x) a1 (x) a2.
qcore::HilbertSpace qubit_cavity_space(std::size_t n_max);
/// a1 (x) a2 (x) b.
qcore::HilbertSpace cavity_fiber_space(std::size_t n_max);
/// NV (x) one interface-cavity mode.
qcore::HilbertSpace raman_space(std::size_t n_max);

}  // namespace hqpu::model
