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

#include "hqpu/model/level_scheme.hpp"
#include "hqpu/model/params.hpp"
#include "hqpu/qcore/modulated_hamiltonian.hpp"

namespace hqpu::model {

enum class Frame {
  /// Static detunings on the diagonal, constant (or enveloped) couplings.
  kRotating,
  /// Interaction picture with respect to the diagonal part: no static terms,
  /// each coupling |j><k| oscillates at E_j - E_k.
  kInteraction,
};

/// Laser-driven QD double-Lambda system on the 4-level QD space:
/// -delta_e|x+><x+| + Delta1|tau-><tau-| + (Delta1+delta_h)|tau+><tau+|
/// + 1/2 [Omega_V (|tau-><x-| + |tau+><x+|) + i Omega_H (|x+><tau-| + |x-><tau+|) + h.c.]
qcore::ModulatedHamiltonian build_laser_qd(const PhysicalParams& p, Frame frame = Frame::kRotating);

/// Laser-driven NV Lambda system on the 3-level NV space:
/// Delta2|e><e| + (Omega'_V |g><e| + Omega_+ |f><e| + h.c.)
qcore::ModulatedHamiltonian build_laser_nv(const PhysicalParams& p);

/// Qubit / interface-cavity coupling on QD (x) NV (x) a1 (x) a2, interaction
/// picture, cavity detunings Delta_j + delta.
qcore::ModulatedHamiltonian build_qubit_cavity(const PhysicalParams& p);

/// Cavity-fiber coupling nu b (a1^dag + e^{i phi} a2^dag) + h.c. on a1 (x) a2 (x) b.
qcore::ModulatedHamiltonian build_cavity_fiber(const PhysicalParams& p);

/// Vertical-polarisation classical drives only, on the two-qubit space. This
/// is build_two_qubit_interaction with g1 = g2 = 0.
qcore::ModulatedHamiltonian build_laser_qubit(const PhysicalParams& p);

/// Full laser-qubit-cavity-fiber interaction in the normal-mode interaction
/// picture, on QD (x) NV (x) c0 (x) c1 (x) c2. Twelve terms, each with its
/// Hermitian conjugate: for each of tau+<-x+, tau-<-x-, e<-g a c1, c2, c0 and
/// a classical contribution.
qcore::ModulatedHamiltonian build_two_qubit_interaction(const PhysicalParams& p);

/// The NV Lambda system used for the Raman single-qubit gate, on NV (x) cav:
/// Delta2|e><e| + (g2 a^dag |g><e| + Omega_+ |f><e| + h.c.)
qcore::ModulatedHamiltonian build_nv_raman(const PhysicalParams& p);

/// Excited qubit levels plus total photon number on the two-qubit space.
qcore::Operator excitation_number(const qcore::HilbertSpace& two_qubit);

}  // namespace hqpu::model
