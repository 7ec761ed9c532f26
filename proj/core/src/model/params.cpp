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

#include "hqpu/model/params.hpp"

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "hqpu/errors.hpp"

namespace hqpu::model {

void PhysicalParams::validate() const {
  const std::initializer_list<std::pair<const char*, double>> energies = {
      {"g1", g1},           {"g2", g2},
      {"omega1", omega1},   {"omega2", omega2},
      {"delta1", delta1},   {"delta2", delta2},
      {"delta_e", delta_e}, {"delta_h", delta_h},
      {"nu", nu},           {"delta_small", delta_small},
      {"phi", phi},         {"omega_v", omega_v},
      {"omega_h", omega_h}, {"omega_v_prime", omega_v_prime},
      {"omega_plus", omega_plus}, {"tau_qd", tau_qd},
      {"tau_nv", tau_nv}};
  for (const auto& [name, value] : energies) {
    if (!std::isfinite(value)) throw ConfigError(std::string("params.") + name + " is not finite");
  }
  if (g1 < 0.0) throw ConfigError("params.g1 must be >= 0");
  if (g2 < 0.0) throw ConfigError("params.g2 must be >= 0");
  if (nu < 0.0) throw ConfigError("params.nu must be >= 0");
  if (!(tau_qd > 0.0)) throw ConfigError("params.tau_qd must be > 0");
  if (!(tau_nv > 0.0)) throw ConfigError("params.tau_nv must be > 0");
  if (n_max < 1) throw ConfigError("params.n_max must be >= 1");
}

PhysicalParams PhysicalParams::with_coupling_scale(double s) const {
  PhysicalParams p = *this;
  p.g1 *= s;
  p.g2 *= s;
  p.omega1 *= s;
  p.omega2 *= s;
  return p;
}

PhysicalParams PhysicalParams::paper() { return PhysicalParams{}; }

PhysicalParams PhysicalParams::desk_scale() {
  PhysicalParams p;
  p.g1 = 0.04;
  p.g2 = 0.08;
  p.omega1 = 0.4;
  p.omega2 = 0.6;
  p.delta1 = 2.0;
  p.delta2 = 2.2;
  p.delta_e = 0.05;
  p.delta_h = 0.05;
  p.nu = 0.01;
  p.delta_small = 0.05;
  return p;
}

}  // namespace hqpu::model
