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

#include "hqpu/model/normal_modes.hpp"

#include <complex>

namespace hqpu::model {

Matrix cavity_fiber_coupling_matrix(const PhysicalParams& p) {
  const Complex phase = std::exp(kI * p.phi);
  Matrix m = Matrix::Zero(3, 3);
  m(0, 2) = p.nu;
  m(1, 2) = p.nu * phase;
  m(2, 0) = p.nu;
  m(2, 1) = p.nu * std::conj(phase);
  return m;
}

Matrix normal_mode_transform(double phi) {
  const Complex phase = std::exp(kI * phi);
  const double h = 1.0 / kSqrt2;
  Matrix t(3, 3);
  t << h, 0.5, 0.5,
       -h * phase, 0.5 * phase, 0.5 * phase,
       0.0, h, -h;
  return t;
}

Eigen::Vector3d normal_mode_frequencies(const PhysicalParams& p) {
  return {0.0, p.sqrt2_nu(), -p.sqrt2_nu()};
}

}  // namespace hqpu::model
