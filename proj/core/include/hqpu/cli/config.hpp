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

#include <cstdint>
#include <string>
#include <string_view>

#include "hqpu/effective/dynamics_check.hpp"
#include "hqpu/effective/reports.hpp"
#include "hqpu/model/params.hpp"

namespace hqpu::cli {

struct EvolveConfig {
  double t_final = 2000.0;  // ps
  effective::PropagationMethod method = effective::PropagationMethod::kOde;
  bool refine = false;
  double sample_interval = 1.0;  // ps, spectral method only
};

struct RamanConfig {
  /// Total time in ps; 0 selects the pi/2 transfer time pi hbar / (2 g').
  double t_final = 0.0;
  int samples = 200;
  bool compensate_stark = true;
  bool include_stark = true;
};

struct QndConfig {
  // a|x+ g> + b|x+ f> + c|x- f> + d|x- g>
  double a_re = 0.5, a_im = 0.0;
  double b_re = 0.5, b_im = 0.0;
  double c_re = 0.5, c_im = 0.0;
  double d_re = 0.5, d_im = 0.0;
  int shots = 10000;
  double loss = 0.0;
};

enum class Spacing { kLinear, kLog };

struct SweepConfig {
  /// A params.* field name (without prefix) or "coupling_scale".
  std::string parameter = "coupling_scale";
  double start = 1.0;
  double stop = 1.0;
  int points = 1;
  Spacing spacing = Spacing::kLinear;
};

struct RunConfig {
  model::PhysicalParams params;
  EvolveConfig evolve;
  RamanConfig raman;
  QndConfig qnd;
  SweepConfig sweep;
  effective::ValidityThresholds validity;
  double tol = 1e-12;
  std::uint64_t seed = 12345;
};

/// Parses "key = value" lines; '#' starts a comment. Every key is optional
/// and defaults to RunConfig{}. Throws ConfigError on unknown keys, repeated
/// keys, malformed values or parameters that fail validation.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file. Throws ConfigError if it cannot be read.
RunConfig load_config(const std::string& path);

/// Emits every key; parse_config(emit_config(c)) reproduces c exactly.
std::string emit_config(const RunConfig& config);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

/// Reference to a numeric params.* field by name, for sweeps. Throws
/// ConfigError for unknown or non-sweepable names.
double& param_field(model::PhysicalParams& p, std::string_view name);

}  // namespace hqpu::cli
