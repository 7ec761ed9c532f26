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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hqpu/cli/config.hpp"

namespace hqpu::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;  // unexpected failure
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitConvergence = 4;

/// Effective coefficients (meV) and the large-detuning checks as
/// "key = value" lines grouped under "[section]" headers.
void cmd_params(const RunConfig& config, std::ostream& out);

/// Phases, gate time, local corrections and the decoherence budget as
/// "key = value" lines.
void cmd_gate(const RunConfig& config, std::ostream& out);

/// CSV with one row per logical basis state and a final "conditional" row:
/// state,extracted_rad,predicted_rad,abs_error_rad,relative_error,overlap,
/// max_excited,max_photon,top_fock,norm_drift,refinement_deviation
void cmd_evolve(const RunConfig& config, std::ostream& out);

/// CSV time series of the Raman transfer from |f,0>; a summary goes to `log`.
/// t_ps,p_f0,p_g1,p_excited,p_f0_ideal,p_g1_ideal,p_f0_stark,p_g1_stark
void cmd_raman(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Histogram CSV: outcome_n1,outcome_n2,count,frequency,born_probability,seed
void cmd_qnd(const RunConfig& config, std::ostream& out);

/// Grid values of the swept parameter, in order. Throws ConfigError on a
/// malformed grid (fewer than one or more than 1e6 points, non-finite
/// bounds, non-positive bounds for log spacing).
std::vector<double> sweep_grid(const SweepConfig& sweep);

struct SweepRow {
  double value = 0.0;
  double t_gate_ns = 0.0;
  double rate_mev = 0.0;  // |Phi_+g - Phi_-g|
  double t_eff_ns = 0.0;
  double gates_per_t_eff = 0.0;
  std::vector<double> ratios;  // in the order of sweep_ratio_names()
  std::string validity;        // worst verdict
  /// "ok", "degenerate:<name>" or "resonance_crossed:<name>".
  std::string status = "ok";
};

/// Column names of the validity ratios in a sweep row.
const std::vector<std::string>& sweep_ratio_names();

/// Evaluates every grid point. Rows are independent and computed in
/// parallel; the result is in grid order and does not depend on the number
/// of threads. When a resonance denominator changes sign between
/// neighbouring points, the point closer to the crossing is flagged.
std::vector<SweepRow> sweep_rows(const RunConfig& config);

/// CSV of sweep_rows with a unit-carrying header.
void cmd_sweep(const RunConfig& config, std::ostream& out);

/// Runs `command` and maps exceptions to exit codes, printing the message
/// to `err`.
int run_command(std::string_view command, const RunConfig& config, std::ostream& out,
                std::ostream& err);

}  // namespace hqpu::cli
