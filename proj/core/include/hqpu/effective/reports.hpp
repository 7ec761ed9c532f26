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

#include <string>
#include <vector>

#include "hqpu/effective/effective_params.hpp"

namespace hqpu::effective {

enum class Verdict { kPass, kWarn, kFail };

const char* to_string(Verdict v) noexcept;

struct ValidityThresholds {
  double pass = 10.0;
  double warn = 3.0;
};

struct ValidityEntry {
  std::string name;   // e.g. "delta1/omega1"
  std::string stage;  // "first" or "second"
  double ratio = 0.0;
  Verdict verdict = Verdict::kPass;
};

/// Large-detuning conditions as ratios gap / coupling. A coupling of zero
/// yields an infinite ratio.
std::vector<ValidityEntry> validity_report(const model::PhysicalParams& p, const EffectiveParams& e,
                                           const ValidityThresholds& thresholds = {});

/// Worst verdict over all entries.
Verdict overall(const std::vector<ValidityEntry>& report) noexcept;

struct DecoherenceEstimate {
  double p_qd = 0.0;   // Omega1^2 / Delta1^2
  double p_nv = 0.0;   // Omega2^2 / Delta2^2
  double t_eff = 0.0;  // ns, min(tau_qd / p_qd, tau_nv / p_nv); infinite if both vanish
};

DecoherenceEstimate decoherence_estimate(const model::PhysicalParams& p);

}  // namespace hqpu::effective
