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

#include "hqpu/effective/reports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hqpu::effective {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kWarn:
      return "WARN";
    case Verdict::kFail:
      return "FAIL";
  }
  return "?";
}

namespace {

double max_abs(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<ValidityEntry> validity_report(const model::PhysicalParams& p, const EffectiveParams& e,
                                           const ValidityThresholds& thresholds) {
  std::vector<ValidityEntry> out;
  auto add = [&](std::string name, const char* stage, double gap, double coupling) {
    const double ratio = coupling == 0.0 ? std::numeric_limits<double>::infinity()
                                         : std::abs(gap) / std::abs(coupling);
    Verdict v = Verdict::kFail;
    if (ratio >= thresholds.pass) {
      v = Verdict::kPass;
    } else if (ratio >= thresholds.warn) {
      v = Verdict::kWarn;
    }
    out.push_back({std::move(name), stage, ratio, v});
  };

  const double s = p.sqrt2_nu();
  const std::pair<const char*, double> detunings[] = {{"delta1", p.delta1}, {"delta2", p.delta2}};
  const double couplings[2][2] = {{p.g1, p.omega1}, {p.g2, p.omega2}};
  for (int j = 0; j < 2; ++j) {
    const std::string dj = detunings[j].first;
    const double gap = detunings[j].second;
    const std::string idx = std::to_string(j + 1);
    add(dj + "/g" + idx, "first", gap, couplings[j][0]);
    add(dj + "/omega" + idx, "first", gap, couplings[j][1]);
    add(dj + "/sqrt2nu", "first", gap, s);
    add(dj + "/delta", "first", gap, p.delta_small);
    add(dj + "/Delta", "first", gap, p.zeeman_sum());
  }

  const double d = p.delta_small;
  add("|delta-sqrt2nu|/lambda_1", "second", d - s,
      max_abs({e.lambda_plus[1], e.lambda_minus[1], e.lambda_g[1]}));
  add("|delta+sqrt2nu|/lambda_2", "second", d + s,
      max_abs({e.lambda_plus[2], e.lambda_minus[2], e.lambda_g[2]}));
  add("delta/lambda_0", "second", d,
      max_abs({e.lambda_plus[0], e.lambda_minus[0], e.lambda_g[0]}));
  double kappa = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    kappa = std::max({kappa, std::abs(e.kappa_plus[i]), std::abs(e.kappa_minus[i]),
                      std::abs(e.kappa_g[i])});
  }
  add("sqrt2nu/kappa", "second", s, kappa);
  return out;
}

Verdict overall(const std::vector<ValidityEntry>& report) noexcept {
  Verdict worst = Verdict::kPass;
  for (const auto& entry : report) {
    if (entry.verdict == Verdict::kFail) return Verdict::kFail;
    if (entry.verdict == Verdict::kWarn) worst = Verdict::kWarn;
  }
  return worst;
}

DecoherenceEstimate decoherence_estimate(const model::PhysicalParams& p) {
  DecoherenceEstimate d;
  const double d1 = checked_denominator(p.delta1, 0.0, "delta1");
  const double d2 = checked_denominator(p.delta2, 0.0, "delta2");
  d.p_qd = (p.omega1 * p.omega1) / (d1 * d1);
  d.p_nv = (p.omega2 * p.omega2) / (d2 * d2);
  const double inf = std::numeric_limits<double>::infinity();
  const double t_qd = d.p_qd > 0.0 ? p.tau_qd / d.p_qd : inf;
  const double t_nv = d.p_nv > 0.0 ? p.tau_nv / d.p_nv : inf;
  d.t_eff = std::min(t_qd, t_nv);
  return d;
}

}  // namespace hqpu::effective
