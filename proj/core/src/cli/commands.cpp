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

#include "hqpu/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hqpu/effective/dynamics_check.hpp"
#include "hqpu/effective/effective_params.hpp"
#include "hqpu/effective/phases.hpp"
#include "hqpu/effective/reports.hpp"
#include "hqpu/errors.hpp"
#include "hqpu/gates/raman.hpp"
#include "hqpu/protocols/qnd.hpp"

namespace hqpu::cli {

namespace {

constexpr double kPsPerNs = 1000.0;
constexpr int kMaxSweepPoints = 1'000'000;

// Fixed-width scientific notation, independent of the global locale.
std::string sci(double x, int precision = 6) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, precision);
  if (ec != std::errc()) throw std::runtime_error("sci: formatting failed");
  return {buf, ptr};
}

void kv(std::ostream& out, std::string_view key, double value) {
  out << key << " = " << sci(value) << '\n';
}

void kv(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << " = " << value << '\n';
}

void write_array(std::ostream& out, std::string_view name, const std::array<double, 3>& a) {
  static constexpr const char* kModes[] = {"c0", "c1", "c2"};
  for (std::size_t i = 0; i < 3; ++i) kv(out, std::string(name) + "_" + kModes[i], a[i]);
}

void write_validity(std::ostream& out, const std::vector<effective::ValidityEntry>& report) {
  for (const auto& entry : report) {
    out << entry.name << " = " << sci(entry.ratio, 3) << ' ' << effective::to_string(entry.verdict)
        << ' ' << entry.stage << '\n';
  }
  kv(out, "overall", effective::to_string(effective::overall(report)));
}

const char* unit_of(std::string_view parameter) {
  if (parameter == "coupling_scale") return "";
  if (parameter == "phi") return "_rad";
  if (parameter == "tau_qd" || parameter == "tau_nv") return "_ns";
  return "_meV";
}

}  // namespace

void cmd_params(const RunConfig& config, std::ostream& out) {
  const auto& p = config.params;
  const auto e = effective::effective_params(p);

  out << "[input_meV]\n";
  for (const char* name : {"g1", "g2", "omega1", "omega2", "delta1", "delta2", "delta_e",
                           "delta_h", "nu", "delta_small"}) {
    auto copy = p;
    kv(out, name, param_field(copy, name));
  }
  kv(out, "sqrt2nu", p.sqrt2_nu());
  out << "[input_other]\n";
  kv(out, "phi_rad", p.phi);
  kv(out, "tau_qd_ns", p.tau_qd);
  kv(out, "tau_nv_ns", p.tau_nv);

  out << "[effective_meV]\n";
  write_array(out, "lambda_plus", e.lambda_plus);
  write_array(out, "lambda_minus", e.lambda_minus);
  write_array(out, "lambda_g", e.lambda_g);
  write_array(out, "kappa_plus", e.kappa_plus);
  write_array(out, "kappa_minus", e.kappa_minus);
  write_array(out, "kappa_g", e.kappa_g);
  write_array(out, "eps_plus", e.eps_plus);
  write_array(out, "eps_minus", e.eps_minus);
  write_array(out, "eps_g", e.eps_g);
  kv(out, "eps0_plus", e.eps0_plus);
  kv(out, "eps0_minus", e.eps0_minus);
  kv(out, "eps0_g", e.eps0_g);

  out << "[mode_weights_1/meV]\n";
  const auto w = effective::mode_weights(p);
  kv(out, "inv_delta", w[0]);
  kv(out, "inv_delta_minus_sqrt2nu", w[1]);
  kv(out, "inv_delta_plus_sqrt2nu", w[2]);

  out << "[validity]\n";
  kv(out, "pass_threshold", config.validity.pass);
  kv(out, "warn_threshold", config.validity.warn);
  write_validity(out, effective::validity_report(p, e, config.validity));
}

void cmd_gate(const RunConfig& config, std::ostream& out) {
  const auto& p = config.params;
  const auto e = effective::effective_params(p);
  const auto phases = effective::compute_phases(e, p);
  const auto sched = effective::gate_time(phases);
  const auto dec = effective::decoherence_estimate(p);

  out << "[phases_meV]\n";
  kv(out, "phi_plus", phases.phi_plus);
  kv(out, "phi_minus", phases.phi_minus);
  kv(out, "phi_g", phases.phi_g);
  kv(out, "phi_plus_g", phases.phi_plus_g);
  kv(out, "phi_minus_g", phases.phi_minus_g);
  kv(out, "delta_phi", phases.phi_plus_g - phases.phi_minus_g);

  out << "[gate]\n";
  kv(out, "t_gate_ps", sched.t_gate);
  kv(out, "t_gate_ns", sched.t_gate / kPsPerNs);
  kv(out, "conditional_phase_rad", sched.conditional_phase);
  kv(out, "correction_plus_rad", sched.correction_plus);
  kv(out, "correction_minus_rad", sched.correction_minus);
  kv(out, "correction_g_rad", sched.correction_g);

  out << "[decoherence]\n";
  kv(out, "p_qd", dec.p_qd);
  kv(out, "p_nv", dec.p_nv);
  kv(out, "t_eff_ns", dec.t_eff);
  kv(out, "gates_per_t_eff", dec.t_eff / (sched.t_gate / kPsPerNs));

  out << "[validity]\n";
  kv(out, "overall",
     effective::to_string(effective::overall(effective::validity_report(p, e, config.validity))));
}

void cmd_evolve(const RunConfig& config, std::ostream& out) {
  effective::DynamicsCheckOptions options;
  options.t_final = config.evolve.t_final;
  options.method = config.evolve.method;
  options.tol = config.tol;
  options.refine = config.evolve.refine;
  options.sample_interval = config.evolve.sample_interval;
  const auto result = effective::full_vs_effective(config.params, options);

  out << "state,extracted_rad,predicted_rad,abs_error_rad,relative_error,overlap,max_excited,"
         "max_photon,top_fock,norm_drift,refinement_deviation\n";
  auto relative = [](double got, double want) {
    return want == 0.0 ? (got == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                       : std::abs(got - want) / std::abs(want);
  };
  for (const auto& s : result.states) {
    out << s.label << ',' << sci(s.extracted_phase, 9) << ',' << sci(s.predicted_phase, 9) << ','
        << sci(std::abs(s.extracted_phase - s.predicted_phase)) << ','
        << sci(relative(s.extracted_phase, s.predicted_phase)) << ',' << sci(s.overlap, 9) << ','
        << sci(s.max_excited_population) << ',' << sci(s.max_photon_population) << ','
        << sci(s.top_fock_population) << ',' << sci(s.norm_drift) << ','
        << sci(s.refinement_deviation) << '\n';
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out << "conditional," << sci(result.conditional_extracted, 9) << ','
      << sci(result.conditional_predicted, 9) << ','
      << sci(std::abs(result.conditional_extracted - result.conditional_predicted)) << ','
      << sci(result.conditional_relative_error) << ',' << sci(nan) << ',' << sci(nan) << ','
      << sci(nan) << ',' << sci(nan) << ',' << sci(nan) << ',' << sci(nan) << '\n';
}

void cmd_raman(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const auto& p = config.params;
  const double g_prime = gates::nv_raman_effective_coupling(p);
  double t = config.raman.t_final;
  if (t == 0.0) {
    if (g_prime == 0.0) {
      throw DegenerateParameterError("g2*omega_plus", "Raman coupling vanishes; set raman.t_final");
    }
    t = std::numbers::pi * kHbar / (2.0 * std::abs(g_prime));
  }
  gates::RamanOptions options;
  options.compensate_stark = config.raman.compensate_stark;
  options.include_stark = config.raman.include_stark;
  options.samples = static_cast<std::size_t>(config.raman.samples);
  options.tol = config.tol;
  const auto run = gates::simulate_raman_full(p, t, options);

  out << "t_ps,p_f0,p_g1,p_excited,p_f0_ideal,p_g1_ideal,p_f0_stark,p_g1_stark\n";
  for (const auto& s : run.samples) {
    out << sci(s.t, 9) << ',' << sci(std::norm(s.amp_f0)) << ',' << sci(std::norm(s.amp_g1))
        << ',' << sci(s.p_excited) << ',' << sci(std::norm(s.ideal_f0)) << ','
        << sci(std::norm(s.ideal_g1)) << ',' << sci(std::norm(s.stark_f0)) << ','
        << sci(std::norm(s.stark_g1)) << '\n';
  }
  kv(log, "g_prime_meV", run.g_prime);
  kv(log, "t_final_ps", t);
  kv(log, "max_excited", run.max_excited);
  kv(log, "max_population_error", run.max_population_error);
  kv(log, "max_ideal_deviation", run.max_ideal_deviation);
  if (options.include_stark) kv(log, "max_stark_deviation", run.max_stark_deviation);
}

void cmd_qnd(const RunConfig& config, std::ostream& out) {
  const auto& q = config.qnd;
  const auto state = protocols::LogicalState::from({q.a_re, q.a_im}, {q.b_re, q.b_im},
                                                   {q.c_re, q.c_im}, {q.d_re, q.d_im});
  if (std::abs(state.norm_squared() - 1.0) > 1e-12) {
    throw ConfigError("qnd amplitudes are not normalized (|a|^2+|b|^2+|c|^2+|d|^2 = " +
                      format_double(state.norm_squared()) + ")");
  }
  const auto result = protocols::qnd_sample(state, static_cast<std::size_t>(q.shots), config.seed,
                                            {q.loss, false});
  out << "outcome_n1,outcome_n2,count,frequency,born_probability,seed\n";
  for (const auto& h : result.histogram) {
    out << h.n1 << ',' << h.n2 << ',' << h.count << ',' << format_double(h.frequency) << ','
        << format_double(h.born_probability) << ',' << result.seed << '\n';
  }
}

std::vector<double> sweep_grid(const SweepConfig& sweep) {
  if (sweep.points < 1 || sweep.points > kMaxSweepPoints) {
    throw ConfigError("sweep.points must lie in [1, 1000000]");
  }
  if (!std::isfinite(sweep.start) || !std::isfinite(sweep.stop)) {
    throw ConfigError("sweep bounds must be finite");
  }
  const bool log = sweep.spacing == Spacing::kLog;
  if (log && !(sweep.start > 0.0 && sweep.stop > 0.0)) {
    throw ConfigError("log sweeps need positive bounds");
  }
  std::vector<double> grid(static_cast<std::size_t>(sweep.points));
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    grid[i] = log ? std::exp(std::lerp(std::log(sweep.start), std::log(sweep.stop), f))
                  : std::lerp(sweep.start, sweep.stop, f);
  }
  // keep the endpoints exact
  grid.front() = sweep.start;
  if (n > 1) grid.back() = sweep.stop;
  return grid;
}

const std::vector<std::string>& sweep_ratio_names() {
  static const std::vector<std::string> names = [] {
    const auto p = model::PhysicalParams::paper();
    std::vector<std::string> out;
    for (const auto& entry : effective::validity_report(p, effective::effective_params(p))) {
      out.push_back(entry.name);
    }
    return out;
  }();
  return names;
}

namespace {

model::PhysicalParams params_at(const RunConfig& config, double value) {
  if (config.sweep.parameter == "coupling_scale") {
    return config.params.with_coupling_scale(value);
  }
  model::PhysicalParams p = config.params;
  param_field(p, config.sweep.parameter) = value;
  return p;
}

SweepRow evaluate(const model::PhysicalParams& p, double value,
                  const effective::ValidityThresholds& thresholds) {
  SweepRow row;
  row.value = value;
  try {
    const auto e = effective::effective_params(p);
    const auto phases = effective::compute_phases(e, p);
    const auto sched = effective::gate_time(phases);
    const auto dec = effective::decoherence_estimate(p);
    const auto report = effective::validity_report(p, e, thresholds);
    row.t_gate_ns = sched.t_gate / kPsPerNs;
    row.rate_mev = std::abs(phases.phi_plus_g - phases.phi_minus_g);
    row.t_eff_ns = dec.t_eff;
    row.gates_per_t_eff = dec.t_eff / row.t_gate_ns;
    for (const auto& entry : report) row.ratios.push_back(entry.ratio);
    row.validity = effective::to_string(effective::overall(report));
  } catch (const DegenerateParameterError& err) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.t_gate_ns = row.rate_mev = row.t_eff_ns = row.gates_per_t_eff = nan;
    row.ratios.assign(sweep_ratio_names().size(), nan);
    row.validity = "n/a";
    row.status = "degenerate:" + err.resonance();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_rows(const RunConfig& config) {
  if (config.sweep.parameter != "coupling_scale") {
    model::PhysicalParams probe = config.params;
    param_field(probe, config.sweep.parameter);  // rejects unknown names
  }
  const auto grid = sweep_grid(config.sweep);
  const std::size_t n = grid.size();

  std::vector<model::PhysicalParams> points;
  points.reserve(n);
  for (double v : grid) {
    points.push_back(params_at(config, v));
    points.back().validate();
  }

  std::vector<SweepRow> rows(n);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n / 64, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          rows[i] = evaluate(points[i], grid[i], config.validity);
        }
      });
    }
  }

  // Locate sign changes of every resonance denominator between neighbours.
  if (n > 1) {
    std::vector<std::vector<effective::Resonance>> res(n);
    for (std::size_t i = 0; i < n; ++i) res[i] = effective::resonances(points[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t k = 0; k < res[i].size(); ++k) {
        const double a = res[i][k].value;
        const double b = res[i + 1][k].value;
        if (!(a * b < 0.0)) continue;
        // linear interpolation of the crossing, then the nearer grid point
        const double x = grid[i] + (grid[i + 1] - grid[i]) * a / (a - b);
        const std::size_t j =
            std::abs(x - grid[i]) <= std::abs(grid[i + 1] - x) ? i : i + 1;
        if (rows[j].status == "ok") rows[j].status = "resonance_crossed:" + res[i][k].name;
      }
    }
  }
  return rows;
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  const auto rows = sweep_rows(config);
  out << config.sweep.parameter << unit_of(config.sweep.parameter)
      << ",t_gate_ns,rate_meV,t_eff_ns,gates_per_t_eff";
  for (const auto& name : sweep_ratio_names()) out << ",ratio:" << name;
  out << ",validity,status\n";
  for (const auto& row : rows) {
    out << format_double(row.value) << ',' << sci(row.t_gate_ns) << ',' << sci(row.rate_mev) << ','
        << sci(row.t_eff_ns) << ',' << sci(row.gates_per_t_eff);
    for (double r : row.ratios) out << ',' << sci(r, 3);
    out << ',' << row.validity << ',' << row.status << '\n';
  }
}

int run_command(std::string_view command, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    if (command == "params") {
      cmd_params(config, out);
    } else if (command == "gate") {
      cmd_gate(config, out);
    } else if (command == "evolve") {
      cmd_evolve(config, out);
    } else if (command == "raman") {
      cmd_raman(config, out, err);
    } else if (command == "qnd") {
      cmd_qnd(config, out);
    } else if (command == "sweep") {
      cmd_sweep(config, out);
    } else {
      throw ConfigError("unknown command '" + std::string(command) + "'");
    }
    out.flush();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegenerateParameterError& e) {
    err << "degenerate parameters (" << e.resonance() << "): " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace hqpu::cli
