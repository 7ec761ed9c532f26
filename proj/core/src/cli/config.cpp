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

#include "hqpu/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <vector>

#include "hqpu/errors.hpp"

namespace hqpu::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view v) {
  double x = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  }
  return x;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view v) {
  Int x = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(v) + "'");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw ConfigError(std::string(key) + ": expected true/false, got '" + std::string(v) + "'");
}

// One entry per config key: how to read it and how to write it.
struct Field {
  std::string key;
  std::function<void(RunConfig&, std::string_view)> read;
  std::function<std::string(const RunConfig&)> write;
};

template <typename Get>
Field real(std::string key, Get get) {
  return {key,
          [key, get](RunConfig& c, std::string_view v) { get(c) = parse_double(key, v); },
          [get](const RunConfig& c) { return format_double(get(const_cast<RunConfig&>(c))); }};
}

template <typename Int, typename Get>
Field integer(std::string key, Get get) {
  return {key,
          [key, get](RunConfig& c, std::string_view v) { get(c) = parse_int<Int>(key, v); },
          [get](const RunConfig& c) { return std::to_string(get(const_cast<RunConfig&>(c))); }};
}

template <typename Get>
Field boolean(std::string key, Get get) {
  return {key,
          [key, get](RunConfig& c, std::string_view v) { get(c) = parse_bool(key, v); },
          [get](const RunConfig& c) {
            return std::string(get(const_cast<RunConfig&>(c)) ? "true" : "false");
          }};
}

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = {
      "g1",      "g2",      "omega1",   "omega2",      "delta1",  "delta2",
      "delta_e", "delta_h", "nu",       "delta_small", "phi",     "omega_v",
      "omega_h", "omega_v_prime", "omega_plus", "tau_qd", "tau_nv"};
  return names;
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> t;
    for (const auto& name : param_names()) {
      t.push_back(real("params." + name,
                       [name](RunConfig& c) -> double& { return param_field(c.params, name); }));
    }
    t.push_back(integer<std::size_t>("params.n_max",
                                     [](RunConfig& c) -> std::size_t& { return c.params.n_max; }));
    t.push_back(real("run.tol", [](RunConfig& c) -> double& { return c.tol; }));
    t.push_back(integer<std::uint64_t>("run.seed",
                                       [](RunConfig& c) -> std::uint64_t& { return c.seed; }));
    t.push_back(real("validity.pass", [](RunConfig& c) -> double& { return c.validity.pass; }));
    t.push_back(real("validity.warn", [](RunConfig& c) -> double& { return c.validity.warn; }));

    t.push_back(real("evolve.t_final", [](RunConfig& c) -> double& { return c.evolve.t_final; }));
    t.push_back({"evolve.method",
                 [](RunConfig& c, std::string_view v) {
                   if (v == "ode") {
                     c.evolve.method = effective::PropagationMethod::kOde;
                   } else if (v == "spectral") {
                     c.evolve.method = effective::PropagationMethod::kSpectral;
                   } else {
                     throw ConfigError("evolve.method: expected ode or spectral");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.evolve.method == effective::PropagationMethod::kOde
                                          ? "ode"
                                          : "spectral");
                 }});
    t.push_back(boolean("evolve.refine", [](RunConfig& c) -> bool& { return c.evolve.refine; }));
    t.push_back(real("evolve.sample_interval",
                     [](RunConfig& c) -> double& { return c.evolve.sample_interval; }));

    t.push_back(real("raman.t_final", [](RunConfig& c) -> double& { return c.raman.t_final; }));
    t.push_back(integer<int>("raman.samples", [](RunConfig& c) -> int& { return c.raman.samples; }));
    t.push_back(boolean("raman.compensate_stark",
                        [](RunConfig& c) -> bool& { return c.raman.compensate_stark; }));
    t.push_back(boolean("raman.include_stark",
                        [](RunConfig& c) -> bool& { return c.raman.include_stark; }));

    t.push_back(real("qnd.a_re", [](RunConfig& c) -> double& { return c.qnd.a_re; }));
    t.push_back(real("qnd.a_im", [](RunConfig& c) -> double& { return c.qnd.a_im; }));
    t.push_back(real("qnd.b_re", [](RunConfig& c) -> double& { return c.qnd.b_re; }));
    t.push_back(real("qnd.b_im", [](RunConfig& c) -> double& { return c.qnd.b_im; }));
    t.push_back(real("qnd.c_re", [](RunConfig& c) -> double& { return c.qnd.c_re; }));
    t.push_back(real("qnd.c_im", [](RunConfig& c) -> double& { return c.qnd.c_im; }));
    t.push_back(real("qnd.d_re", [](RunConfig& c) -> double& { return c.qnd.d_re; }));
    t.push_back(real("qnd.d_im", [](RunConfig& c) -> double& { return c.qnd.d_im; }));
    t.push_back(integer<int>("qnd.shots", [](RunConfig& c) -> int& { return c.qnd.shots; }));
    t.push_back(real("qnd.loss", [](RunConfig& c) -> double& { return c.qnd.loss; }));

    t.push_back({"sweep.parameter",
                 [](RunConfig& c, std::string_view v) { c.sweep.parameter = std::string(v); },
                 [](const RunConfig& c) { return c.sweep.parameter; }});
    t.push_back(real("sweep.start", [](RunConfig& c) -> double& { return c.sweep.start; }));
    t.push_back(real("sweep.stop", [](RunConfig& c) -> double& { return c.sweep.stop; }));
    t.push_back(integer<int>("sweep.points", [](RunConfig& c) -> int& { return c.sweep.points; }));
    t.push_back({"sweep.spacing",
                 [](RunConfig& c, std::string_view v) {
                   if (v == "linear") {
                     c.sweep.spacing = Spacing::kLinear;
                   } else if (v == "log") {
                     c.sweep.spacing = Spacing::kLog;
                   } else {
                     throw ConfigError("sweep.spacing: expected linear or log");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.sweep.spacing == Spacing::kLinear ? "linear" : "log");
                 }});
    return t;
  }();
  return table;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return {buf, ptr};
}

double& param_field(model::PhysicalParams& p, std::string_view name) {
  static const std::map<std::string, double model::PhysicalParams::*, std::less<>> members = {
      {"g1", &model::PhysicalParams::g1},
      {"g2", &model::PhysicalParams::g2},
      {"omega1", &model::PhysicalParams::omega1},
      {"omega2", &model::PhysicalParams::omega2},
      {"delta1", &model::PhysicalParams::delta1},
      {"delta2", &model::PhysicalParams::delta2},
      {"delta_e", &model::PhysicalParams::delta_e},
      {"delta_h", &model::PhysicalParams::delta_h},
      {"nu", &model::PhysicalParams::nu},
      {"delta_small", &model::PhysicalParams::delta_small},
      {"phi", &model::PhysicalParams::phi},
      {"omega_v", &model::PhysicalParams::omega_v},
      {"omega_h", &model::PhysicalParams::omega_h},
      {"omega_v_prime", &model::PhysicalParams::omega_v_prime},
      {"omega_plus", &model::PhysicalParams::omega_plus},
      {"tau_qd", &model::PhysicalParams::tau_qd},
      {"tau_nv", &model::PhysicalParams::tau_nv}};
  const auto it = members.find(name);
  if (it == members.end()) throw ConfigError("unknown parameter '" + std::string(name) + "'");
  return p.*(it->second);
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string_view, const Field*, std::less<>> by_key;
  for (const auto& f : fields()) by_key.emplace(f.key, &f);

  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) +
                        "'");
    }
    if (!seen.emplace(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": repeated key '" + std::string(key) +
                        "'");
    }
    it->second->read(config, value);
  }

  config.params.validate();
  if (!(config.tol > 0.0)) throw ConfigError("run.tol must be > 0");
  if (!(config.evolve.t_final >= 0.0)) throw ConfigError("evolve.t_final must be >= 0");
  if (!(config.evolve.sample_interval > 0.0)) throw ConfigError("evolve.sample_interval must be > 0");
  if (!(config.raman.t_final >= 0.0)) throw ConfigError("raman.t_final must be >= 0");
  if (config.raman.samples < 1) throw ConfigError("raman.samples must be >= 1");
  if (config.qnd.shots < 1) throw ConfigError("qnd.shots must be >= 1");
  if (!(config.qnd.loss >= 0.0 && config.qnd.loss <= 1.0)) {
    throw ConfigError("qnd.loss must lie in [0, 1]");
  }
  if (!(config.validity.warn <= config.validity.pass)) {
    throw ConfigError("validity.warn must not exceed validity.pass");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const RunConfig& config) {
  std::string out;
  for (const auto& f : fields()) {
    out += f.key;
    out += " = ";
    out += f.write(config);
    out += '\n';
  }
  return out;
}

}  // namespace hqpu::cli
