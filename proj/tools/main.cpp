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

// hqpu: command-line front end.
//
//   hqpu [--config PATH] [--out PATH] [--seed N] [--tol X] <command>
//
// Commands: params | gate | evolve | raman | qnd | sweep. Without --config
// the built-in default parameter set is used.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hqpu/cli/commands.hpp"
#include "hqpu/cli/config.hpp"
#include "hqpu/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hybrid QD/NV processing unit: effective-gate analysis and simulation"};
  app.require_subcommand(1, 1);
  // options may also follow the subcommand
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool print_config = false;
  app.add_option("--config", config_path, "Configuration file (key = value)");
  app.add_option("--out", out_path, "Write primary output here instead of stdout");
  app.add_option("--seed", seed, "Override run.seed");
  app.add_option("--tol", tol, "Override run.tol")->check(CLI::PositiveNumber);
  app.add_flag("--print-config", print_config,
               "Write the effective configuration to stderr before running");

  for (const char* name : {"params", "gate", "evolve", "raman", "qnd", "sweep"}) {
    app.add_subcommand(name);
  }
  app.get_subcommand("params")->description("Effective coefficients and validity checks");
  app.get_subcommand("gate")->description("Controlled-phase gate time and decoherence budget");
  app.get_subcommand("evolve")->description("Full propagation vs effective phases (CSV)");
  app.get_subcommand("raman")->description("NV Raman transfer time series (CSV)");
  app.get_subcommand("qnd")->description("QND photon-detection histogram (CSV)");
  app.get_subcommand("sweep")->description("Gate metrics over a parameter grid (CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hqpu::cli::kExitConfig;
  }

  hqpu::cli::RunConfig config;
  try {
    if (!config_path.empty()) config = hqpu::cli::load_config(config_path);
  } catch (const hqpu::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return hqpu::cli::kExitConfig;
  }
  if (seed) config.seed = *seed;
  if (tol) config.tol = *tol;
  if (print_config) std::cerr << hqpu::cli::emit_config(config);

  const std::string command = app.get_subcommands().front()->get_name();
  if (out_path.empty()) return hqpu::cli::run_command(command, config, std::cout, std::cerr);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "config error: cannot open '" << out_path << "' for writing\n";
    return hqpu::cli::kExitConfig;
  }
  return hqpu::cli::run_command(command, config, out, std::cerr);
}
