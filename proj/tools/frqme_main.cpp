// Copyright 2026 The frqme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frqme/cli.hpp"

namespace {

constexpr const char* kVersion = "frqme 0.1.0";

}  // namespace

int main(int argc, char** argv) {
  using namespace frqme::cli;

  CLI::App app{"Driven-dissipative qubit simulator: drive commutator plus drive-induced dissipation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::string> overrides;
  double eps_converge = 0.0;

  auto add_common = [&](CLI::App* cmd, bool with_outputs) {
    cmd->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    cmd->add_option("--set", overrides, "Override a config entry, key.path=value (repeatable)");
    if (with_outputs) {
      cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
      cmd->add_option("--eps-converge", eps_converge, "Residual coherence for the reported convergence time");
    }
  };

  CLI::App* run = app.add_subcommand("run", "Run one scenario and compare with the projective-measurement state");
  add_common(run, true);

  std::string param;
  std::string values;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a scenario over a list of parameter values");
  add_common(sweep, true);
  sweep->add_option("--param", param, "kappa, tau_c, omega1, theta or phi")->required();
  sweep->add_option("--values", values, "Comma-separated values; 'pi', 'pi/2', '3*pi/4' accepted")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in acceptance checks");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  RunConfig cfg;
  std::vector<double> sweep_values;
  try {
    if (eps_converge != 0.0) overrides.push_back("eps_converge=" + format_number(eps_converge));
    cfg = load_config(config_path, overrides);
    if (sweep->parsed()) sweep_values = parse_value_list(values);
  } catch (const ConfigError& e) {
    std::cerr << "frqme: config error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (run->parsed()) return cmd_run(cfg, out_dir, std::cout, std::cerr);
  if (sweep->parsed()) return cmd_sweep(cfg, param, sweep_values, out_dir, std::cout, std::cerr);
  return cmd_verify(cfg.tolerances, std::cout);
}
