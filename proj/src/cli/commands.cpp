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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <thread>

#include "frqme/cli.hpp"
#include "frqme/verify.hpp"

namespace frqme::cli {

namespace {

// Everything user-supplied is checked here so that failures later in the
// pipeline can be reported as numerical problems.
void check_inputs(const RunConfig& cfg) {
  try {
    cfg.tolerances.validate();
    if (!(cfg.eps_converge > 0.0 && cfg.eps_converge < 1.0)) throw ConfigError("eps_converge must lie in (0, 1)");
    if (!(cfg.compare_tol >= 0.0)) throw ConfigError("compare_tol must be >= 0");
    if (!std::isfinite(cfg.theta) || !std::isfinite(cfg.phi)) throw ConfigError("theta and phi must be finite");
    if (cfg.scenario == ScenarioKind::kCustom) {
      if (!cfg.hamiltonian || !cfg.rho0) throw ConfigError("custom scenario needs 'hamiltonian' and 'rho0'");
      const auto h = HermitianOperator::from(*cfg.hamiltonian, cfg.tolerances);
      const auto rho = validate_density(*cfg.rho0, cfg.tolerances);
      if (h.dim() != rho.dim()) throw ConfigError("'hamiltonian' and 'rho0' dimensions differ");
      if (!(std::isfinite(cfg.t_max) && cfg.t_max > 0.0)) throw ConfigError("t_max must be > 0");
      if (!(std::isfinite(cfg.tau_c) && cfg.tau_c >= 0.0)) throw ConfigError("tau_c must be >= 0");
    } else {
      PulseSpec{cfg.kappa, cfg.omega1, cfg.tau_c}.validate();
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

double decay_exponent(const RunConfig& cfg, const ScenarioResult& r) {
  if (cfg.scenario != ScenarioKind::kCustom) return cfg.omega1 * cfg.tau_c * cfg.kappa;
  const auto gap = r.spectrum.min_group_gap();
  return gap ? cfg.tau_c * *gap * *gap * cfg.t_max : 0.0;
}

void set_parameter(RunConfig& cfg, const std::string& param, double value) {
  if (param == "kappa") cfg.kappa = value;
  else if (param == "tau_c") cfg.tau_c = value;
  else if (param == "omega1") cfg.omega1 = value;
  else if (param == "theta") cfg.theta = value;
  else if (param == "phi") cfg.phi = value;
  else throw ConfigError("unknown sweep parameter '" + param + "' (expected kappa, tau_c, omega1, theta or phi)");
}

void check_sweep_parameter(const RunConfig& cfg, const std::string& param) {
  RunConfig probe = cfg;
  set_parameter(probe, param, 0.0);
  const bool ok = cfg.scenario == ScenarioKind::kSingleQubit ||
                  (cfg.scenario == ScenarioKind::kTwoQubit && param != "theta" && param != "phi") ||
                  (cfg.scenario == ScenarioKind::kCustom && param == "tau_c");
  if (!ok) throw ConfigError("parameter '" + param + "' has no effect on the " + to_string(cfg.scenario) + " scenario");
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

RunOutcome execute(const RunConfig& cfg) {
  check_inputs(cfg);
  const ToleranceConfig& tol = cfg.tolerances;
  const PulseSpec pulse{cfg.kappa, cfg.omega1, cfg.tau_c};

  auto result = [&]() {
    switch (cfg.scenario) {
      case ScenarioKind::kSingleQubit:
        return single_qubit_scenario(cfg.theta, cfg.phi, pulse, cfg.grid_points, tol);
      case ScenarioKind::kTwoQubit:
        return two_qubit_scenario(pulse, cfg.grid_points, tol);
      case ScenarioKind::kCustom:
        break;
    }
    return custom_scenario(HermitianOperator::from(*cfg.hamiltonian, tol), validate_density(*cfg.rho0, tol),
                           cfg.tau_c, cfg.t_max, cfg.grid_points, tol);
  }();

  ComparisonReport comparison = compare(result.final_numeric, result.born, cfg.compare_tol);
  const auto t_conv = convergence_time(result.spectrum, cfg.tau_c, cfg.eps_converge);
  return RunOutcome{std::move(result), std::move(comparison), t_conv};
}

std::vector<SweepRow> sweep_rows(const RunConfig& cfg, const std::string& param, const std::vector<double>& values) {
  check_sweep_parameter(cfg, param);

  auto one = [&](double value) {
    RunConfig point = cfg;
    set_parameter(point, param, value);
    const RunOutcome o = execute(point);
    std::vector<double> probs = o.result.born.probabilities;
    return SweepRow{value, decay_exponent(point, o.result), o.comparison.trace_distance,
                    purity(o.result.final_numeric), std::move(probs)};
  };

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < values.size(); begin += workers) {
    const std::size_t end = std::min(values.size(), begin + workers);
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = begin; i < end; ++i) batch.push_back(std::async(std::launch::async, one, values[i]));
    for (auto& f : batch) rows.push_back(f.get());
  }
  return rows;
}

int cmd_run(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err) {
  std::optional<RunOutcome> run;
  try {
    run.emplace(execute(cfg));
    std::filesystem::create_directories(out_dir);
    {
      auto f = open_output(out_dir / cfg.result_file);
      f << result_document(cfg, *run).dump(2) << '\n';
    }
    {
      auto f = open_output(out_dir / cfg.time_series_file);
      write_time_series_csv(f, run->result.time_series);
    }
  } catch (const ConfigError& e) {
    err << "frqme: config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "frqme: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "frqme: numerical validation failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  const auto& r = run->result;
  const auto& c = run->comparison;
  out << "scenario " << to_string(cfg.scenario) << ", d = " << r.spectrum.dim() << ", duration "
      << format_number(r.duration) << '\n';
  out << "degeneracy groups:";
  for (const auto& g : r.spectrum.groups) {
    out << " {";
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
    out << '}';
  }
  out << '\n';
  for (const auto& row : c.probability_table) {
    out << "  eigenvalue " << format_number(row.label) << ": born " << format_number(row.born) << ", simulated "
        << format_number(row.simulated) << '\n';
  }
  out << "trace distance to Born state " << format_number(c.trace_distance) << " (tol " << format_number(c.tolerance)
      << "): " << (c.pass ? "pass" : "fail") << '\n';
  return c.pass ? kExitPass : kExitComparison;
}

int cmd_sweep(const RunConfig& cfg, const std::string& param, const std::vector<double>& values,
              const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err) {
  try {
    const auto rows = sweep_rows(cfg, param, values);
    std::filesystem::create_directories(out_dir);
    auto f = open_output(out_dir / cfg.sweep_file);
    write_sweep_csv(f, param, rows);
    out << "wrote " << rows.size() << " sweep rows to " << (out_dir / cfg.sweep_file).string() << '\n';
  } catch (const ConfigError& e) {
    err << "frqme: config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "frqme: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "frqme: numerical validation failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitPass;
}

int cmd_verify(const ToleranceConfig& tol, std::ostream& out) {
  const auto results = run_acceptance(tol);
  print_report(out, results);
  return all_passed(results) ? kExitPass : kExitComparison;
}

}  // namespace frqme::cli
