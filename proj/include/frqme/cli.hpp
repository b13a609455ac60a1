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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frqme/born.hpp"
#include "frqme/operator.hpp"
#include "frqme/scenarios.hpp"

namespace frqme::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitComparison = 3,
};

/// Malformed or out-of-range configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class ScenarioKind { kSingleQubit, kTwoQubit, kCustom };

std::string to_string(ScenarioKind kind);

struct RunConfig {
  ScenarioKind scenario = ScenarioKind::kSingleQubit;
  double theta = 0.0;
  double phi = 0.0;
  double kappa = 20.0;
  double omega1 = 1.0;
  double tau_c = 1.0;
  int grid_points = kDefaultGridPoints;
  double eps_converge = 1e-9;
  double t_max = 20.0;  // custom scenario duration
  double compare_tol = 1e-6;
  std::optional<Matrix> hamiltonian;  // custom only
  std::optional<Matrix> rho0;         // custom only
  ToleranceConfig tolerances;
  std::string result_file = "result.json";
  std::string time_series_file = "time_series.csv";
  std::string sweep_file = "sweep.csv";
};

/// Applies "a.b.c=value" to a JSON document. The value is parsed as JSON when
/// possible and kept as a string otherwise.
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Builds a RunConfig from a JSON document; unknown keys and bad values throw
/// ConfigError.
RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const RunConfig& cfg);

/// Reads `path` (if non-empty), applies overrides in order and converts.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

/// "1.5", "pi", "pi/2", "3*pi/4", "-2e-3".
double parse_scalar(const std::string& token);
/// Comma-separated list of parse_scalar tokens; empty input yields {}.
std::vector<double> parse_value_list(const std::string& list);

/// Runs the configured scenario and its Born comparison.
struct RunOutcome {
  ScenarioResult result;
  ComparisonReport comparison;
  std::optional<double> convergence_time;
};
RunOutcome execute(const RunConfig& cfg);

nlohmann::json result_document(const RunConfig& cfg, const RunOutcome& outcome);
void write_time_series_csv(std::ostream& os, const std::vector<TimeSample>& series);

/// Rows of {"re": x, "im": y} objects.
nlohmann::json matrix_to_json(const Matrix& m);

/// 17 significant digits.
std::string format_number(double v);

struct SweepRow {
  double value;
  double decay_exponent;
  double trace_distance;
  double purity;
  std::vector<double> probabilities;
};
std::vector<SweepRow> sweep_rows(const RunConfig& cfg, const std::string& param, const std::vector<double>& values);
void write_sweep_csv(std::ostream& os, const std::string& param, const std::vector<SweepRow>& rows);

int cmd_run(const RunConfig& cfg, const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, const std::string& param, const std::vector<double>& values,
              const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err);
int cmd_verify(const ToleranceConfig& tol, std::ostream& out);

}  // namespace frqme::cli
