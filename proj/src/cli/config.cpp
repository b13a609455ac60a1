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

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "frqme/cli.hpp"

namespace frqme::cli {

using nlohmann::json;

namespace {

double number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const ConfigError&) {
    }
  }
  throw ConfigError(std::string("'") + key + "' must be a number");
}

std::string text(const json& doc, const char* key, const std::string& fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc.at(key).is_string()) throw ConfigError(std::string("'") + key + "' must be a string");
  return doc.at(key).get<std::string>();
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, _] : doc.items()) {
    if (!allowed.count(k)) throw ConfigError("unknown key '" + where + k + "'");
  }
}

Complex complex_entry(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_object()) {
    reject_unknown(v, {"re", "im"}, "complex.");
    const double re = v.contains("re") ? v.at("re").get<double>() : 0.0;
    const double im = v.contains("im") ? v.at("im").get<double>() : 0.0;
    return {re, im};
  }
  throw ConfigError("complex entries must be numbers or {\"re\": x, \"im\": y}");
}

Matrix matrix_from_json(const json& rows, const char* key) {
  if (!rows.is_array() || rows.empty()) throw ConfigError(std::string("'") + key + "' must be a non-empty array of rows");
  const auto d = static_cast<Eigen::Index>(rows.size());
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      throw ConfigError(std::string("'") + key + "' must be square");
    }
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = complex_entry(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

}  // namespace

RunConfig config_from_json_unchecked(const json& doc);

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSingleQubit: return "single_qubit";
    case ScenarioKind::kTwoQubit: return "two_qubit";
    case ScenarioKind::kCustom: return "custom";
  }
  return "unknown";
}

double parse_scalar(const std::string& token) {
  std::string s;
  for (char ch : token)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ConfigError("empty numeric value");

  auto plain = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ConfigError("not a number: '" + token + "'");
    }
    if (used != part.size()) throw ConfigError("not a number: '" + token + "'");
    return v;
  };

  const auto pos = s.find("pi");
  if (pos == std::string::npos) return plain(s);

  // [coef*]pi[/div]
  double coef = 1.0;
  std::string head = s.substr(0, pos);
  if (head == "-") coef = -1.0;
  else if (!head.empty()) {
    if (head.back() != '*') throw ConfigError("not a number: '" + token + "'");
    coef = plain(head.substr(0, head.size() - 1));
  }
  double div = 1.0;
  const std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw ConfigError("not a number: '" + token + "'");
    div = plain(tail.substr(1));
  }
  return coef * std::numbers::pi / div;
}

std::vector<double> parse_value_list(const std::string& list) {
  std::vector<double> out;
  std::string current;
  bool any = false;
  for (char ch : list) {
    if (ch == ',') {
      out.push_back(parse_scalar(current));
      current.clear();
      any = true;
    } else {
      current += ch;
    }
  }
  bool blank = true;
  for (char ch : current)
    if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
  if (!blank || any) out.push_back(parse_scalar(current));
  return out;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override must look like key=value: '" + assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;

  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (key.empty()) throw ConfigError("empty path component in '" + path + "'");
    if (!node->is_object()) *node = json::object();
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

RunConfig config_from_json(const json& doc) {
  try {
    return config_from_json_unchecked(doc);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

RunConfig config_from_json_unchecked(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(doc,
                 {"scenario", "theta", "phi", "kappa", "omega1", "tau_c", "grid_points", "eps_converge", "t_max",
                  "compare_tol", "hamiltonian", "rho0", "tolerances", "output"},
                 "");
  RunConfig cfg;
  const std::string kind = text(doc, "scenario", "single_qubit");
  if (kind == "single_qubit") cfg.scenario = ScenarioKind::kSingleQubit;
  else if (kind == "two_qubit") cfg.scenario = ScenarioKind::kTwoQubit;
  else if (kind == "custom") cfg.scenario = ScenarioKind::kCustom;
  else throw ConfigError("unknown scenario '" + kind + "' (expected single_qubit, two_qubit or custom)");

  cfg.theta = number(doc, "theta", cfg.theta);
  cfg.phi = number(doc, "phi", cfg.phi);
  cfg.kappa = number(doc, "kappa", cfg.kappa);
  cfg.omega1 = number(doc, "omega1", cfg.omega1);
  cfg.tau_c = number(doc, "tau_c", cfg.tau_c);
  cfg.eps_converge = number(doc, "eps_converge", cfg.eps_converge);
  cfg.t_max = number(doc, "t_max", cfg.t_max);
  cfg.compare_tol = number(doc, "compare_tol", cfg.compare_tol);
  const double grid = number(doc, "grid_points", cfg.grid_points);
  if (grid != std::floor(grid) || grid < 2 || grid > 1e7) throw ConfigError("grid_points must be an integer >= 2");
  cfg.grid_points = static_cast<int>(grid);

  if (doc.contains("hamiltonian")) cfg.hamiltonian = matrix_from_json(doc.at("hamiltonian"), "hamiltonian");
  if (doc.contains("rho0")) cfg.rho0 = matrix_from_json(doc.at("rho0"), "rho0");

  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    reject_unknown(t, {"herm", "trace", "psd", "compare", "degeneracy"}, "tolerances.");
    cfg.tolerances.herm = number(t, "herm", cfg.tolerances.herm);
    cfg.tolerances.trace = number(t, "trace", cfg.tolerances.trace);
    cfg.tolerances.psd = number(t, "psd", cfg.tolerances.psd);
    cfg.tolerances.compare = number(t, "compare", cfg.tolerances.compare);
    cfg.tolerances.degeneracy = number(t, "degeneracy", cfg.tolerances.degeneracy);
  }
  if (doc.contains("output")) {
    const json& o = doc.at("output");
    if (!o.is_object()) throw ConfigError("'output' must be an object");
    reject_unknown(o, {"result", "time_series", "sweep"}, "output.");
    cfg.result_file = text(o, "result", cfg.result_file);
    cfg.time_series_file = text(o, "time_series", cfg.time_series_file);
    cfg.sweep_file = text(o, "sweep", cfg.sweep_file);
  }
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  json doc = {
      {"scenario", to_string(cfg.scenario)},
      {"theta", cfg.theta},
      {"phi", cfg.phi},
      {"kappa", cfg.kappa},
      {"omega1", cfg.omega1},
      {"tau_c", cfg.tau_c},
      {"grid_points", cfg.grid_points},
      {"eps_converge", cfg.eps_converge},
      {"t_max", cfg.t_max},
      {"compare_tol", cfg.compare_tol},
      {"tolerances",
       {{"herm", cfg.tolerances.herm},
        {"trace", cfg.tolerances.trace},
        {"psd", cfg.tolerances.psd},
        {"compare", cfg.tolerances.compare},
        {"degeneracy", cfg.tolerances.degeneracy}}},
      {"output", {{"result", cfg.result_file}, {"time_series", cfg.time_series_file}, {"sweep", cfg.sweep_file}}},
  };
  if (cfg.hamiltonian) doc["hamiltonian"] = matrix_to_json(*cfg.hamiltonian);
  if (cfg.rho0) doc["rho0"] = matrix_to_json(*cfg.rho0);
  return doc;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  json doc = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ConfigError("config file '" + path + "' is not valid JSON");
  }
  for (const auto& o : overrides) apply_override(doc, o);
  return config_from_json(doc);
}

}  // namespace frqme::cli
