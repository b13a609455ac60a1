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

#include <cstdio>
#include <ostream>

#include "frqme/cli.hpp"

namespace frqme::cli {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    rows.push_back(std::move(row));
  }
  return rows;
}

json result_document(const RunConfig& cfg, const RunOutcome& outcome) {
  const ScenarioResult& r = outcome.result;
  json groups = json::array();
  for (std::size_t k = 0; k < r.spectrum.group_count(); ++k) {
    groups.push_back({{"label", r.spectrum.group_label(k)}, {"indices", r.spectrum.groups[k]}});
  }
  std::vector<double> eigenvalues(r.spectrum.eigenvalues.data(),
                                  r.spectrum.eigenvalues.data() + r.spectrum.eigenvalues.size());

  json table = json::array();
  for (const auto& row : outcome.comparison.probability_table) {
    table.push_back({{"label", row.label}, {"born", row.born}, {"simulated", row.simulated}});
  }

  json doc;
  doc["config"] = config_to_json(cfg);
  doc["dimension"] = r.spectrum.dim();
  doc["duration"] = r.duration;
  doc["spectrum"] = {{"eigenvalues", eigenvalues}, {"groups", groups}};
  doc["initial"] = matrix_to_json(r.initial.matrix());
  doc["final_numeric"] = matrix_to_json(r.final_numeric.matrix());
  doc["final_analytic"] = matrix_to_json(r.final_analytic.matrix());
  doc["asymptotic"] = matrix_to_json(r.asymptotic.matrix());
  doc["born_post_state"] = matrix_to_json(r.born.post_state.matrix());
  doc["analytic_numeric_deviation"] = max_abs_diff(r.final_numeric.matrix(), r.final_analytic.matrix());
  doc["probabilities"] = table;
  doc["comparison"] = {{"trace_distance", outcome.comparison.trace_distance},
                       {"max_entry_deviation", outcome.comparison.max_entry_deviation},
                       {"tolerance", outcome.comparison.tolerance},
                       {"verdict", outcome.comparison.pass ? "pass" : "fail"}};
  doc["convergence"] = {{"eps", cfg.eps_converge},
                        {"time", outcome.convergence_time ? json(*outcome.convergence_time) : json(nullptr)},
                        {"unbounded", !outcome.convergence_time.has_value()}};
  return doc;
}

void write_time_series_csv(std::ostream& os, const std::vector<TimeSample>& series) {
  os << "t,purity,max_cross_group_coherence,trace_distance_to_born\r\n";
  for (const auto& s : series) {
    os << format_number(s.t) << ',' << format_number(s.purity) << ',' << format_number(s.max_cross_group_coherence)
       << ',' << format_number(s.trace_distance_to_born) << "\r\n";
  }
}

void write_sweep_csv(std::ostream& os, const std::string& param, const std::vector<SweepRow>& rows) {
  os << "parameter,value,omega1_tau_c_kappa,trace_distance_to_born,purity,born_probabilities\r\n";
  for (const auto& r : rows) {
    std::string probs;
    for (std::size_t k = 0; k < r.probabilities.size(); ++k) {
      if (k) probs += ';';
      probs += format_number(r.probabilities[k]);
    }
    os << param << ',' << format_number(r.value) << ',' << format_number(r.decay_exponent) << ','
       << format_number(r.trace_distance) << ',' << format_number(r.purity) << ',' << probs << "\r\n";
  }
}

}  // namespace frqme::cli
