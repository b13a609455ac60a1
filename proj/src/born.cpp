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

#include "frqme/born.hpp"

#include <algorithm>
#include <cmath>

namespace frqme {

BornPrediction born_predict(const DensityMatrix& rho0, const Spectrum& s, const ToleranceConfig& tol) {
  tol.validate();
  if (rho0.dim() != s.dim()) throw DimensionMismatch("born_predict: dimension mismatch");
  const std::size_t n = s.group_count();

  std::vector<Matrix> projectors;
  std::vector<double> probs;
  std::vector<double> labels;
  projectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    projectors.push_back(s.group_projector(k));
    probs.push_back((projectors.back() * rho0.matrix()).trace().real());
    labels.push_back(s.group_label(k));
  }

  double total = 0.0;
  for (double& p : probs) {
    if (p < -tol.psd) throw NumericalError("negative outcome probability " + std::to_string(p));
    p = std::clamp(p, 0.0, 1.0);
    total += p;
  }
  if (std::abs(total - 1.0) > tol.trace) throw NumericalError("outcome probabilities sum to " + std::to_string(total));
  for (double& p : probs) p /= total;

  // Ensemble over outcomes: with probability p_k the state collapses to
  // P_k rho0 P_k / p_k.
  const Eigen::Index d = s.dim();
  Matrix post = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < n; ++k) {
    if (probs[k] == 0.0) continue;
    const Matrix collapsed = projectors[k] * rho0.matrix() * projectors[k];
    const double weight = collapsed.trace().real();
    post += probs[k] * (collapsed / weight);
  }

  return BornPrediction{std::move(projectors), std::move(probs), std::move(labels), validate_density(post, tol)};
}

ComparisonReport compare(const DensityMatrix& rho_sim, const BornPrediction& prediction, double tolerance) {
  if (rho_sim.dim() != prediction.post_state.dim()) throw DimensionMismatch("compare: dimension mismatch");
  if (!(tolerance >= 0.0)) throw InvalidArgument("compare: tolerance must be >= 0");
  ComparisonReport r;
  r.tolerance = tolerance;
  r.trace_distance = trace_distance(rho_sim, prediction.post_state);
  r.max_entry_deviation = max_abs_diff(rho_sim.matrix(), prediction.post_state.matrix());
  for (std::size_t k = 0; k < prediction.projectors.size(); ++k) {
    const double sim = (prediction.projectors[k] * rho_sim.matrix()).trace().real();
    r.probability_table.push_back({prediction.labels[k], sim, prediction.probabilities[k]});
  }
  r.pass = r.trace_distance <= tolerance;
  return r;
}

}  // namespace frqme
