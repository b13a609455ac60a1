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

#include <vector>

#include "frqme/operator.hpp"
#include "frqme/spectral.hpp"

namespace frqme {

/// Projective measurement of the observable whose spectrum is given, applied
/// to rho0: one projector, probability and label per degeneracy group.
struct BornPrediction {
  std::vector<Matrix> projectors;
  std::vector<double> probabilities;
  std::vector<double> labels;  // mean eigenvalue of each group
  DensityMatrix post_state;
};

struct ProbabilityRow {
  double label;
  double simulated;  // Tr(P_k rho_sim)
  double born;       // p_k
};

struct ComparisonReport {
  double trace_distance = 0.0;
  double max_entry_deviation = 0.0;
  double tolerance = 0.0;
  std::vector<ProbabilityRow> probability_table;
  bool pass = false;
};

BornPrediction born_predict(const DensityMatrix& rho0, const Spectrum& s, const ToleranceConfig& tol = {});

/// Metrics of rho_sim against prediction.post_state; pass iff the trace
/// distance is at most `tolerance`.
ComparisonReport compare(const DensityMatrix& rho_sim, const BornPrediction& prediction, double tolerance);

}  // namespace frqme
