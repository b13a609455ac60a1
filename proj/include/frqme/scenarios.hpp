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

#include "frqme/born.hpp"
#include "frqme/liouville.hpp"
#include "frqme/spectral.hpp"

namespace frqme {

/// A constant drive of amplitude omega1 applied until the flip angle kappa is
/// reached, i.e. for duration kappa / omega1.
struct PulseSpec {
  double kappa = 20.0;
  double omega1 = 1.0;
  double tau_c = 1.0;

  void validate() const;
  double duration() const { return kappa / omega1; }
  /// omega1 * tau_c * kappa, the exponent of the coherence decay.
  double decay_exponent() const { return omega1 * tau_c * kappa; }
};

struct TimeSample {
  double t;
  double purity;
  double max_cross_group_coherence;
  double trace_distance_to_born;
};

struct ScenarioResult {
  GeneratorSpec generator;
  Spectrum spectrum;
  double duration;
  DensityMatrix initial;
  DensityMatrix final_numeric;
  DensityMatrix final_analytic;
  DensityMatrix asymptotic;
  BornPrediction born;
  std::vector<TimeSample> time_series;
};

constexpr int kDefaultGridPoints = 200;

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
PureState single_qubit_state(double theta, double phi);
/// (|00> + |11>) / sqrt(2).
PureState bell_state();
/// omega1 sigma_y / 2.
HermitianOperator single_qubit_drive(double omega1);
/// omega1 (sigma_y kron I) / 2.
HermitianOperator two_qubit_drive(double omega1);

ScenarioResult single_qubit_scenario(double theta, double phi, const PulseSpec& pulse,
                                     int grid_points = kDefaultGridPoints, const ToleranceConfig& tol = {});

ScenarioResult two_qubit_scenario(const PulseSpec& pulse, int grid_points = kDefaultGridPoints,
                                  const ToleranceConfig& tol = {});

ScenarioResult custom_scenario(const HermitianOperator& h, const DensityMatrix& rho0, double tau_c, double t_max,
                               int grid_points = kDefaultGridPoints, const ToleranceConfig& tol = {});

}  // namespace frqme
