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

#include "frqme/scenarios.hpp"

#include <cmath>

namespace frqme {

namespace {

ScenarioResult run_pipeline(const HermitianOperator& h, const DensityMatrix& rho0, double tau_c, double t_max,
                            int grid_points, const ToleranceConfig& tol) {
  if (grid_points < 2) throw InvalidArgument("grid_points must be >= 2");
  if (!(std::isfinite(t_max) && t_max >= 0.0)) throw InvalidArgument("duration must be finite and >= 0");
  if (h.dim() != rho0.dim()) throw DimensionMismatch("drive and initial state dimensions differ");

  GeneratorSpec generator{h, tau_c, {}};
  const Superoperator gamma = build_generator(generator);
  Spectrum spectrum = eigendecompose(h, tol);

  DensityMatrix final_numeric = apply_propagator(matrix_exponential(gamma, t_max), rho0, tol);
  const EigenbasisState a0 = to_eigenbasis(rho0, spectrum);
  DensityMatrix final_analytic =
      validate_density(from_eigenbasis(analytic_evolve(a0, spectrum, tau_c, t_max), spectrum), tol);
  DensityMatrix asymptotic = asymptotic_state(rho0, spectrum, tol);
  BornPrediction born = born_predict(rho0, spectrum, tol);

  std::vector<TimeSample> series;
  series.reserve(static_cast<std::size_t>(grid_points));
  const double dt = t_max / static_cast<double>(grid_points - 1);
  const Superoperator step = matrix_exponential(gamma, dt);
  Vector v = vectorize(rho0);
  for (int k = 0; k < grid_points; ++k) {
    if (k > 0) v = step.apply(v);
    const Matrix raw = devectorize(v);
    const Matrix rho = 0.5 * (raw + raw.adjoint());
    series.push_back({dt * k, rho.squaredNorm(), max_cross_group_coherence(rho, spectrum),
                      trace_distance(rho, born.post_state.matrix())});
  }

  return ScenarioResult{std::move(generator), std::move(spectrum), t_max,          rho0,
                        std::move(final_numeric), std::move(final_analytic), std::move(asymptotic),
                        std::move(born),          std::move(series)};
}

}  // namespace

void PulseSpec::validate() const {
  if (!(std::isfinite(omega1) && omega1 > 0.0)) throw InvalidArgument("omega1 must be > 0");
  if (!(std::isfinite(kappa) && kappa >= 0.0)) throw InvalidArgument("kappa must be >= 0");
  if (!(std::isfinite(tau_c) && tau_c >= 0.0)) throw InvalidArgument("tau_c must be >= 0");
}

PureState single_qubit_state(double theta, double phi) {
  Vector psi(2);
  psi << std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0);
  return PureState::normalized(psi);
}

PureState bell_state() {
  Vector psi = Vector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return PureState::normalized(psi);
}

HermitianOperator single_qubit_drive(double omega1) { return HermitianOperator::from(Matrix(0.5 * omega1 * pauli::y())); }

HermitianOperator two_qubit_drive(double omega1) {
  return HermitianOperator::from(Matrix(0.5 * omega1 * kron(pauli::y(), pauli::identity())));
}

ScenarioResult single_qubit_scenario(double theta, double phi, const PulseSpec& pulse, int grid_points,
                                     const ToleranceConfig& tol) {
  pulse.validate();
  return run_pipeline(single_qubit_drive(pulse.omega1), single_qubit_state(theta, phi).projector(), pulse.tau_c,
                      pulse.duration(), grid_points, tol);
}

ScenarioResult two_qubit_scenario(const PulseSpec& pulse, int grid_points, const ToleranceConfig& tol) {
  pulse.validate();
  return run_pipeline(two_qubit_drive(pulse.omega1), bell_state().projector(), pulse.tau_c, pulse.duration(),
                      grid_points, tol);
}

ScenarioResult custom_scenario(const HermitianOperator& h, const DensityMatrix& rho0, double tau_c, double t_max,
                               int grid_points, const ToleranceConfig& tol) {
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be > 0");
  if (!(std::isfinite(tau_c) && tau_c >= 0.0)) throw InvalidArgument("tau_c must be >= 0");
  return run_pipeline(h, rho0, tau_c, t_max, grid_points, tol);
}

}  // namespace frqme
