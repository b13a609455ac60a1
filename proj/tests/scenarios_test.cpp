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

#include <numbers>

#include "frqme/scenarios.hpp"
#include "frqme/verify.hpp"
#include "test_support.hpp"

using namespace frqme;
using std::numbers::pi;

namespace {

// Reduced state of the second qubit.
Matrix second_qubit_marginal(const Matrix& rho) {
  Matrix out = Matrix::Zero(2, 2);
  for (Eigen::Index a = 0; a < 2; ++a)
    for (Eigen::Index b = 0; b < 2; ++b) out(a, b) = rho(a, b) + rho(2 + a, 2 + b);
  return out;
}

void expect_consistent(const ScenarioResult& r) {
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), r.final_analytic.matrix(), 1e-9);
  ASSERT_GE(r.time_series.size(), 2u);
  EXPECT_EQ(r.time_series.front().t, 0.0);
  EXPECT_NEAR(r.time_series.back().t, r.duration, 1e-12 * std::max(1.0, r.duration));
  for (std::size_t i = 1; i < r.time_series.size(); ++i) {
    EXPECT_GT(r.time_series[i].t, r.time_series[i - 1].t);
    EXPECT_LE(r.time_series[i].trace_distance_to_born, r.time_series[i - 1].trace_distance_to_born + 1e-12);
    EXPECT_LE(r.time_series[i].purity, r.time_series[i - 1].purity + 1e-12);
  }
}

TEST(SingleQubitScenario, GroundStateDecoheresToMaximallyMixed) {
  const auto r = single_qubit_scenario(0.0, 0.0, PulseSpec{40.0, 1.0, 1.0});
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), Matrix(Matrix::Identity(2, 2) / 2.0), 1e-12);
  expect_consistent(r);
}

TEST(SingleQubitScenario, EigenstateIsStationary) {
  const auto r = single_qubit_scenario(pi / 2, pi / 2, PulseSpec{20.0, 1.0, 1.0});
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), r.initial.matrix(), 1e-12);
  for (const auto& s : r.time_series) EXPECT_NEAR(s.purity, 1.0, 1e-12);
}

TEST(SingleQubitScenario, QuarterTurnWithUnitDecay) {
  // kappa = pi/2, omega1 tau_c = 2/pi: the pulse leaves half of the coherence times e^{-1}.
  const auto r = single_qubit_scenario(pi / 2, 0.0, PulseSpec{pi / 2, 1.0, 2.0 / pi});
  Matrix want = Matrix::Zero(2, 2);
  want(0, 0) = 0.5 * (1 - std::exp(-1.0));
  want(1, 1) = 0.5 * (1 + std::exp(-1.0));
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), want, 1e-12);
  expect_consistent(r);
}

TEST(SingleQubitScenario, MatchesClosedForm) {
  for (double kappa : {0.3, 2.0, 7.5}) {
    const auto r = single_qubit_scenario(1.1, 2.3, PulseSpec{kappa, 1.5, 0.4}, 50);
    EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), oracle::single_qubit_closed_form(1.1, 2.3, kappa, 1.5 * 0.4),
                       1e-12);
    expect_consistent(r);
  }
}

TEST(TwoQubitScenario, LongPulseReachesBlockState) {
  const auto r = two_qubit_scenario(PulseSpec{20.0, 1.0, 1.0});
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), oracle::two_qubit_asymptotic(), 1e-8);
  ASSERT_EQ(r.born.probabilities.size(), 2u);
  EXPECT_NEAR(r.born.probabilities[0], 0.5, 1e-15);
  EXPECT_NEAR(r.born.probabilities[1], 0.5, 1e-15);
  expect_consistent(r);
}

TEST(TwoQubitScenario, FinitePulseMatchesOracle) {
  for (double kappa : {0.5, 1.0, 3.0}) {
    const PulseSpec p{kappa, 2.0, 0.3};
    const auto r = two_qubit_scenario(p, 20);
    EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), oracle::two_qubit_pattern(kappa, std::exp(-p.decay_exponent())), 1e-12);
  }
}

TEST(TwoQubitScenario, SecondQubitMarginalStaysMixed) {
  const auto r = two_qubit_scenario(PulseSpec{3.0, 1.0, 0.5});
  const Matrix half = Matrix::Identity(2, 2) / 2.0;
  EXPECT_MATRIX_NEAR(second_qubit_marginal(r.initial.matrix()), half, 1e-15);
  EXPECT_MATRIX_NEAR(second_qubit_marginal(r.final_numeric.matrix()), half, 1e-12);
}

TEST(CustomScenario, SigmaZDephasesPlusState) {
  const auto h = HermitianOperator::from(pauli::z());
  Vector plus(2);
  plus << 1.0, 1.0;
  const auto r = custom_scenario(h, PureState::normalized(plus).projector(), 1.0, 20.0);
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), Matrix(Matrix::Identity(2, 2) / 2.0), 1e-12);
  expect_consistent(r);
}

TEST(CustomScenario, IdentityDriveLeavesStateAlone) {
  std::mt19937_64 rng(61);
  const auto rho0 = frqme::testing::random_density(3, rng);
  const auto r = custom_scenario(HermitianOperator::from(Matrix(Matrix::Identity(3, 3))), rho0, 1.0, 5.0);
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), rho0.matrix(), 1e-13);
  EXPECT_EQ(r.spectrum.group_count(), 1u);
}

TEST(CustomScenario, DegenerateQutritReachesBorn) {
  std::mt19937_64 rng(62);
  const auto h = frqme::testing::hermitian_with_levels({-1.0, -1.0, 1.0}, rng);
  const auto rho0 = frqme::testing::random_density(3, rng);
  const auto r = custom_scenario(h, rho0, 1.0, 15.0);
  EXPECT_MATRIX_NEAR(r.final_numeric.matrix(), r.born.post_state.matrix(), 1e-9);
  expect_consistent(r);
}

TEST(Scenarios, RejectInvalidParameters) {
  EXPECT_THROW(single_qubit_scenario(0, 0, PulseSpec{20, 1, 1}, 1), InvalidArgument);
  EXPECT_THROW(single_qubit_scenario(0, 0, PulseSpec{20, 0, 1}), InvalidArgument);
  EXPECT_THROW(two_qubit_scenario(PulseSpec{-1, 1, 1}), InvalidArgument);
  EXPECT_THROW(two_qubit_scenario(PulseSpec{1, 1, -1}), InvalidArgument);
  EXPECT_THROW(custom_scenario(single_qubit_drive(1.0), DensityMatrix::maximally_mixed(3), 1.0, 1.0), DimensionMismatch);
}

}  // namespace
