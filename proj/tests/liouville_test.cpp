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

#include "frqme/liouville.hpp"
#include "frqme/scenarios.hpp"
#include "frqme/verify.hpp"
#include "test_support.hpp"

using namespace frqme;
using frqme::testing::basis_projector;
using frqme::testing::random_density;
using frqme::testing::random_hermitian;
using std::numbers::pi;

namespace {

const Complex I(0.0, 1.0);

GeneratorSpec random_spec(std::mt19937_64& rng, bool with_extras) {
  std::uniform_int_distribution<Eigen::Index> dim(2, 4);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  const Eigen::Index d = dim(rng);
  GeneratorSpec spec{random_hermitian(d, rng), u(rng), {}};
  if (with_extras) {
    const int n = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < n; ++k) spec.extra_dissipators.push_back({random_hermitian(d, rng), 0.5 * u(rng)});
  }
  return spec;
}

TEST(Vectorize, ColumnStacking) {
  const Vector v = vectorize(Matrix(Matrix::Identity(2, 2) / 2.0));
  Vector expected(4);
  expected << 0.5, 0, 0, 0.5;
  EXPECT_EQ(v, expected);

  // Entry (0, 1) lands at index 1 * 2 + 0.
  EXPECT_EQ(vectorize(basis_projector(2, 0, 1)), Vector(Vector::Unit(4, 2)));
}

TEST(Vectorize, RoundTripIsExact) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 20; ++n) {
    const Matrix m = random_density(1 + n % 5, rng).matrix();
    EXPECT_EQ(devectorize(vectorize(m)), m);
  }
  EXPECT_THROW(devectorize(Vector::Zero(3)), DimensionMismatch);
}

TEST(CommutatorSuperop, IdentityCommutesWithEverything) {
  const auto l1 = commutator_superop(HermitianOperator::from(Matrix(Matrix::Identity(3, 3))));
  EXPECT_EQ(l1.matrix().cwiseAbs().maxCoeff(), 0.0);
}

TEST(CommutatorSuperop, SigmaZCoherenceEigenvalue) {
  const auto l1 = commutator_superop(HermitianOperator::from(Matrix(0.5 * pauli::z())));
  const Vector v = vectorize(basis_projector(2, 0, 1));
  EXPECT_MATRIX_NEAR(Matrix(l1.apply(v)), Matrix(v), 1e-15);
}

TEST(CommutatorSuperop, MatchesDirectCommutator) {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 10; ++n) {
    const auto h = random_hermitian(3, rng);
    const auto rho = random_density(3, rng);
    const Matrix direct = h.matrix() * rho.matrix() - rho.matrix() * h.matrix();
    EXPECT_MATRIX_NEAR(devectorize(commutator_superop(h).apply(vectorize(rho))), direct, 1e-13);
  }
}

TEST(CommutatorSuperop, RejectsNonHermitianAtConstruction) {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(commutator_superop(HermitianOperator::from(m)), NotHermitianError);
}

TEST(DoubleCommutatorSuperop, Examples) {
  EXPECT_EQ(double_commutator_superop(HermitianOperator::from(Matrix(Matrix::Identity(2, 2)))).matrix().cwiseAbs().maxCoeff(),
            0.0);
  const auto l2 = double_commutator_superop(HermitianOperator::from(Matrix(0.5 * pauli::z())));
  const Vector v = vectorize(basis_projector(2, 0, 1));
  EXPECT_MATRIX_NEAR(Matrix(l2.apply(v)), Matrix(v), 1e-15);
}

TEST(DoubleCommutatorSuperop, EqualsSquareAndKroneckerForm) {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 10; ++n) {
    const auto h = random_hermitian(4, rng);
    const Matrix l1 = commutator_superop(h).matrix();
    const Matrix l2 = double_commutator_superop(h).matrix();
    EXPECT_MATRIX_NEAR(l2, Matrix(l1 * l1), 1e-12);

    const Matrix id = Matrix::Identity(4, 4);
    const Matrix h2 = h.matrix() * h.matrix();
    const Matrix kron_form =
        kron(id, h2) - 2.0 * kron(h.matrix().transpose(), h.matrix()) + kron(h2.transpose(), id);
    EXPECT_MATRIX_NEAR(l2, kron_form, 1e-12);

    const auto rho = random_density(4, rng);
    const Matrix c = h.matrix() * rho.matrix() - rho.matrix() * h.matrix();
    const Matrix cc = h.matrix() * c - c * h.matrix();
    EXPECT_MATRIX_NEAR(devectorize(double_commutator_superop(h).apply(vectorize(rho))), cc, 1e-12);
  }
}

TEST(BuildGenerator, UnitaryWhenNoDissipation) {
  std::mt19937_64 rng(24);
  const GeneratorSpec spec{random_hermitian(3, rng), 0.0, {}};
  const Matrix g = build_generator(spec).matrix();
  EXPECT_MATRIX_NEAR(Matrix(g + g.adjoint()), Matrix(Matrix::Zero(9, 9)), 1e-14);
}

TEST(BuildGenerator, SingleQubitCoherenceRates) {
  const double omega1 = 1.7, tau_c = 0.3;
  const Matrix g = build_generator(GeneratorSpec{single_qubit_drive(omega1), tau_c, {}}).matrix();
  Eigen::ComplexEigenSolver<Matrix> es(g);
  std::vector<Complex> got(es.eigenvalues().data(), es.eigenvalues().data() + 4);
  std::vector<Complex> want = {0.0, 0.0, Complex(-tau_c * omega1 * omega1, -omega1),
                               Complex(-tau_c * omega1 * omega1, omega1)};
  for (const Complex& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](Complex a, Complex b) { return std::abs(a - w) < std::abs(b - w); });
    EXPECT_LT(std::abs(*it - w), 1e-12);
    got.erase(it);
  }
}

TEST(BuildGenerator, ExtraDissipatorDephasesInItsEigenbasis) {
  const double gamma = 0.4;
  const GeneratorSpec spec{HermitianOperator::from(Matrix(Matrix::Zero(2, 2))), 0.0,
                           {{HermitianOperator::from(pauli::z()), gamma}}};
  const Superoperator g = build_generator(spec);
  // Populations are fixed; the coherence decays at gamma * (1 - (-1))^2.
  EXPECT_MATRIX_NEAR(Matrix(g.apply(vectorize(basis_projector(2, 0, 0)))), Matrix(Matrix::Zero(4, 1)), 0.0);
  const Vector coh = vectorize(basis_projector(2, 0, 1));
  EXPECT_MATRIX_NEAR(Matrix(g.apply(coh)), Matrix(-4.0 * gamma * coh), 1e-15);
}

TEST(BuildGenerator, RejectsInconsistentSpecs) {
  const GeneratorSpec mismatch{single_qubit_drive(1.0), 1.0, {{two_qubit_drive(1.0), 1.0}}};
  EXPECT_THROW(build_generator(mismatch), DimensionMismatch);
  EXPECT_THROW(build_generator(GeneratorSpec{single_qubit_drive(1.0), -1.0, {}}), InvalidArgument);
  EXPECT_THROW(build_generator(GeneratorSpec{single_qubit_drive(1.0), 1.0, {{single_qubit_drive(1.0), -0.1}}}),
               InvalidArgument);
}

TEST(BuildGenerator, TraceFunctionalAnnihilatesGenerator) {
  std::mt19937_64 rng(25);
  for (int n = 0; n < 30; ++n) {
    const GeneratorSpec spec = random_spec(rng, true);
    const Superoperator g = build_generator(spec);
    const Eigen::Index d = spec.drive.dim();
    const Vector vec_id = vectorize(Matrix(Matrix::Identity(d, d)));
    EXPECT_LE((vec_id.adjoint() * g.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Propagate, PiPulseWithoutDissipationFlipsTheQubit) {
  const double omega1 = 2.0;
  const auto zero = PureState::normalized(Vector::Unit(2, 0)).projector();
  const auto rho = propagate(GeneratorSpec{single_qubit_drive(omega1), 0.0, {}}, zero, pi / omega1);
  EXPECT_MATRIX_NEAR(rho.matrix(), basis_projector(2, 1, 1), 1e-14);
}

TEST(Propagate, QuarterTurnFromGroundState) {
  // theta = phi = 0, kappa = pi/2: 1/2 [[1, D], [D, 1]] with D = exp(-omega1 tau_c pi/2).
  const double omega1 = 1.3, tau_c = 0.4, kappa = pi / 2;
  const auto rho = propagate(GeneratorSpec{single_qubit_drive(omega1), tau_c, {}}, single_qubit_state(0, 0).projector(),
                             kappa / omega1);
  const double decay = std::exp(-omega1 * tau_c * kappa);
  Matrix expected(2, 2);
  expected << 0.5, 0.5 * decay, 0.5 * decay, 0.5;
  EXPECT_MATRIX_NEAR(rho.matrix(), expected, 1e-13);
}

TEST(Propagate, TwoQubitLongPulseReachesAsymptoticMatrix) {
  const auto rho = propagate(GeneratorSpec{two_qubit_drive(1.0), 1.0, {}}, bell_state().projector(), 20.0);
  EXPECT_MATRIX_NEAR(rho.matrix(), oracle::two_qubit_asymptotic(), 1e-8);
}

TEST(Propagate, RejectsNegativeTimeAndMismatchedState) {
  const GeneratorSpec spec{single_qubit_drive(1.0), 1.0, {}};
  EXPECT_THROW(propagate(spec, DensityMatrix::maximally_mixed(2), -1.0), InvalidArgument);
  EXPECT_THROW(propagate(spec, DensityMatrix::maximally_mixed(3), 1.0), DimensionMismatch);
}

// --- properties -------------------------------------------------------------

TEST(PropagateProperties, TraceAndHermiticityPreserved) {
  std::mt19937_64 rng(26);
  const ToleranceConfig tol;
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int n = 0; n < 50; ++n) {
    const GeneratorSpec spec = random_spec(rng, true);
    const auto rho = propagate(spec, random_density(spec.drive.dim(), rng), time(rng));
    EXPECT_LT(std::abs(trace(rho.square()) - 1.0), tol.trace);
    EXPECT_LE(max_abs_diff(rho.matrix(), rho.matrix().adjoint()), tol.herm);
  }
}

TEST(PropagateProperties, CompletelyPositive) {
  std::mt19937_64 rng(27);
  for (int n = 0; n < 30; ++n) {
    const Superoperator g = build_generator(random_spec(rng, true));
    for (double t : {0.0, 0.1, 1.0, 10.0}) {
      const Superoperator p = matrix_exponential(g, t);
      EXPECT_GE(min_hermitian_eigenvalue(choi_matrix(p)), -1e-9);
      EXPECT_LE(trace_preservation_residual(p), 1e-10);
    }
  }
}

TEST(PropagateProperties, ChoiOfIdentityIsMaximallyEntangledProjector) {
  const Matrix c = choi_matrix(Superoperator::identity(2));
  Vector omega = Vector::Zero(4);
  omega(0) = omega(3) = 1.0;
  EXPECT_MATRIX_NEAR(c, Matrix(omega * omega.adjoint()), 0.0);
}

TEST(PropagateProperties, Semigroup) {
  std::mt19937_64 rng(28);
  std::uniform_real_distribution<double> time(0.0, 4.0);
  for (int n = 0; n < 30; ++n) {
    const GeneratorSpec spec = random_spec(rng, true);
    const auto rho0 = random_density(spec.drive.dim(), rng);
    const double t1 = time(rng), t2 = time(rng);
    EXPECT_MATRIX_NEAR(propagate(spec, rho0, t1 + t2).matrix(),
                       propagate(spec, propagate(spec, rho0, t1), t2).matrix(), 1e-9);
  }
}

TEST(PropagateProperties, PurityNonIncreasing) {
  std::mt19937_64 rng(29);
  for (int n = 0; n < 20; ++n) {
    const GeneratorSpec spec = random_spec(rng, false);
    const auto rho0 = random_density(spec.drive.dim(), rng);
    double last = purity(rho0);
    for (int k = 1; k <= 20; ++k) {
      const double p = purity(propagate(spec, rho0, 0.25 * k));
      EXPECT_LE(p, last + 1e-9);
      last = p;
    }
  }
}

TEST(PropagateProperties, ScalingInvariance) {
  std::mt19937_64 rng(30);
  for (int n = 0; n < 10; ++n) {
    const auto h = random_hermitian(2 + n % 3, rng);
    const auto rho0 = random_density(h.dim(), rng);
    const double tau_c = 0.6, t = 1.8;
    const auto base = propagate(GeneratorSpec{h, tau_c, {}}, rho0, t);
    for (double s : {0.1, 3.0, 17.0}) {
      EXPECT_MATRIX_NEAR(base.matrix(), propagate(GeneratorSpec{h.scaled(s), tau_c / s, {}}, rho0, t / s).matrix(),
                         1e-9);
    }
  }
}

}  // namespace
