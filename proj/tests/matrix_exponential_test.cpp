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

#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "frqme/liouville.hpp"
#include "test_support.hpp"

using namespace frqme;

namespace {

TEST(MatrixExponential, ZeroGivesIdentity) {
  const Superoperator zero(2, Matrix::Zero(4, 4));
  EXPECT_EQ(matrix_exponential(zero, 3.0).matrix(), Matrix(Matrix::Identity(4, 4)));
  EXPECT_EQ(matrix_exponential(Superoperator::identity(2), 0.0).matrix(), Matrix(Matrix::Identity(4, 4)));
}

TEST(MatrixExponential, Diagonal) {
  Vector d(4);
  d << 0, -1, -1, 0;
  const Superoperator m(2, d.asDiagonal());
  Vector want(4);
  want << 1, std::exp(-1.0), std::exp(-1.0), 1;
  EXPECT_MATRIX_NEAR(matrix_exponential(m, 1.0).matrix(), Matrix(want.asDiagonal()), 1e-15);
}

TEST(MatrixExponential, Semigroup) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  for (int n = 0; n < 20; ++n) {
    const Superoperator g(2, 0.5 * frqme::testing::gaussian(4, 4, rng));
    const double t1 = time(rng), t2 = time(rng);
    const Matrix lhs = matrix_exponential(g, t1 + t2).matrix();
    const Matrix rhs = matrix_exponential(g, t1).matrix() * matrix_exponential(g, t2).matrix();
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-10 * std::max(1.0, lhs.cwiseAbs().maxCoeff()));
  }
}

TEST(MatrixExponential, MatchesEigenReferenceImplementation) {
  std::mt19937_64 rng(32);
  for (double scale : {1e-3, 0.3, 2.0, 15.0}) {
    for (Eigen::Index n : {1, 4, 9, 16}) {
      const Matrix a = scale * frqme::testing::gaussian(n, n, rng) / std::sqrt(static_cast<double>(n));
      const Matrix ours = matrix_exponential(a);
      const Matrix ref = a.exp();
      EXPECT_LE(max_abs_diff(ours, ref), 1e-12 * std::max(1.0, ref.cwiseAbs().maxCoeff()))
          << "scale " << scale << " n " << n;
    }
  }
}

TEST(MatrixExponential, StableForLargeDissipativeGenerator) {
  // Long times on a decaying normal generator must stay bounded and accurate.
  std::mt19937_64 rng(33);
  const Matrix u = frqme::testing::random_unitary(9, rng);
  Vector lam(9);
  for (Eigen::Index i = 0; i < 9; ++i) lam(i) = Complex(-0.01 * i * i, 0.7 * i);
  const Matrix g = u * lam.asDiagonal() * u.adjoint();
  const double t = 5000.0;
  Vector expl(9);
  for (Eigen::Index i = 0; i < 9; ++i) expl(i) = std::exp(lam(i) * t);
  const Matrix want = u * expl.asDiagonal() * u.adjoint();
  EXPECT_LE(max_abs_diff(matrix_exponential(Matrix(g * t)), want), 1e-9);
}

TEST(MatrixExponential, RejectsBadInput) {
  Matrix bad = Matrix::Identity(4, 4);
  bad(1, 2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(matrix_exponential(Superoperator(2, bad), 1.0), InvalidArgument);
  EXPECT_THROW(matrix_exponential(Superoperator::identity(2), -0.5), InvalidArgument);
  EXPECT_THROW(Superoperator(2, Matrix::Identity(3, 3)), DimensionMismatch);
}

}  // namespace
