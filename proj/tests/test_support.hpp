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

#include <random>

#include <gtest/gtest.h>

#include "frqme/operator.hpp"

namespace frqme::testing {

inline Matrix gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

inline Matrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(d, d, rng));
  return qr.householderQ() * Matrix::Identity(d, d);
}

inline Matrix random_hermitian_matrix(Eigen::Index d, std::mt19937_64& rng) {
  const Matrix g = gaussian(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline HermitianOperator random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  return HermitianOperator::from(random_hermitian_matrix(d, rng));
}

inline DensityMatrix random_density(Eigen::Index d, std::mt19937_64& rng) {
  std::uniform_int_distribution<Eigen::Index> rank(1, d);
  const Matrix g = gaussian(d, rank(rng), rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(Matrix(0.5 * (rho + rho.adjoint())));
}

/// H = U diag(levels) U^dagger.
inline HermitianOperator hermitian_with_levels(const std::vector<double>& levels, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(levels.size());
  RealVector lam(d);
  for (Eigen::Index i = 0; i < d; ++i) lam(i) = levels[static_cast<std::size_t>(i)];
  const Matrix u = random_unitary(d, rng);
  const Matrix h = u * lam.cast<Complex>().asDiagonal() * u.adjoint();
  return HermitianOperator::from(Matrix(0.5 * (h + h.adjoint())));
}

inline Matrix basis_projector(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace frqme::testing

#define EXPECT_MATRIX_NEAR(a, b, tol) EXPECT_LE(::frqme::max_abs_diff((a), (b)), (tol))
