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

#include <array>
#include <cmath>

#include "frqme/liouville.hpp"

namespace frqme {

namespace {

// Scaled argument norm bound. With ||A||_1 <= 0.5 the [8/8] Pade remainder
// is far below double-precision unit roundoff.
constexpr double kScaledNormBound = 0.5;
constexpr int kPadeDegree = 8;

// c_k = (2q - k)! q! / ((2q)! k! (q - k)!), c_0 = 1.
constexpr std::array<double, kPadeDegree + 1> pade_coefficients() {
  std::array<double, kPadeDegree + 1> c{};
  c[0] = 1.0;
  for (int k = 1; k <= kPadeDegree; ++k) {
    c[k] = c[k - 1] * static_cast<double>(kPadeDegree - k + 1) /
           (static_cast<double>(k) * static_cast<double>(2 * kPadeDegree - k + 1));
  }
  return c;
}

double one_norm(const Matrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

Matrix matrix_exponential(const Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("matrix_exponential: matrix must be square");
  if (!a.allFinite()) throw InvalidArgument("matrix_exponential: non-finite entries");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  const double norm = one_norm(a);
  int squarings = 0;
  if (norm > kScaledNormBound) squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormBound)));
  const Matrix scaled = a / std::ldexp(1.0, squarings);

  static constexpr auto c = pade_coefficients();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = scaled * scaled;

  // Even powers feed V, odd powers feed U; N = V + U, D = V - U.
  Matrix even = c[0] * id;
  Matrix odd_inner = c[1] * id;
  Matrix power = id;
  for (int k = 2; k <= kPadeDegree; k += 2) {
    power = power * a2;
    even += c[k] * power;
    if (k + 1 <= kPadeDegree) odd_inner += c[k + 1] * power;
  }
  const Matrix odd = scaled * odd_inner;

  Matrix result = (even - odd).partialPivLu().solve(even + odd);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace frqme
