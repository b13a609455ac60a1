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

namespace frqme {

// All superoperators here use column stacking: entry (i, j) of a d x d
// matrix lives at index j * d + i of its vectorization, and
// vec(A X B) = (B^T kron A) vec(X).

/// d^2 x d^2 linear map on vectorized d x d matrices.
class Superoperator {
 public:
  Superoperator(Eigen::Index hdim, Matrix m);

  static Superoperator identity(Eigen::Index hdim);

  Eigen::Index hdim() const { return hdim_; }
  const Matrix& matrix() const { return m_; }

  Vector apply(const Vector& v) const { return m_ * v; }

 private:
  Eigen::Index hdim_;
  Matrix m_;
};

/// Self-adjoint double-commutator dissipator -strength * [A, [A, rho]].
struct Dissipator {
  HermitianOperator coupling;
  double strength = 0.0;
};

/// drho/dt = -i[H, rho] - tau_c [H, [H, rho]] - sum_k gamma_k [A_k, [A_k, rho]].
struct GeneratorSpec {
  HermitianOperator drive;
  double tau_c = 0.0;
  std::vector<Dissipator> extra_dissipators;

  /// Throws DimensionMismatch / InvalidArgument on inconsistent input.
  void validate() const;
};

Vector vectorize(const Matrix& m);
Vector vectorize(const DensityMatrix& rho);
Matrix devectorize(const Vector& v);

/// L1 = I kron H - H^T kron I, so L1 vec(rho) = vec(H rho - rho H).
Superoperator commutator_superop(const HermitianOperator& h);

/// L2 = L1 * L1, the superoperator of rho -> [H, [H, rho]].
Superoperator double_commutator_superop(const HermitianOperator& h);

/// Gamma = -i L1(drive) - tau_c L2(drive) - sum_k gamma_k L2(A_k).
Superoperator build_generator(const GeneratorSpec& spec);

/// exp(m * t) by scaling and squaring around a diagonal Pade core.
/// Throws InvalidArgument for t < 0 or non-finite entries.
Superoperator matrix_exponential(const Superoperator& m, double t);
Matrix matrix_exponential(const Matrix& a);

/// devectorize(exp(Gamma t) vectorize(rho0)), validated as a density matrix.
DensityMatrix propagate(const GeneratorSpec& spec, const DensityMatrix& rho0, double t,
                        const ToleranceConfig& tol = {});

/// Same as propagate() for a prebuilt propagator exp(Gamma t).
DensityMatrix apply_propagator(const Superoperator& propagator, const DensityMatrix& rho,
                               const ToleranceConfig& tol = {});

/// Choi matrix C = sum_ij |i><j| kron Phi(|i><j|) of the map represented by
/// the superoperator. Positive semidefinite iff the map is completely positive.
Matrix choi_matrix(const Superoperator& s);

/// max_k | sum_a S[a*d + a, k] - vec(I)_k |; zero iff the map preserves trace.
double trace_preservation_residual(const Superoperator& s);

}  // namespace frqme
