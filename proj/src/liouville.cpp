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

#include "frqme/liouville.hpp"

#include <cmath>

namespace frqme {

Superoperator::Superoperator(Eigen::Index hdim, Matrix m) : hdim_(hdim), m_(std::move(m)) {
  if (hdim_ < 1 || m_.rows() != hdim_ * hdim_ || m_.cols() != hdim_ * hdim_) {
    throw DimensionMismatch("superoperator for d=" + std::to_string(hdim_) + " must be " +
                            std::to_string(hdim_ * hdim_) + "x" + std::to_string(hdim_ * hdim_));
  }
}

Superoperator Superoperator::identity(Eigen::Index hdim) {
  return Superoperator(hdim, Matrix::Identity(hdim * hdim, hdim * hdim));
}

void GeneratorSpec::validate() const {
  if (!(std::isfinite(tau_c) && tau_c >= 0.0)) throw InvalidArgument("tau_c must be finite and >= 0");
  for (const auto& d : extra_dissipators) {
    if (d.coupling.dim() != drive.dim()) {
      throw DimensionMismatch("dissipator dimension " + std::to_string(d.coupling.dim()) +
                              " does not match drive dimension " + std::to_string(drive.dim()));
    }
    if (!(std::isfinite(d.strength) && d.strength >= 0.0)) {
      throw InvalidArgument("dissipator strength must be finite and >= 0");
    }
  }
}

Vector vectorize(const Matrix& m) {
  // Eigen storage is column-major, which is exactly column stacking.
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Vector vectorize(const DensityMatrix& rho) { return vectorize(rho.matrix()); }

Matrix devectorize(const Vector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size() || d < 1) throw DimensionMismatch("vector length is not a perfect square");
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Superoperator commutator_superop(const HermitianOperator& h) {
  const Eigen::Index d = h.dim();
  const Matrix id = Matrix::Identity(d, d);
  return Superoperator(d, kron(id, h.matrix()) - kron(h.matrix().transpose(), id));
}

Superoperator double_commutator_superop(const HermitianOperator& h) {
  const Superoperator l1 = commutator_superop(h);
  return Superoperator(h.dim(), l1.matrix() * l1.matrix());
}

Superoperator build_generator(const GeneratorSpec& spec) {
  spec.validate();
  const Complex i(0.0, 1.0);
  Matrix gamma = -i * commutator_superop(spec.drive).matrix();
  if (spec.tau_c != 0.0) gamma -= spec.tau_c * double_commutator_superop(spec.drive).matrix();
  for (const auto& d : spec.extra_dissipators) {
    if (d.strength != 0.0) gamma -= d.strength * double_commutator_superop(d.coupling).matrix();
  }
  return Superoperator(spec.drive.dim(), std::move(gamma));
}

Superoperator matrix_exponential(const Superoperator& m, double t) {
  if (!(std::isfinite(t) && t >= 0.0)) throw InvalidArgument("matrix_exponential: t must be finite and >= 0");
  if (!m.matrix().allFinite()) throw InvalidArgument("matrix_exponential: non-finite entries");
  return Superoperator(m.hdim(), matrix_exponential(Matrix(m.matrix() * t)));
}

DensityMatrix apply_propagator(const Superoperator& propagator, const DensityMatrix& rho,
                               const ToleranceConfig& tol) {
  if (propagator.hdim() != rho.dim()) throw DimensionMismatch("propagator and state dimensions differ");
  return repair_density(devectorize(propagator.apply(vectorize(rho))), tol);
}

DensityMatrix propagate(const GeneratorSpec& spec, const DensityMatrix& rho0, double t,
                        const ToleranceConfig& tol) {
  if (spec.drive.dim() != rho0.dim()) throw DimensionMismatch("drive and state dimensions differ");
  const Superoperator gamma = build_generator(spec);
  return apply_propagator(matrix_exponential(gamma, t), rho0, tol);
}

Matrix choi_matrix(const Superoperator& s) {
  const Eigen::Index d = s.hdim();
  const Matrix& m = s.matrix();
  Matrix c(d * d, d * d);
  // C[i*d + a, j*d + b] = Phi(|i><j|)_{ab} = S[b*d + a, j*d + i].
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) c(i * d + a, j * d + b) = m(b * d + a, j * d + i);
  return c;
}

double trace_preservation_residual(const Superoperator& s) {
  const Eigen::Index d = s.hdim();
  const Vector vec_id = vectorize(Matrix(Matrix::Identity(d, d)));
  const Eigen::RowVectorXcd row = vec_id.adjoint() * s.matrix();
  return (row - vec_id.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace frqme
