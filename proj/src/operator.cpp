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

#include "frqme/operator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <sstream>

namespace frqme {

namespace {

void default_warning(const std::string& message) { std::clog << "frqme: warning: " << message << '\n'; }

std::atomic<void (*)(const std::string&)> g_warning_handler{&default_warning};

// Clamps below this magnitude are plain roundoff and are not reported.
constexpr double kSilentClamp = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double hermiticity_residual(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

void set_warning_handler(void (*handler)(const std::string&)) {
  g_warning_handler.store(handler ? handler : &default_warning);
}

void emit_warning(const std::string& message) { g_warning_handler.load()(message); }

void ToleranceConfig::validate() const {
  const double all[] = {herm, trace, psd, compare, degeneracy};
  for (double v : all) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw InvalidArgument("tolerances must be finite and strictly positive (got " + fmt(v) + ")");
    }
  }
}

ComplexSquareMatrix::ComplexSquareMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw InvalidArgument("expected a non-empty square matrix, got " + std::to_string(m_.rows()) + "x" +
                          std::to_string(m_.cols()));
  }
}

ComplexSquareMatrix ComplexSquareMatrix::identity(Eigen::Index dim) {
  return ComplexSquareMatrix(Matrix::Identity(dim, dim));
}

ComplexSquareMatrix ComplexSquareMatrix::zero(Eigen::Index dim) {
  return ComplexSquareMatrix(Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::from(const ComplexSquareMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (!m.matrix().allFinite()) throw InvalidArgument("operator has non-finite entries");
  const double r = hermiticity_residual(m.matrix());
  if (r > tol.herm) throw NotHermitianError("operator is not Hermitian (residual " + fmt(r) + ")");
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::from(const Matrix& m, const ToleranceConfig& tol) {
  return from(ComplexSquareMatrix(m), tol);
}

HermitianOperator HermitianOperator::scaled(double s) const {
  return HermitianOperator(ComplexSquareMatrix(m_.matrix() * s));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(ComplexSquareMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

PureState PureState::from(Vector amplitudes, const ToleranceConfig& tol) {
  tol.validate();
  if (amplitudes.size() < 1) throw InvalidArgument("empty state vector");
  const double n2 = amplitudes.squaredNorm();
  if (std::abs(n2 - 1.0) > tol.trace) throw InvalidArgument("state vector is not normalized (norm^2 = " + fmt(n2) + ")");
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(const Vector& amplitudes) {
  const double n = amplitudes.norm();
  if (amplitudes.size() < 1 || !(n > 0.0)) throw InvalidArgument("cannot normalize a zero state vector");
  return PureState(amplitudes / n);
}

DensityMatrix PureState::projector() const {
  // |psi><psi| is exactly Hermitian and PSD up to roundoff in the trace.
  return validate_density(Matrix(psi_ * psi_.adjoint()));
}

Complex trace(const Matrix& m) { return m.trace(); }
Complex trace(const ComplexSquareMatrix& m) { return m.matrix().trace(); }

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("trace_distance: dimension mismatch");
  }
  // Subtract in a canonical order so that D(a, b) == D(b, a) bit for bit.
  const auto less = [](const Complex& x, const Complex& y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  };
  const bool swap = std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size(), less);
  const Matrix diff = swap ? Matrix(b - a) : Matrix(a - b);
  const Matrix herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

double min_hermitian_eigenvalue(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

DensityMatrix validate_density(const ComplexSquareMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  const Matrix& a = m.matrix();
  if (!a.allFinite()) throw NotHermitianError("density matrix has non-finite entries");
  const double r = hermiticity_residual(a);
  if (r > tol.herm) throw NotHermitianError("density matrix is not Hermitian (residual " + fmt(r) + ")");
  const Complex tr = a.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw TraceError("density matrix trace is " + fmt(tr.real()) + (tr.imag() != 0.0 ? "+" + fmt(tr.imag()) + "i" : "") +
                     ", expected 1");
  }
  const double lmin = min_hermitian_eigenvalue(a);
  if (lmin < -tol.psd) {
    throw NegativeEigenvalueError("density matrix has negative eigenvalue " + fmt(lmin));
  }
  return DensityMatrix(m);
}

DensityMatrix validate_density(const Matrix& m, const ToleranceConfig& tol) {
  return validate_density(ComplexSquareMatrix(m), tol);
}

DensityMatrix repair_density(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.rows() < 1 || m.rows() != m.cols()) throw InvalidArgument("repair_density: not a square matrix");
  if (!m.allFinite()) throw NumericalError("propagated state has non-finite entries");
  const double r = hermiticity_residual(m);
  if (r > tol.herm) throw NumericalError("propagated state lost Hermiticity (residual " + fmt(r) + ")");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol.trace) throw NumericalError("propagated state trace drifted to " + fmt(tr.real()));

  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  const double lmin = es.eigenvalues()(0);
  if (lmin >= 0.0) return DensityMatrix(ComplexSquareMatrix(m));
  if (lmin < -tol.psd) throw NumericalError("propagated state has negative eigenvalue " + fmt(lmin));

  if (lmin < -kSilentClamp) emit_warning("clamped negative eigenvalue " + fmt(lmin) + " of propagated state");
  RealVector lam = es.eigenvalues().cwiseMax(0.0);
  lam /= lam.sum();
  const Matrix& v = es.eigenvectors();
  return DensityMatrix(ComplexSquareMatrix(v * lam.cast<Complex>().asDiagonal() * v.adjoint()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexSquareMatrix tensor_product(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  return ComplexSquareMatrix(kron(a.matrix(), b.matrix()));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

namespace pauli {

Matrix identity() { return Matrix::Identity(2, 2); }

Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix y() {
  const Complex i(0.0, 1.0);
  Matrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace pauli

}  // namespace frqme
