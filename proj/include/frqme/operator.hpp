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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace frqme {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Base for density-matrix / operator invariant violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TraceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NegativeEigenvalueError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A propagated state drifted outside the tolerances; indicates a numerical
/// quality problem rather than bad user input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

struct ToleranceConfig {
  double herm = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
  double compare = 1e-9;
  /// Relative; the absolute grouping threshold is
  /// degeneracy * (lambda_max - lambda_min + 1).
  double degeneracy = 1e-9;

  /// Throws InvalidArgument unless every tolerance is finite and > 0.
  void validate() const;

  double degeneracy_threshold(double spectral_range) const {
    return degeneracy * (spectral_range + 1.0);
  }
};

// ---------------------------------------------------------------------------
// Matrix types
// ---------------------------------------------------------------------------

/// Dense d x d complex matrix, d >= 1.
class ComplexSquareMatrix {
 public:
  explicit ComplexSquareMatrix(Matrix m);

  static ComplexSquareMatrix identity(Eigen::Index dim);
  static ComplexSquareMatrix zero(Eigen::Index dim);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  friend bool operator==(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  Matrix m_;
};

/// Hermitian operator (drive Hamiltonian or observable), entries in rad/time.
class HermitianOperator {
 public:
  /// Throws NotHermitianError if ||m - m^dagger||_max > tol.herm.
  static HermitianOperator from(const ComplexSquareMatrix& m, const ToleranceConfig& tol = {});
  static HermitianOperator from(const Matrix& m, const ToleranceConfig& tol = {});

  Eigen::Index dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_.matrix(); }
  const ComplexSquareMatrix& square() const { return m_; }

  HermitianOperator scaled(double s) const;

 private:
  explicit HermitianOperator(ComplexSquareMatrix m) : m_(std::move(m)) {}
  ComplexSquareMatrix m_;
};

/// Unit-trace positive-semidefinite Hermitian matrix. Only obtainable through
/// validate_density() or the factory helpers, so every instance satisfies the
/// invariants at the tolerances it was checked with.
class DensityMatrix {
 public:
  Eigen::Index dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_.matrix(); }
  const ComplexSquareMatrix& square() const { return m_; }

  static DensityMatrix maximally_mixed(Eigen::Index dim);

 private:
  explicit DensityMatrix(ComplexSquareMatrix m) : m_(std::move(m)) {}
  ComplexSquareMatrix m_;

  friend DensityMatrix validate_density(const ComplexSquareMatrix&, const ToleranceConfig&);
  friend DensityMatrix repair_density(const Matrix&, const ToleranceConfig&);
};

/// Normalized state vector.
class PureState {
 public:
  /// Throws InvalidArgument if | ||psi||^2 - 1 | > tol.trace.
  static PureState from(Vector amplitudes, const ToleranceConfig& tol = {});
  /// Normalizes a nonzero vector.
  static PureState normalized(const Vector& amplitudes);

  Eigen::Index dim() const { return psi_.size(); }
  const Vector& amplitudes() const { return psi_; }
  DensityMatrix projector() const;

 private:
  explicit PureState(Vector psi) : psi_(std::move(psi)) {}
  Vector psi_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Complex trace(const ComplexSquareMatrix& m);
Complex trace(const Matrix& m);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Half the trace norm of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const Matrix& a, const Matrix& b);

/// Throws NotHermitianError, TraceError or NegativeEigenvalueError.
DensityMatrix validate_density(const ComplexSquareMatrix& m, const ToleranceConfig& tol = {});
DensityMatrix validate_density(const Matrix& m, const ToleranceConfig& tol = {});

/// Validation for states produced by numerical propagation: eigenvalues in
/// [-tol.psd, 0) are clamped to zero and the trace renormalized (with a
/// warning if the clamp is larger than roundoff). Larger violations throw
/// NumericalError.
DensityMatrix repair_density(const Matrix& m, const ToleranceConfig& tol = {});

/// Kronecker product; the left factor is the most significant index.
ComplexSquareMatrix tensor_product(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Smallest eigenvalue of the Hermitian part of m.
double min_hermitian_eigenvalue(const Matrix& m);

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

/// Warning sink used when a state is repaired. Defaults to std::clog.
void set_warning_handler(void (*handler)(const std::string&));
void emit_warning(const std::string& message);

}  // namespace frqme
