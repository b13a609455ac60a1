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

#include <optional>
#include <vector>

#include "frqme/operator.hpp"

namespace frqme {

/// Eigendecomposition of a Hermitian operator with degeneracy grouping.
struct Spectrum {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, unitary
  /// Partition of {0..d-1}; each group is a run of consecutive indices whose
  /// neighbouring eigenvalue gaps are within the degeneracy threshold.
  std::vector<std::vector<Eigen::Index>> groups;

  Eigen::Index dim() const { return eigenvalues.size(); }
  std::size_t group_count() const { return groups.size(); }

  /// Index of the group containing eigenvector i.
  std::size_t group_of(Eigen::Index i) const;
  /// Mean eigenvalue of group k.
  double group_label(std::size_t k) const;
  /// P_k = sum_{i in group k} |phi_i><phi_i|.
  Matrix group_projector(std::size_t k) const;
  /// Smallest eigenvalue gap between adjacent groups, or nullopt with one group.
  std::optional<double> min_group_gap() const;
};

/// The density matrix expressed in the eigenbasis: a_ij = <phi_i|rho|phi_j>.
struct EigenbasisState {
  Matrix coefficients;
};

/// Throws NotHermitianError for non-Hermitian input.
Spectrum eigendecompose(const HermitianOperator& h, const ToleranceConfig& tol = {});
Spectrum eigendecompose(const Matrix& h, const ToleranceConfig& tol = {});

EigenbasisState to_eigenbasis(const DensityMatrix& rho, const Spectrum& s);
EigenbasisState to_eigenbasis(const Matrix& rho, const Spectrum& s);
Matrix from_eigenbasis(const EigenbasisState& a, const Spectrum& s);

/// a_ij(t) = a_ij(0) exp(-i dl t) exp(-tau_c dl^2 t), dl = lambda_i - lambda_j.
/// Coefficients inside one degeneracy group are left untouched.
EigenbasisState analytic_evolve(const EigenbasisState& a0, const Spectrum& s, double tau_c, double t);

/// sum_k P_k rho0 P_k: inter-group coherences removed, intra-group ones kept.
DensityMatrix asymptotic_state(const DensityMatrix& rho0, const Spectrum& s, const ToleranceConfig& tol = {});

/// Smallest t with exp(-tau_c gap_min^2 t) <= eps. nullopt means the
/// coherences never decay below eps (single group, or tau_c == 0).
std::optional<double> convergence_time(const Spectrum& s, double tau_c, double eps);

/// Largest Frobenius norm ||P_j rho P_k|| over group pairs j != k.
/// Equals the largest |a_ij| across groups for non-degenerate spectra.
double max_cross_group_coherence(const Matrix& rho, const Spectrum& s);

}  // namespace frqme
