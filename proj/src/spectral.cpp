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

#include "frqme/spectral.hpp"

#include <cmath>
#include <limits>

namespace frqme {

std::size_t Spectrum::group_of(Eigen::Index i) const {
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (Eigen::Index idx : groups[k]) {
      if (idx == i) return k;
    }
  }
  throw InvalidArgument("eigen index " + std::to_string(i) + " not in any group");
}

double Spectrum::group_label(std::size_t k) const {
  const auto& g = groups.at(k);
  double sum = 0.0;
  for (Eigen::Index i : g) sum += eigenvalues(i);
  return sum / static_cast<double>(g.size());
}

Matrix Spectrum::group_projector(std::size_t k) const {
  const auto& g = groups.at(k);
  Matrix basis(dim(), static_cast<Eigen::Index>(g.size()));
  for (std::size_t c = 0; c < g.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = eigenvectors.col(g[c]);
  return basis * basis.adjoint();
}

std::optional<double> Spectrum::min_group_gap() const {
  if (groups.size() < 2) return std::nullopt;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < groups.size(); ++k) {
    gap = std::min(gap, eigenvalues(groups[k].front()) - eigenvalues(groups[k - 1].back()));
  }
  return gap;
}

Spectrum eigendecompose(const HermitianOperator& h, const ToleranceConfig& tol) {
  tol.validate();
  // Exact symmetrization so the solver sees a Hermitian matrix.
  const Matrix herm = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");

  Spectrum s;
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = es.eigenvectors();

  const Eigen::Index d = s.eigenvalues.size();
  const double threshold = tol.degeneracy_threshold(s.eigenvalues(d - 1) - s.eigenvalues(0));
  s.groups.push_back({0});
  for (Eigen::Index i = 1; i < d; ++i) {
    if (s.eigenvalues(i) - s.eigenvalues(i - 1) > threshold) s.groups.emplace_back();
    s.groups.back().push_back(i);
  }
  return s;
}

Spectrum eigendecompose(const Matrix& h, const ToleranceConfig& tol) {
  return eigendecompose(HermitianOperator::from(h, tol), tol);
}

EigenbasisState to_eigenbasis(const Matrix& rho, const Spectrum& s) {
  if (rho.rows() != s.dim() || rho.cols() != s.dim()) throw DimensionMismatch("to_eigenbasis: dimension mismatch");
  return {s.eigenvectors.adjoint() * rho * s.eigenvectors};
}

EigenbasisState to_eigenbasis(const DensityMatrix& rho, const Spectrum& s) { return to_eigenbasis(rho.matrix(), s); }

Matrix from_eigenbasis(const EigenbasisState& a, const Spectrum& s) {
  if (a.coefficients.rows() != s.dim() || a.coefficients.cols() != s.dim()) {
    throw DimensionMismatch("from_eigenbasis: dimension mismatch");
  }
  return s.eigenvectors * a.coefficients * s.eigenvectors.adjoint();
}

EigenbasisState analytic_evolve(const EigenbasisState& a0, const Spectrum& s, double tau_c, double t) {
  if (!(t >= 0.0) || !(tau_c >= 0.0)) throw InvalidArgument("analytic_evolve: t and tau_c must be >= 0");
  const Eigen::Index d = s.dim();
  if (a0.coefficients.rows() != d || a0.coefficients.cols() != d) {
    throw DimensionMismatch("analytic_evolve: dimension mismatch");
  }
  std::vector<std::size_t> group(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < s.groups.size(); ++k)
    for (Eigen::Index i : s.groups[k]) group[static_cast<std::size_t>(i)] = k;

  EigenbasisState out = a0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (group[static_cast<std::size_t>(i)] == group[static_cast<std::size_t>(j)]) continue;
      const double dl = s.eigenvalues(i) - s.eigenvalues(j);
      out.coefficients(i, j) *= std::exp(Complex(-tau_c * dl * dl * t, -dl * t));
    }
  }
  return out;
}

DensityMatrix asymptotic_state(const DensityMatrix& rho0, const Spectrum& s, const ToleranceConfig& tol) {
  if (rho0.dim() != s.dim()) throw DimensionMismatch("asymptotic_state: dimension mismatch");
  Matrix out = Matrix::Zero(s.dim(), s.dim());
  for (std::size_t k = 0; k < s.group_count(); ++k) {
    const Matrix p = s.group_projector(k);
    out += p * rho0.matrix() * p;
  }
  return validate_density(out, tol);
}

std::optional<double> convergence_time(const Spectrum& s, double tau_c, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("convergence_time: eps must lie in (0, 1)");
  if (!(std::isfinite(tau_c) && tau_c >= 0.0)) throw InvalidArgument("convergence_time: tau_c must be >= 0");
  const auto gap = s.min_group_gap();
  if (!gap || tau_c == 0.0) return std::nullopt;
  return -std::log(eps) / (tau_c * *gap * *gap);
}

double max_cross_group_coherence(const Matrix& rho, const Spectrum& s) {
  if (rho.rows() != s.dim()) throw DimensionMismatch("max_cross_group_coherence: dimension mismatch");
  std::vector<Matrix> proj;
  proj.reserve(s.group_count());
  for (std::size_t k = 0; k < s.group_count(); ++k) proj.push_back(s.group_projector(k));
  double best = 0.0;
  for (std::size_t j = 0; j < proj.size(); ++j)
    for (std::size_t k = 0; k < proj.size(); ++k)
      if (j != k) best = std::max(best, (proj[j] * rho * proj[k]).norm());
  return best;
}

}  // namespace frqme
