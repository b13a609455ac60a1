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

#include "frqme/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "frqme/born.hpp"
#include "frqme/liouville.hpp"
#include "frqme/scenarios.hpp"
#include "frqme/spectral.hpp"

namespace frqme {

namespace oracle {

namespace {

const Complex kI(0.0, 1.0);

// Evolves |psi><psi| coefficient-wise in an explicitly supplied orthonormal
// eigenbasis: a_ij(t) = c_i c_j^* exp(-i dl t) exp(-tau_c dl^2 t).
Matrix evolve_in_basis(const std::vector<Vector>& basis, const std::vector<double>& lambda, const Vector& psi,
                       double tau_c, double t) {
  const Eigen::Index d = psi.size();
  std::vector<Complex> c;
  for (const auto& phi : basis) c.push_back(phi.dot(psi));  // <phi|psi>
  Matrix rho = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double dl = lambda[i] - lambda[j];
      const Complex a = c[i] * std::conj(c[j]) * std::exp(Complex(-tau_c * dl * dl * t, -dl * t));
      rho += a * basis[i] * basis[j].adjoint();
    }
  }
  return rho;
}

}  // namespace

Matrix single_qubit_eigenbasis(double theta, double phi, double kappa, double omega1, double tau_c) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector phi1(2), phi2(2), psi(2);
  phi1 << r, kI * r;   // +omega1/2
  phi2 << r, -kI * r;  // -omega1/2
  psi << std::cos(theta / 2), std::exp(kI * phi) * std::sin(theta / 2);
  return evolve_in_basis({phi1, phi2}, {omega1 / 2, -omega1 / 2}, psi, tau_c, kappa / omega1);
}

Matrix single_qubit_closed_form(double theta, double phi, double kappa, double omega1_tau_c) {
  const double decay = std::exp(-omega1_tau_c * kappa);
  const double a = std::sin(theta) * std::sin(kappa) * std::cos(phi) - std::cos(kappa) * std::cos(theta);
  const double b = std::cos(kappa) * std::cos(phi) * std::sin(theta) + std::cos(theta) * std::sin(kappa);
  const double ss = std::sin(phi) * std::sin(theta);
  Matrix m(2, 2);
  m << 1 - decay * a, -kI * ss + decay * b, kI * ss + decay * b, 1 + decay * a;
  return 0.5 * m;
}

Matrix single_qubit_asymptotic(double theta, double phi) {
  const double ss = std::sin(theta) * std::sin(phi);
  Matrix m(2, 2);
  m << 1, -kI * ss, kI * ss, 1;
  return 0.5 * m;
}

Matrix two_qubit_eigenbasis(double kappa, double omega1, double tau_c) {
  const double r = 1.0 / std::sqrt(2.0);
  // Basis order |00>, |01>, |10>, |11>.
  Vector p1(4), p2(4), p3(4), p4(4), psi(4);
  p1 << 0, r, 0, -kI * r;  // (|01> - i|11>)/sqrt2, -omega1/2
  p2 << r, 0, -kI * r, 0;  // (|00> - i|10>)/sqrt2, -omega1/2
  p3 << 0, r, 0, kI * r;   // (|01> + i|11>)/sqrt2, +omega1/2
  p4 << r, 0, kI * r, 0;   // (|00> + i|10>)/sqrt2, +omega1/2
  psi << r, 0, 0, r;
  const double h = omega1 / 2;
  return evolve_in_basis({p1, p2, p3, p4}, {-h, -h, h, h}, psi, tau_c, kappa / omega1);
}

Matrix two_qubit_pattern(double kappa, double decay) {
  const double dc = decay * std::cos(kappa);
  const double ds = decay * std::sin(kappa);
  Matrix m(4, 4);
  m << 1 + dc, -ds, ds, 1 + dc,
       -ds, 1 - dc, -1 + dc, -ds,
       ds, -1 + dc, 1 - dc, ds,
       1 + dc, -ds, ds, 1 + dc;
  return 0.25 * m;
}

Matrix two_qubit_asymptotic() {
  Matrix m(4, 4);
  m << 1, 0, 0, 1,
       0, 1, -1, 0,
       0, -1, 1, 0,
       1, 0, 0, 1;
  return 0.25 * m;
}

}  // namespace oracle

namespace {

using std::numbers::pi;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 0x5eed'f00d'2026ULL;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Tracks the worst value of a metric against a fixed bound.
struct Bound {
  const char* what;
  double limit;
  double worst = 0.0;
  bool upper = true;  // metric must stay <= limit (else >= limit)

  void see(double v) {
    if (upper) worst = std::max(worst, v);
    else worst = (worst == 0.0 && count == 0) ? v : std::min(worst, v);
    ++count;
  }
  bool ok() const { return count > 0 && (upper ? worst <= limit : worst >= limit); }
  std::string text() const { return std::string(what) + " " + sci(worst) + (upper ? " <= " : " >= ") + sci(limit); }

  int count = 0;
};

struct Check {
  bool passed = true;
  std::string detail;

  void add(const Bound& b) {
    passed = passed && b.ok();
    if (!detail.empty()) detail += "; ";
    detail += b.text();
  }
  void note(bool ok, const std::string& text) {
    passed = passed && ok;
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
  void runtime(Clock::time_point start, double limit_seconds) {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    note(secs < limit_seconds, std::string("runtime ") + (secs < limit_seconds ? "<" : ">=") + " " +
                                   std::to_string(static_cast<int>(limit_seconds)) + " s");
  }
};

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

Matrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(d, d, rng));
  return qr.householderQ() * Matrix::Identity(d, d);
}

HermitianOperator random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(d, d, rng);
  return HermitianOperator::from(Matrix(0.5 * (g + g.adjoint())));
}

DensityMatrix random_density(Eigen::Index d, std::mt19937_64& rng, const ToleranceConfig& tol) {
  std::uniform_int_distribution<Eigen::Index> rank(1, d);
  const Matrix g = gaussian_matrix(d, rank(rng), rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(Matrix(0.5 * (rho + rho.adjoint())), tol);
}

// Hermitian H with controlled level spacing; with `degenerate` some levels
// are duplicated exactly before rotating into a random basis.
HermitianOperator random_structured_hermitian(Eigen::Index d, bool degenerate, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> spacing(0.3, 1.0);
  Eigen::Index levels = d;
  if (degenerate) levels = std::uniform_int_distribution<Eigen::Index>(2, std::max<Eigen::Index>(2, d - 1))(rng);
  std::vector<double> level(static_cast<std::size_t>(levels));
  double x = std::uniform_real_distribution<double>(-2.0, -1.0)(rng);
  for (auto& l : level) {
    l = x;
    x += spacing(rng);
  }
  std::vector<double> lam(level);
  std::uniform_int_distribution<std::size_t> pick(0, level.size() - 1);
  while (static_cast<Eigen::Index>(lam.size()) < d) lam.push_back(level[pick(rng)]);
  RealVector diag(d);
  for (Eigen::Index i = 0; i < d; ++i) diag(i) = lam[static_cast<std::size_t>(i)];
  const Matrix u = random_unitary(d, rng);
  const Matrix h = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
  return HermitianOperator::from(Matrix(0.5 * (h + h.adjoint())));
}

GeneratorSpec random_generator(std::mt19937_64& rng) {
  std::uniform_int_distribution<Eigen::Index> dim(2, 4);
  std::uniform_int_distribution<int> extras(0, 2);
  std::uniform_real_distribution<double> tau(0.0, 2.0);
  std::uniform_real_distribution<double> gamma(0.0, 1.0);
  const Eigen::Index d = dim(rng);
  GeneratorSpec spec{random_hermitian(d, rng), tau(rng), {}};
  const int n = extras(rng);
  for (int k = 0; k < n; ++k) spec.extra_dissipators.push_back({random_hermitian(d, rng), gamma(rng)});
  return spec;
}

// ---------------------------------------------------------------------------

CheckResult criterion_single_qubit_asymptotic(const ToleranceConfig& tol) {
  const auto start = Clock::now();
  Check c;
  Bound err{"max |propagate - asymptotic closed form|", 1e-9};
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const double theta = pi * i / 8.0;
      const double phi = 2.0 * pi * j / 9.0;
      const GeneratorSpec spec{single_qubit_drive(1.0), 1.0, {}};
      const auto rho = propagate(spec, single_qubit_state(theta, phi).projector(), 40.0, tol);
      err.see(max_abs_diff(rho.matrix(), oracle::single_qubit_asymptotic(theta, phi)));
    }
  }
  c.add(err);
  c.runtime(start, 1.0);
  return {1, "single-qubit asymptotic state on 9x9 (theta, phi) grid", c.passed, c.detail};
}

CheckResult criterion_single_qubit_finite(const ToleranceConfig& tol) {
  const auto start = Clock::now();
  Check c;
  Bound vs_oracle{"max |propagate - eigenbasis oracle|", 1e-9};
  Bound vs_closed{"max |closed form - eigenbasis oracle|", 1e-9};
  const double values[] = {0.0, pi / 3, pi / 2};
  for (double theta : values) {
    for (double phi : values) {
      for (double kappa : values) {
        const double omega1 = 1.0, tau_c = 1.0;
        const GeneratorSpec spec{single_qubit_drive(omega1), tau_c, {}};
        const auto rho = propagate(spec, single_qubit_state(theta, phi).projector(), kappa / omega1, tol);
        const Matrix expected = oracle::single_qubit_eigenbasis(theta, phi, kappa, omega1, tau_c);
        vs_oracle.see(max_abs_diff(rho.matrix(), expected));
        vs_closed.see(max_abs_diff(oracle::single_qubit_closed_form(theta, phi, kappa, omega1 * tau_c), expected));
      }
    }
  }
  c.add(vs_oracle);
  c.add(vs_closed);
  c.runtime(start, 1.0);
  return {2, "single-qubit finite-time state, (theta, phi, kappa) in {0, pi/3, pi/2}^3", c.passed, c.detail};
}

CheckResult criterion_two_qubit(const ToleranceConfig& tol) {
  const auto start = Clock::now();
  Check c;
  const auto bell = bell_state().projector();

  Bound asym{"omega1*tau_c*kappa=20: max |propagate - asymptotic|", 1e-8};
  {
    const GeneratorSpec spec{two_qubit_drive(1.0), 1.0, {}};
    asym.see(max_abs_diff(propagate(spec, bell, 20.0, tol).matrix(), oracle::two_qubit_asymptotic()));
  }
  c.add(asym);

  Bound finite{"kappa=pi/3: max |propagate - eigenbasis oracle|", 1e-9};
  Bound pattern{"max |pattern(S, C, D=exp(-omega1*tau_c*kappa)) - eigenbasis oracle|", 1e-9};
  {
    const double kappa = pi / 3, omega1 = 1.0, tau_c = 1.0;
    const GeneratorSpec spec{two_qubit_drive(omega1), tau_c, {}};
    const Matrix expected = oracle::two_qubit_eigenbasis(kappa, omega1, tau_c);
    finite.see(max_abs_diff(propagate(spec, bell, kappa / omega1, tol).matrix(), expected));
    pattern.see(max_abs_diff(oracle::two_qubit_pattern(kappa, std::exp(-omega1 * tau_c * kappa)), expected));
  }
  c.add(finite);
  c.add(pattern);
  c.runtime(start, 1.0);
  return {3, "two-qubit asymptotic and finite-time states", c.passed, c.detail};
}

CheckResult criterion_born_equivalence(const ToleranceConfig& tol) {
  const auto start = Clock::now();
  Check c;
  std::mt19937_64 rng(kSeed);
  Bound born_vs_asym{"max |asymptotic - born post_state|", 1e-10};
  Bound prop_vs_asym{"max |propagate(t_conv) - asymptotic|", 1e-8};
  Bound prop_vs_born{"max |propagate(t_conv) - born post_state|", 1e-8};
  const Eigen::Index dims[] = {2, 3, 4, 6};
  std::uniform_real_distribution<double> tau(0.05, 5.0);
  int degenerate_cases = 0;
  for (int n = 0; n < 200; ++n) {
    const Eigen::Index d = dims[n % 4];
    const bool degenerate = d > 2 && (n / 4) % 2 == 1;
    const HermitianOperator h = random_structured_hermitian(d, degenerate, rng);
    const DensityMatrix rho0 =
        (n / 8) % 2 == 0 ? PureState::normalized(gaussian_matrix(d, 1, rng).col(0)).projector()
                         : random_density(d, rng, tol);
    const double tau_c = tau(rng);

    const Spectrum s = eigendecompose(h, tol);
    if (static_cast<Eigen::Index>(s.group_count()) < d) ++degenerate_cases;
    const DensityMatrix asym = asymptotic_state(rho0, s, tol);
    const BornPrediction born = born_predict(rho0, s, tol);
    born_vs_asym.see(max_abs_diff(asym.matrix(), born.post_state.matrix()));

    const auto t_conv = convergence_time(s, tau_c, 1e-14);
    if (!t_conv) throw NumericalError("generated spectrum has a single group");
    const DensityMatrix rho = propagate(GeneratorSpec{h, tau_c, {}}, rho0, *t_conv, tol);
    prop_vs_asym.see(max_abs_diff(rho.matrix(), asym.matrix()));
    prop_vs_born.see(max_abs_diff(rho.matrix(), born.post_state.matrix()));
  }
  c.add(born_vs_asym);
  c.add(prop_vs_asym);
  c.add(prop_vs_born);
  c.note(degenerate_cases > 0, std::to_string(degenerate_cases) + "/200 degenerate instances");
  c.runtime(start, 30.0);
  return {4, "Born equivalence on 200 random instances", c.passed, c.detail};
}

CheckResult criterion_born_probabilities(const ToleranceConfig& tol) {
  Check c;
  Bound single{"max |p(+omega1/2) - (1 + sin(theta) sin(phi))/2|", 1e-12};
  const Spectrum s1 = eigendecompose(single_qubit_drive(1.0), tol);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const double theta = pi * i / 8.0;
      const double phi = 2.0 * pi * j / 9.0;
      const BornPrediction b = born_predict(single_qubit_state(theta, phi).projector(), s1, tol);
      // Groups ascend in eigenvalue; the +omega1/2 group is the second.
      single.see(std::abs(b.probabilities.at(1) - 0.5 * (1.0 + std::sin(theta) * std::sin(phi))));
      single.see(std::abs(b.probabilities.at(0) - 0.5 * (1.0 - std::sin(theta) * std::sin(phi))));
    }
  }
  c.add(single);

  Bound two{"two-qubit max |p_k - 1/2|", 1e-12};
  const Spectrum s2 = eigendecompose(two_qubit_drive(1.0), tol);
  const BornPrediction b2 = born_predict(bell_state().projector(), s2, tol);
  c.note(b2.probabilities.size() == 2, std::to_string(b2.probabilities.size()) + " two-qubit subspaces");
  for (double p : b2.probabilities) two.see(std::abs(p - 0.5));
  c.add(two);
  return {5, "Born probability formulas", c.passed, c.detail};
}

CheckResult criterion_cptp(const ToleranceConfig& /*tol*/) {
  Check c;
  std::mt19937_64 rng(kSeed + 6);
  Bound choi{"min Choi eigenvalue", -1e-9};
  choi.upper = false;
  Bound tp{"trace-preservation residual", 1e-10};
  for (int n = 0; n < 50; ++n) {
    const GeneratorSpec spec = random_generator(rng);
    const Superoperator gamma = build_generator(spec);
    for (double t : {0.1, 1.0, 10.0}) {
      const Superoperator p = matrix_exponential(gamma, t);
      choi.see(min_hermitian_eigenvalue(choi_matrix(p)));
      tp.see(trace_preservation_residual(p));
    }
  }
  c.add(choi);
  c.add(tp);
  return {6, "complete positivity and trace preservation, 50 random generators", c.passed, c.detail};
}

CheckResult criterion_structural(const ToleranceConfig& tol) {
  Check c;
  std::mt19937_64 rng(kSeed + 7);

  Bound l2{"max |L2 - L1*L1|, |L2 - kron form|", 1e-12};
  for (int n = 0; n < 20; ++n) {
    const Eigen::Index d = 2 + n % 3;
    const HermitianOperator h = random_hermitian(d, rng);
    const Matrix l1 = commutator_superop(h).matrix();
    const Matrix l2m = double_commutator_superop(h).matrix();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix h2 = h.matrix() * h.matrix();
    const Matrix kron_form = kron(id, h2) - 2.0 * kron(h.matrix().transpose(), h.matrix()) + kron(h2.transpose(), id);
    l2.see(max_abs_diff(l2m, l1 * l1));
    l2.see(max_abs_diff(l2m, kron_form));
  }
  c.add(l2);

  Bound semi{"semigroup max |rho(t1+t2) - rho(t2; rho(t1))|", 1e-10};
  std::uniform_real_distribution<double> time(0.0, 3.0);
  for (int n = 0; n < 20; ++n) {
    const GeneratorSpec spec = random_generator(rng);
    const DensityMatrix rho0 = random_density(spec.drive.dim(), rng, tol);
    const double t1 = time(rng), t2 = time(rng);
    const auto direct = propagate(spec, rho0, t1 + t2, tol);
    const auto composed = propagate(spec, propagate(spec, rho0, t1, tol), t2, tol);
    semi.see(max_abs_diff(direct.matrix(), composed.matrix()));
  }
  c.add(semi);

  Bound scale{"scaling max |rho(w, tau, t) - rho(s w, tau/s, t/s)|", 1e-10};
  for (int n = 0; n < 6; ++n) {
    const Eigen::Index d = 2 + n % 3;
    const HermitianOperator h = random_hermitian(d, rng);
    const DensityMatrix rho0 = random_density(d, rng, tol);
    const double tau_c = 0.7, t = 2.5;
    const auto base = propagate(GeneratorSpec{h, tau_c, {}}, rho0, t, tol);
    for (double s : {0.1, 3.0, 17.0}) {
      const auto scaled = propagate(GeneratorSpec{h.scaled(s), tau_c / s, {}}, rho0, t / s, tol);
      scale.see(max_abs_diff(base.matrix(), scaled.matrix()));
    }
  }
  c.add(scale);
  return {7, "structural identities (L2 = L1^2, semigroup, scaling)", c.passed, c.detail};
}

CheckResult criterion_purity_and_decay(const ToleranceConfig& tol) {
  Check c;
  Bound purity{"max purity increase between samples", 1e-12};
  Bound slope{"max relative slope error of log coherence", 0.01};
  struct Case {
    double theta, phi, omega1, tau_c, kappa;
  };
  const Case cases[] = {{pi / 3, pi / 5, 1.0, 1.0, 40.0}, {0.0, 0.0, 2.0, 0.5, 40.0}, {2.0, 1.0, 0.5, 3.0, 10.0}};
  for (const auto& k : cases) {
    const auto r = single_qubit_scenario(k.theta, k.phi, PulseSpec{k.kappa, k.omega1, k.tau_c}, 200, tol);
    for (std::size_t i = 1; i < r.time_series.size(); ++i) {
      purity.see(std::max(0.0, r.time_series[i].purity - r.time_series[i - 1].purity));
    }
    double st = 0, sy = 0, stt = 0, sty = 0;
    int n = 0;
    for (const auto& p : r.time_series) {
      if (!(p.max_cross_group_coherence > 1e-12)) continue;
      const double y = std::log(p.max_cross_group_coherence);
      st += p.t;
      sy += y;
      stt += p.t * p.t;
      sty += p.t * y;
      ++n;
    }
    if (n < 3) throw NumericalError("too few coherent samples for a slope fit");
    const double fitted = (n * sty - st * sy) / (n * stt - st * st);
    const double expected = -k.tau_c * k.omega1 * k.omega1;
    slope.see(std::abs(fitted - expected) / std::abs(expected));
  }
  c.add(purity);
  c.add(slope);
  return {8, "purity monotonicity and coherence decay rate", c.passed, c.detail};
}

CheckResult criterion_repeated_measurement(const ToleranceConfig& tol) {
  Check c;
  Bound fixed{"max |second pulse output - first pulse output|", 1e-9};
  const PulseSpec pulse{40.0, 1.0, 1.0};
  for (double theta : {0.0, pi / 4, pi / 2, 2.5}) {
    for (double phi : {0.0, pi / 3, pi}) {
      const GeneratorSpec spec{single_qubit_drive(pulse.omega1), pulse.tau_c, {}};
      const auto once = propagate(spec, single_qubit_state(theta, phi).projector(), pulse.duration(), tol);
      const auto twice = propagate(spec, once, pulse.duration(), tol);
      fixed.see(max_abs_diff(once.matrix(), twice.matrix()));
    }
  }
  {
    const GeneratorSpec spec{two_qubit_drive(pulse.omega1), pulse.tau_c, {}};
    const auto once = propagate(spec, bell_state().projector(), pulse.duration(), tol);
    const auto twice = propagate(spec, once, pulse.duration(), tol);
    fixed.see(max_abs_diff(once.matrix(), twice.matrix()));
  }
  c.add(fixed);
  return {9, "repeated pulse leaves the measured state fixed", c.passed, c.detail};
}

}  // namespace

std::vector<CheckResult> run_acceptance(const ToleranceConfig& tol) {
  using Fn = CheckResult (*)(const ToleranceConfig&);
  const std::pair<int, Fn> checks[] = {
      {1, criterion_single_qubit_asymptotic}, {2, criterion_single_qubit_finite},
      {3, criterion_two_qubit},               {4, criterion_born_equivalence},
      {5, criterion_born_probabilities},      {6, criterion_cptp},
      {7, criterion_structural},              {8, criterion_purity_and_decay},
      {9, criterion_repeated_measurement},
  };
  std::vector<CheckResult> out;
  for (const auto& [id, fn] : checks) {
    try {
      tol.validate();
      out.push_back(fn(tol));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << "\n       " << r.detail << '\n';
  }
  os << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria passed"
                     : std::to_string(failed) + " of " + std::to_string(results.size()) + " criteria failed")
     << '\n';
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace frqme
