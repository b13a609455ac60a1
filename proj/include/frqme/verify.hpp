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

#include <iosfwd>
#include <string>
#include <vector>

#include "frqme/operator.hpp"

namespace frqme {

/// Closed-form and brute-force reference states for the worked qubit
/// examples. None of these touch the eigensolver or the matrix exponential:
/// eigenvectors are written out by hand and evolved coefficient by
/// coefficient.
namespace oracle {

/// Single qubit, drive omega1 sigma_y / 2, initial cos(theta/2)|0> +
/// e^{i phi} sin(theta/2)|1>, evolved for kappa / omega1 in the hand-written
/// eigenbasis (|0> +- i|1>)/sqrt(2).
Matrix single_qubit_eigenbasis(double theta, double phi, double kappa, double omega1, double tau_c);

/// 1/2 [[1 - D a, -i sin(phi) sin(theta) + D b], [c.c., 1 + D a]] with
/// D = exp(-omega1 tau_c kappa),
/// a = sin(theta) sin(kappa) cos(phi) - cos(kappa) cos(theta),
/// b = cos(kappa) cos(phi) sin(theta) + cos(theta) sin(kappa).
Matrix single_qubit_closed_form(double theta, double phi, double kappa, double omega1_tau_c);

/// 1/2 [[1, -i sin(theta) sin(phi)], [i sin(theta) sin(phi), 1]].
Matrix single_qubit_asymptotic(double theta, double phi);

/// Bell state under omega1 (sigma_y kron I) / 2 for kappa / omega1, evolved in
/// the hand-written four-vector eigenbasis.
Matrix two_qubit_eigenbasis(double kappa, double omega1, double tau_c);

/// 1/4 matrix with entries 1 +- D C, +-D S, -1 + D C, arranged as the
/// finite-time two-qubit state; `decay` is the factor D.
Matrix two_qubit_pattern(double kappa, double decay);

/// 1/4 [[1,0,0,1],[0,1,-1,0],[0,-1,1,0],[1,0,0,1]].
Matrix two_qubit_asymptotic();

}  // namespace oracle

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Runs every acceptance criterion. Thresholds are fixed; `tol` only feeds
/// the library's own validation (a broken `tol` makes every check fail).
std::vector<CheckResult> run_acceptance(const ToleranceConfig& tol = {});

/// One "[PASS]"/"[FAIL]" line per check, then a summary line. Output carries
/// no timings, so repeated runs print identical bytes.
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace frqme
