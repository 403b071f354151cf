// Copyright 2026 The sjf Authors
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

// Numerical validators for the determinant and Gaussian integral identities
// and for the cocycle and Delta-invariance of the factor of automorphy.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sjf/forms.hpp"
#include "sjf/matrix.hpp"
#include "sjf/real.hpp"

namespace sjf {

struct ValidationReport {
  std::string name;
  std::string params;
  Complex lhs, rhs;
  Real abs_error, rel_error;
  long prec = 0;
  double tolerance = 0;
  bool pass = false;
};

// int_{t > 0} det(t)^(k-(n+1)/2) exp(-tr(t tau)) dt = Gamma_n(k) det(tau)^-k
// for n in {1, 2} and Re(tau) positive definite. The n = 2 integral runs
// over Cholesky coordinates t = L L^T.
ValidationReport check_int_det(int n, const Rational& k, const CMatrix& tau, long prec,
                               double tolerance);

// int_{M_{l,n}(R)} exp(a tr(-S[X] A + R X A)) dX
//   = det(A)^(-l/2) (pi/a)^(nl/2) det(S)^(-n/2) exp(a/4 tr(S^-1[R^T] A))
// for n, l <= 2, S and A positive definite and a > 0 (the integral diverges
// otherwise). The left side is a trapezoidal sum over a box.
ValidationReport check_cool_id(const QMatrix& S, const QMatrix& R, const QMatrix& A,
                               const Rational& a, long prec, double tolerance);

struct GroupPair {
  GroupElement g1, g2;
  JacobiPoint z;
};

// Random integral pairs: Sp_n(Z) words in translations and the symplectic
// form, integral Heisenberg parts, and points with Im(tau) = 1/2 .. 2.
std::vector<GroupPair> random_group_pairs(int n, int l, size_t count, std::uint64_t seed,
                                          long prec);

// max relative error of J(g1 g2, z) against J(g1, g2 z) J(g2, z).
ValidationReport check_cocycle(const Rational& k, const QMatrix& S,
                               const std::vector<GroupPair>& batch, long prec, double tolerance);
// max relative error of Delta(g z) against |J(g, z)|^-2 Delta(z), g = g1 g2.
ValidationReport check_delta_invariance(const Rational& k, const QMatrix& S,
                                        const std::vector<GroupPair>& batch, long prec,
                                        double tolerance);

// The shipped parameter grids, evaluated.
std::vector<ValidationReport> run_int_det_grid(long prec);
std::vector<ValidationReport> run_cool_id_grid(long prec);
std::vector<ValidationReport> run_group_grid(long prec);

std::string report_record(const ValidationReport& r);

}  // namespace sjf
