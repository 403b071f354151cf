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

// Symbolic matrix calculus for det(y)^alpha and the holomorphic projection.
//
// Symmetric n x n matrices are encoded by n(n+1)/2 symbols x_ab, a <= b, in
// row-major order (x11, x12, ..., x1n, x22, ...). The derivative symbols d_ab
// of an operator polynomial R stand for the weighted derivatives
// D_ab = (1/2)(1 + delta_ab) d/dy_ab, so that on the inverse u = y^-1
//   D_ab det(y)^alpha = alpha det(y)^alpha u_ab,
//   D_ab u_cd = -(u_ca u_bd + u_cb u_ad) / 2.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sjf/forms.hpp"
#include "sjf/matrix.hpp"
#include "sjf/poly.hpp"

namespace sjf {

int sym_count(int n);
int sym_index(int n, int a, int b);  // 0-based, either order
std::vector<std::string> sym_names(const std::string& base, int n);
// Values of the symbols at a symmetric matrix.
std::vector<Rational> sym_values(const QMatrix& m);

// det and adjugate of the symbolic symmetric matrix [x_ab], in a ring of
// `nvars` variables whose first sym_count(n) are the x_ab.
Poly symmetric_det(int n, int nvars);
std::vector<Poly> symmetric_adjugate(int n, int nvars);  // indexed by sym_index
// det(x)^e P(x^-1) as a polynomial; raises kDomain when some monomial of P
// has degree above e.
Poly det_power_times_inverse(const Poly& P, int n, int e);
// R(-x): odd-degree terms negated.
Poly negate_arguments(const Poly& R);

// One weighted derivative on det(y)^alpha P(u, alpha); P lives in the ring of
// sym_count(n) u-symbols followed by alpha. Returns P' with
// D_ab[det^alpha P] = det^alpha P'.
Poly weighted_derivative_u(const Poly& P, int n, int a, int b);
// P(u, alpha) with R(d)[det(y)^alpha] = det(y)^alpha P(y^-1, alpha).
Poly apply_operator(const Poly& R, int n);

// R(d)[det(y)^alpha] at y = h equals coefficient * det(h)^alpha. No sign is
// applied; pass negate_arguments(R) for R(-d).
struct DiffResult {
  Rational coefficient;
  Rational det_exponent;
};
DiffResult matrix_diff_apply(const Poly& R, const Rational& alpha, const QMatrix& h);

// Independent oracle in y coordinates: tracks sum_j det(y)^(alpha-j) P_j(y)
// using D_ab det^beta = beta det^(beta-1) adj(y)_ab and the weighted partials
// of the entries; returns the coefficient of det(h)^alpha.
Rational brute_force_diff_apply(const Poly& R, const Rational& alpha, const QMatrix& h);

// Nearly holomorphic expansion
//   f = sum P_{t,r} e(tr(t tau)/lambda) e(tr(r^T w)).
// General form: P_{t,r} = p_{t,r}(U) with U = (pi y / lambda)^-1, total degree
// at most D. Det form: P_{t,r} = det(Y)^-m Q_{t,r}(Y) with Y = pi y / lambda,
// and D = m n. Both polynomials live in sym_count(n) symmetric symbols.
class NearlyHolExpansion {
 public:
  NearlyHolExpansion() = default;
  NearlyHolExpansion(int n, Rational k, QMatrix S, long lambda, Rational cap, int D);
  static NearlyHolExpansion det_form(int n, Rational k, QMatrix S, long lambda, Rational cap,
                                     int m);
  static NearlyHolExpansion embed(const JacobiExpansion& g);

  int n() const { return shape_.n(); }
  int l() const { return shape_.l(); }
  const Rational& k() const { return shape_.k(); }
  const QMatrix& S() const { return shape_.S(); }
  long lambda() const { return shape_.lambda(); }
  const Rational& cap() const { return shape_.cap(); }
  int D() const { return D_; }
  bool is_det_form() const { return det_form_; }
  int m() const { return m_; }
  const std::map<CoeffKey, Poly>& coefficients() const { return c_; }

  void set(const QMatrix& t, const QMatrix& r, const Poly& p);
  Poly get(const QMatrix& t, const QMatrix& r) const;
  // Det form to general form via p(U) = det(U)^m Q(U^-1).
  NearlyHolExpansion to_general_form() const;
  bool operator==(const NearlyHolExpansion& o) const;

 private:
  JacobiExpansion shape_;
  int D_ = 0;
  bool det_form_ = false;
  int m_ = 0;
  std::map<CoeffKey, Poly> c_;
};

// Exact projected coefficient for one index.
//   general: Gamma_n(kappa - D)/Gamma_n(kappa) det(h)^kappa R(-d)[det^(D - kappa)](h),
//            R(y) = det(y)^D p(y^-1)
//   det form: Gamma_n(kappa - m)/Gamma_n(kappa) det(h)^kappa Q(-d)[det^(m - kappa)](h)
// with kappa = k - (n+l+1)/2 and h = 4t - lambda S^-1[r].
Rational hol_coefficient(const NearlyHolExpansion& f, const QMatrix& t, const QMatrix& r);

// Routes det-form input through the improved path.
JacobiExpansion hol_project(const NearlyHolExpansion& f);
JacobiExpansion hol_project_general(const NearlyHolExpansion& f);
JacobiExpansion hol_project_improved(const NearlyHolExpansion& f);

// Scalar (n = 1) quadrature of the projected coefficient
//   Gamma(kappa)^-1 (pi/lambda)^kappa h^kappa
//     * int_0^inf A(y) exp(-pi (2t/lambda - S^-1[r]) y) y^(k - l/2 - 2) dy.
Real coeff_integral_oracle(const std::function<Real(const Real&)>& A, const Rational& k,
                           const QMatrix& S, long lambda, const QMatrix& t, const QMatrix& r,
                           long prec);
// Same with A(y) = P_{t,r}(y) exp(-2 pi t y / lambda) taken from f.
Real coeff_integral_oracle(const NearlyHolExpansion& f, const QMatrix& t, const QMatrix& r,
                           long prec);

}  // namespace sjf
