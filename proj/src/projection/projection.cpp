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

#include "sjf/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sjf/error.hpp"
#include "sjf/numth.hpp"
#include "sjf/quadrature.hpp"

namespace sjf {

int sym_count(int n) { return n * (n + 1) / 2; }

int sym_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  // Rows before a contribute n, n-1, ..., n-a+1 symbols.
  return a * n - a * (a - 1) / 2 + (b - a);
}

std::vector<std::string> sym_names(const std::string& base, int n) {
  std::vector<std::string> names(sym_count(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      names[sym_index(n, a, b)] = base + std::to_string(a + 1) + std::to_string(b + 1);
  return names;
}

std::vector<Rational> sym_values(const QMatrix& m) {
  const int n = m.rows();
  std::vector<Rational> v(sym_count(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) v[sym_index(n, a, b)] = m(a, b);
  return v;
}

namespace {

// Leibniz expansion of a square matrix of polynomials.
Poly leibniz_det(const std::vector<std::vector<Poly>>& m, int nvars) {
  const int n = int(m.size());
  if (n == 0) return Poly::constant(nvars, 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly acc(nvars);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = Poly::constant(nvars, inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

std::vector<std::vector<Poly>> symbol_matrix(int n, int nvars) {
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(nvars)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = Poly::variable(nvars, sym_index(n, a, b));
  return m;
}

}  // namespace

Poly symmetric_det(int n, int nvars) { return leibniz_det(symbol_matrix(n, nvars), nvars); }

std::vector<Poly> symmetric_adjugate(int n, int nvars) {
  auto m = symbol_matrix(n, nvars);
  std::vector<Poly> adj(sym_count(n), Poly(nvars));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      // adj_ab = (-1)^(a+b) det(minor without row b, column a).
      std::vector<std::vector<Poly>> minor;
      for (int i = 0; i < n; ++i) {
        if (i == b) continue;
        std::vector<Poly> row;
        for (int j = 0; j < n; ++j)
          if (j != a) row.push_back(m[i][j]);
        minor.push_back(std::move(row));
      }
      Poly d = leibniz_det(minor, nvars);
      adj[sym_index(n, a, b)] = (a + b) % 2 ? d * Rational(-1) : d;
    }
  }
  return adj;
}

Poly det_power_times_inverse(const Poly& P, int n, int e) {
  const int s = sym_count(n);
  const int nv = P.nvars();
  if (nv < s) fail(ErrorCode::kDomain, "polynomial ring is too small for n");
  Poly det = symmetric_det(n, nv);
  std::vector<Poly> adj = symmetric_adjugate(n, nv);
  std::vector<Poly> det_pow(e + 1, Poly(nv));
  det_pow[0] = Poly::constant(nv, 1);
  for (int i = 1; i <= e; ++i) det_pow[i] = det_pow[i - 1] * det;
  Poly out(nv);
  for (const auto& [mono, c] : P.terms()) {
    int j = 0;
    for (int i = 0; i < s; ++i) j += mono[i];
    if (j > e) {
      fail(ErrorCode::kDomain, "monomial degree " + std::to_string(j) + " exceeds " +
                                   std::to_string(e));
    }
    Poly term = det_pow[e - j] * Rational(c);
    for (int i = 0; i < s; ++i)
      if (mono[i]) term = term * adj[i].pow(mono[i]);
    // Remaining variables pass through unchanged.
    Poly::Monomial rest(nv, 0);
    for (int i = s; i < nv; ++i) rest[i] = mono[i];
    Poly tail(nv);
    tail.add_term(rest, 1);
    out += term * tail;
  }
  return out;
}

Poly negate_arguments(const Poly& R) {
  Poly out(R.nvars());
  for (const auto& [mono, c] : R.terms()) {
    int d = 0;
    for (int e : mono) d += e;
    out.add_term(mono, d % 2 ? Rational(-c) : c);
  }
  return out;
}

Poly weighted_derivative_u(const Poly& P, int n, int a, int b) {
  const int s = sym_count(n);
  const int nv = s + 1;
  if (P.nvars() != nv) fail(ErrorCode::kDomain, "engine polynomial must carry alpha");
  auto u = [&](int i, int j) { return Poly::variable(nv, sym_index(n, i, j)); };
  Poly out = Poly::variable(nv, s) * u(a, b) * P;
  for (int c = 0; c < n; ++c) {
    for (int d = c; d < n; ++d) {
      Poly dp = P.partial(sym_index(n, c, d));
      if (dp.is_zero()) continue;
      Poly du = (u(c, a) * u(b, d) + u(c, b) * u(a, d)) * ratio(-1, 2);
      out += dp * du;
    }
  }
  return out;
}

Poly apply_operator(const Poly& R, int n) {
  const int s = sym_count(n);
  if (R.nvars() != s) fail(ErrorCode::kDomain, "operator polynomial must have n(n+1)/2 symbols");
  std::vector<std::pair<int, int>> pairs(s);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) pairs[sym_index(n, a, b)] = {a, b};
  std::map<Poly::Monomial, Poly> memo;
  std::function<const Poly&(const Poly::Monomial&)> apply = [&](const Poly::Monomial& m)
      -> const Poly& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int i = 0;
    while (i < s && m[i] == 0) ++i;
    Poly res(s + 1);
    if (i == s) {
      res = Poly::constant(s + 1, 1);
    } else {
      Poly::Monomial prev = m;
      prev[i] -= 1;
      res = weighted_derivative_u(apply(prev), n, pairs[i].first, pairs[i].second);
    }
    return memo.emplace(m, std::move(res)).first->second;
  };
  Poly out(s + 1);
  for (const auto& [mono, c] : R.terms()) out += apply(mono) * c;
  return out;
}

namespace {

void require_positive_definite(const QMatrix& h) {
  if (!h.is_square() || !h.is_symmetric()) fail(ErrorCode::kDomain, "h must be symmetric");
  if (h.det() == 0) fail(ErrorCode::kDomain, "h is singular");
  if (!h.is_positive_definite()) fail(ErrorCode::kDomain, "h must be positive definite");
}

}  // namespace

DiffResult matrix_diff_apply(const Poly& R, const Rational& alpha, const QMatrix& h) {
  require_positive_definite(h);
  const int n = h.rows();
  Poly P = apply_operator(R, n);
  std::vector<Rational> vals = sym_values(h.inverse());
  vals.push_back(alpha);
  return {P.eval(vals), alpha};
}

Rational brute_force_diff_apply(const Poly& R, const Rational& alpha, const QMatrix& h) {
  require_positive_definite(h);
  const int n = h.rows();
  const int s = sym_count(n);
  const int nv = s + 1;
  if (R.nvars() != s) fail(ErrorCode::kDomain, "operator polynomial must have n(n+1)/2 symbols");
  std::vector<Poly> adj = symmetric_adjugate(n, nv);
  Poly alpha_var = Poly::variable(nv, s);
  std::vector<std::pair<int, int>> pairs(s);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) pairs[sym_index(n, a, b)] = {a, b};

  std::vector<Rational> vals = sym_values(h);
  vals.push_back(alpha);
  Rational det_h = h.det();
  Rational total = 0;
  for (const auto& [mono, c] : R.terms()) {
    // state[j] = P_j with the function sum_j det^(alpha - j) P_j.
    std::map<int, Poly> state;
    state.emplace(0, Poly::constant(nv, 1));
    for (int i = 0; i < s; ++i) {
      for (int rep = 0; rep < mono[i]; ++rep) {
        auto [a, b] = pairs[i];
        Rational w = a == b ? Rational(1) : ratio(1, 2);
        std::map<int, Poly> next;
        for (const auto& [j, P] : state) {
          Poly beta = alpha_var - Poly::constant(nv, j);
          Poly from_det = beta * adj[i] * P;
          Poly from_poly = P.partial(i) * w;
          if (!from_det.is_zero()) {
            auto [it, ins] = next.emplace(j + 1, from_det);
            if (!ins) it->second += from_det;
          }
          if (!from_poly.is_zero()) {
            auto [it, ins] = next.emplace(j, from_poly);
            if (!ins) it->second += from_poly;
          }
        }
        state = std::move(next);
      }
    }
    Rational acc = 0;
    for (const auto& [j, P] : state) {
      Rational dpow = 1;
      for (int e = 0; e < j; ++e) dpow /= det_h;
      acc += P.eval(vals) * dpow;
    }
    total += acc * c;
  }
  return total;
}

// ---------------------------------------------------------------------------

NearlyHolExpansion::NearlyHolExpansion(int n, Rational k, QMatrix S, long lambda, Rational cap,
                                       int D)
    : shape_(n, std::move(k), std::move(S), lambda, std::move(cap), false), D_(D) {
  if (D < 0) fail(ErrorCode::kDomain, "degree bound D must be nonnegative");
}

NearlyHolExpansion NearlyHolExpansion::det_form(int n, Rational k, QMatrix S, long lambda,
                                                Rational cap, int m) {
  if (m < 0) fail(ErrorCode::kDomain, "det-form exponent m must be nonnegative");
  NearlyHolExpansion f(n, std::move(k), std::move(S), lambda, std::move(cap), m * n);
  f.det_form_ = true;
  f.m_ = m;
  return f;
}

NearlyHolExpansion NearlyHolExpansion::embed(const JacobiExpansion& g) {
  NearlyHolExpansion f(g.n(), g.k(), g.S(), g.lambda(), g.cap(), 0);
  const int s = sym_count(g.n());
  for (const auto& [key, c] : g.coefficients()) f.set(key.t, key.r, Poly::constant(s, c));
  return f;
}

void NearlyHolExpansion::set(const QMatrix& t, const QMatrix& r, const Poly& p) {
  shape_.check_index(t, r);
  if (p.nvars() != sym_count(n())) {
    fail(ErrorCode::kInvariant, "coefficient polynomial has the wrong number of symbols at " +
                                    key_str(t, r));
  }
  if (!det_form_ && p.total_degree() > D_) {
    fail(ErrorCode::kInvariant, "coefficient degree exceeds D at " + key_str(t, r));
  }
  CoeffKey key{t, r};
  if (p.is_zero()) {
    c_.erase(key);
  } else {
    c_[key] = p;
  }
}

Poly NearlyHolExpansion::get(const QMatrix& t, const QMatrix& r) const {
  auto it = c_.find(CoeffKey{t, r});
  return it == c_.end() ? Poly(sym_count(n())) : it->second;
}

NearlyHolExpansion NearlyHolExpansion::to_general_form() const {
  if (!det_form_) return *this;
  NearlyHolExpansion out(n(), k(), S(), lambda(), cap(), m_ * n());
  for (const auto& [key, q] : c_) out.set(key.t, key.r, det_power_times_inverse(q, n(), m_));
  return out;
}

bool NearlyHolExpansion::operator==(const NearlyHolExpansion& o) const {
  return shape_ == o.shape_ && D_ == o.D_ && det_form_ == o.det_form_ && m_ == o.m_ &&
         c_ == o.c_;
}

// ---------------------------------------------------------------------------

namespace {

Rational kappa_of(const NearlyHolExpansion& f) {
  return f.k() - ratio(f.n() + f.l() + 1, 2);
}

void check_weight(const NearlyHolExpansion& f, int shift) {
  Rational bound1 = Rational(f.n() + shift) + ratio(f.l(), 2);
  Rational bound2 = 2 * f.n() + f.l();
  if (!(f.k() > bound1 && f.k() > bound2)) {
    fail(ErrorCode::kDomain, "weight bound violated: need k > max(" + rational_str(bound1) +
                                 ", " + rational_str(bound2) + ")");
  }
}

Rational projected(const Poly& R, int n, int shift, const Rational& kappa, const QMatrix& h) {
  Rational alpha = Rational(shift) - kappa;
  DiffResult dr = matrix_diff_apply(negate_arguments(R), alpha, h);
  Rational dh = h.det(), dpow = 1;
  for (int i = 0; i < shift; ++i) dpow *= dh;
  return gamma_n_ratio(n, kappa - shift, kappa) * dpow * dr.coefficient;
}

}  // namespace

Rational hol_coefficient(const NearlyHolExpansion& f, const QMatrix& t, const QMatrix& r) {
  QMatrix h = discriminant_matrix(f.S(), t, r, f.lambda());
  if (!h.is_positive_definite()) {
    fail(ErrorCode::kDomain, "4t - lambda S^-1[r] must be positive definite at " + key_str(t, r));
  }
  Poly P = f.get(t, r);
  if (P.is_zero()) return 0;
  const int n = f.n();
  if (f.is_det_form()) return projected(P, n, f.m(), kappa_of(f), h);
  return projected(det_power_times_inverse(P, n, f.D()), n, f.D(), kappa_of(f), h);
}

namespace {

JacobiExpansion project_all(const NearlyHolExpansion& f) {
  JacobiExpansion out(f.n(), f.k(), f.S(), f.lambda(), f.cap(), true);
  for (const auto& [key, p] : f.coefficients()) {
    out.set(key.t, key.r, hol_coefficient(f, key.t, key.r));
  }
  return out;
}

}  // namespace

JacobiExpansion hol_project_general(const NearlyHolExpansion& f) {
  NearlyHolExpansion g = f.to_general_form();
  check_weight(g, g.D());
  return project_all(g);
}

JacobiExpansion hol_project_improved(const NearlyHolExpansion& f) {
  if (!f.is_det_form()) {
    if (f.D() != 0) fail(ErrorCode::kDomain, "improved projection needs det-form input");
    check_weight(f, 0);
    return project_all(f);
  }
  check_weight(f, f.m());
  return project_all(f);
}

JacobiExpansion hol_project(const NearlyHolExpansion& f) {
  return f.is_det_form() ? hol_project_improved(f) : hol_project_general(f);
}

// ---------------------------------------------------------------------------

Real coeff_integral_oracle(const std::function<Real(const Real&)>& A, const Rational& k,
                           const QMatrix& S, long lambda, const QMatrix& t, const QMatrix& r,
                           long prec) {
  if (t.rows() != 1) fail(ErrorCode::kDomain, "integral oracle is scalar (n = 1)");
  const int l = S.rows();
  QMatrix hm = discriminant_matrix(S, t, r, lambda);
  if (!(hm(0, 0) > 0)) fail(ErrorCode::kDomain, "integrand does not decay: h <= 0");
  const long wp = prec + 32;
  Rational kappa = k - ratio(l + 2, 2);
  Rational rate = t(0, 0) * 2 / lambda - S.inverse().bracket(r)(0, 0);
  Rational power = k - ratio(l, 2) - 2;
  Real pi = Real::pi(wp);
  Real rate_r = Real(rate, wp) * pi;
  Real power_r(power, wp);
  std::function<Real(const Real&)> integrand = [&](const Real& y) {
    return A(y) * exp(-(rate_r * y)) * pow(y, power_r);
  };
  // The integrand decays like u^power e^-u with u = pi h y / lambda, but
  // exp(-rate y) alone grows when rate < 0, so integrate over [0, ymax] with
  // u^power e^-u / Gamma(power + 1) < 2^-(prec + 40) beyond ymax.
  const double p = power.get_d();
  const double bits = double(prec + 40) * std::log(2.0);
  const double lg = std::lgamma(p + 1);
  double u = bits + std::max(p, 0.0);
  for (int i = 0; i < 50; ++i) u = bits + p * std::log(u) - lg;
  u = std::max(u, 2 * p + 10);
  Real ymax = Real(u, wp) * Real(lambda, wp) / (pi * Real(hm(0, 0), wp));
  DeOptions opt;
  opt.prec = wp;
  opt.max_levels = 14;
  opt.tolerance = ldexp(Real(1L, wp), -(prec + 8));
  Real integral = de_integrate<Real>(DeKind::kFinite, Real(0L, wp), ymax, integrand, opt);
  Real pre = pow(pi / Real(lambda, wp) * Real(hm(0, 0), wp), Real(kappa, wp)) /
             gamma_n(1, kappa, wp);
  return (pre * integral).with_prec(prec);
}

Real coeff_integral_oracle(const NearlyHolExpansion& f, const QMatrix& t, const QMatrix& r,
                           long prec) {
  if (f.n() != 1) fail(ErrorCode::kDomain, "integral oracle is scalar (n = 1)");
  const long wp = prec + 32;
  Poly P = f.get(t, r);
  Real pi = Real::pi(wp);
  Real lam(f.lambda(), wp);
  Real two_t_over_lambda = Real(Rational(t(0, 0) * 2 / f.lambda()), wp);
  const bool det_form = f.is_det_form();
  const int m = f.m();
  auto poly_at = [&](const Real& x) {
    Real acc(0L, wp);
    for (const auto& [mono, c] : P.terms()) acc += Real(c, wp) * pow(x, long(mono[0]));
    return acc;
  };
  std::function<Real(const Real&)> A = [&](const Real& y) {
    Real Y = pi * y / lam;
    Real coeff = det_form ? poly_at(Y) / pow(Y, long(m)) : poly_at(Real(1L, wp) / Y);
    return coeff * exp(-(pi * two_t_over_lambda * y));
  };
  return coeff_integral_oracle(A, f.k(), f.S(), f.lambda(), t, r, prec);
}

}  // namespace sjf
