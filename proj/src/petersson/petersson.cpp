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

#include "sjf/petersson.hpp"

#include <map>
#include <set>

#include "sjf/error.hpp"
#include "sjf/numth.hpp"
#include "sjf/quadrature.hpp"

namespace sjf {

namespace {

bool is_int(const Rational& q) { return q.get_den() == 1; }

// v = s^2 * core with core squarefree whenever v < 10^12.
void split_square(const Integer& v, Integer& s, Integer& core) {
  s = 1;
  core = v;
  for (long p = 2; p <= 10000 && Integer(p) * p <= core; ++p) {
    while (core % (p * p) == 0) {
      core /= p * p;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(core.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), core.get_mpz_t());
    s *= r;
    core = 1;
  }
}

Structured normalized(Structured v) {
  if (v.q == 0) return Structured{0, 0, 1, 0};
  // sqrt(a/b) = sqrt(ab)/b, then pull squares out of ab.
  Integer num = v.sqrt_arg.get_num() * v.sqrt_arg.get_den();
  Rational lead(1, v.sqrt_arg.get_den());
  lead.canonicalize();
  Integer s, core;
  split_square(num, s, core);
  v.q *= lead * Rational(s);
  v.sqrt_arg = Rational(core);
  return v;
}

Rational pow_int(const Rational& b, long e) {
  Rational r = 1;
  Rational base = e < 0 ? Rational(1) / b : b;
  for (long i = 0; i < std::labs(e); ++i) r *= base;
  return r;
}

Rational kappa_of(const Rational& k, int n, int l) { return k - ratio(n + l + 1, 2); }

void guard_weight(const Rational& k, int n, int l) {
  if (k <= 2 * n + l) {
    fail(ErrorCode::kDomain, "weight " + rational_str(k) + " is not above 2n + l = " +
                                 std::to_string(2 * n + l));
  }
}

}  // namespace

// --- Structured values ------------------------------------------------------

Structured Structured::rational(const Rational& q) { return normalized(Structured{q, 0, 1, 0}); }

Structured Structured::power(const Rational& base, const Rational& e) {
  if (base <= 0) fail(ErrorCode::kDomain, "structured power needs a positive base");
  Rational twice = e * 2;
  if (!is_int(twice)) fail(ErrorCode::kDomain, "structured power needs 2e integral");
  long m = twice.get_num().get_si();
  Structured out;
  if (m % 2 == 0) {
    out.q = pow_int(base, m / 2);
  } else {
    out.q = pow_int(base, (m - 1) / 2);
    out.sqrt_arg = base;
  }
  return normalized(out);
}

Structured Structured::pi_power(const Rational& e) {
  Rational twice = e * 2;
  if (!is_int(twice)) fail(ErrorCode::kDomain, "pi power needs 2e integral");
  return Structured{1, twice.get_num().get_si(), 1, 0};
}

Structured Structured::operator*(const Structured& o) const {
  return normalized(Structured{q * o.q, pi_half_power + o.pi_half_power, sqrt_arg * o.sqrt_arg,
                               vol_power + o.vol_power});
}

Structured Structured::inverse() const {
  if (q == 0) fail(ErrorCode::kDomain, "inverse of a zero structured value");
  return normalized(Structured{1 / q, -pi_half_power, 1 / sqrt_arg, -vol_power});
}

bool Structured::operator==(const Structured& o) const {
  if (q == 0 || o.q == 0) return q == o.q;
  return q == o.q && pi_half_power == o.pi_half_power && sqrt_arg == o.sqrt_arg &&
         vol_power == o.vol_power;
}

Real Structured::eval(long prec, const std::optional<Real>& vol) const {
  const long wp = prec + 16;
  Real r = PiPower{q, pi_half_power}.eval(wp);
  if (sqrt_arg != 1) r *= sqrt(Real(sqrt_arg, wp));
  if (vol_power != 0 && q != 0) {
    if (!vol) fail(ErrorCode::kDomain, "value carries a symbolic volume; supply vol");
    r *= pow(vol->with_prec(wp), vol_power);
  }
  return r.with_prec(prec);
}

std::string Structured::str() const {
  std::string s = rational_str(q);
  if (q == 0) return s;
  if (pi_half_power != 0) {
    s += " * pi^" + (pi_half_power % 2 == 0 ? std::to_string(pi_half_power / 2)
                                           : "(" + std::to_string(pi_half_power) + "/2)");
  }
  if (sqrt_arg != 1) s += " * sqrt(" + rational_str(sqrt_arg) + ")";
  if (vol_power != 0) s += " * vol^" + std::to_string(vol_power);
  return s;
}

// --- Closed forms -----------------------------------------------------------

Structured kernel_constant(const Rational& k, int n, const QMatrix& S, long lambda) {
  validate_index_matrix(S);
  if (n < 1) fail(ErrorCode::kDomain, "degree n must be positive");
  if (lambda < 1) fail(ErrorCode::kDomain, "level lambda must be positive");
  const int l = S.rows();
  Rational kappa = kappa_of(k, n, l);
  PiPower g = gamma_n_exact(n, kappa);
  if (kappa <= 0) {
    fail(ErrorCode::kDomain, "kernel constant needs k > (n+l+1)/2");
  }
  Structured c{1, 0, 1, -1};
  c = c * Structured::power((S * Rational(2)).det(), ratio(-n, 2));
  c = c * Structured{g.q, g.pi_half_power, 1, 0};
  Rational e = -kappa * n;
  c = c * Structured::pi_power(e);
  c = c * Structured::power(Rational(lambda), -e);
  return c;
}

PairingResult pair_with_poincare(const JacobiExpansion& f, const QMatrix& t, const QMatrix& r) {
  const int n = f.n(), l = f.l();
  guard_weight(f.k(), n, l);
  if (!f.cuspidal_flag() && !is_cuspidal(f)) {
    fail(ErrorCode::kDomain, "Poincare pairing needs a cuspidal expansion");
  }
  if (t.rows() != n || !t.is_symmetric() || !t.is_positive_definite()) {
    fail(ErrorCode::kDomain, "t must be symmetric positive definite at " + key_str(t, r));
  }
  if (r.rows() != l || r.cols() != n) fail(ErrorCode::kDomain, "r has the wrong shape");
  QMatrix h = discriminant_matrix(f.S(), t, r, f.lambda());
  if (!h.is_positive_definite()) {
    fail(ErrorCode::kDomain, "4t - lambda S^-1[r] is not positive definite at " + key_str(t, r));
  }
  PairingResult out;
  Rational c = f.get(t, r);
  if (c == 0) {
    out.exact = Structured::rational(0);
    return out;
  }
  Structured C = kernel_constant(f.k(), n, f.S(), f.lambda());
  out.exact = C * Structured::power(h.det(), -kappa_of(f.k(), n, l)) * Structured::rational(c);
  return out;
}

// --- Quadrature -------------------------------------------------------------

namespace {

// One side of the pairing: coefficients P_{t,r}(U) = sum_j c_j U^j with
// U = 1/(pi y), grouped by r.
using Side = std::map<Rational, std::map<Rational, std::vector<Rational>>>;  // r -> t -> c

bool strictly_supported(const NearlyHolExpansion& f) {
  for (const auto& [key, p] : f.coefficients()) {
    if (!support_block(f.S(), key.t, key.r, f.lambda()).is_positive_definite()) return false;
  }
  return true;
}

Side collect(const NearlyHolExpansion& f0) {
  NearlyHolExpansion f = f0.is_det_form() ? f0.to_general_form() : f0;
  Side side;
  for (const auto& [key, p] : f.coefficients()) {
    if (!is_int(key.t(0, 0))) {
      fail(ErrorCode::kDomain, "quadrature needs integral t at " + key_str(key.t, key.r));
    }
    std::vector<Rational> c(std::max(0, p.total_degree()) + 1);
    for (const auto& [m, v] : p.terms()) c[m[0]] += v;
    side[key.r(0, 0)][key.t(0, 0)] = std::move(c);
  }
  return side;
}

struct Rule01 {
  std::vector<Real> x, w;
};

Rule01 composite_rule(int panels, int nodes, long prec) {
  GaussRule g = gauss_legendre(nodes, prec);
  Rule01 out;
  Real width = Real(1L, prec) / panels;
  for (int p = 0; p < panels; ++p) {
    Real a = width * p;
    for (int i = 0; i < nodes; ++i) {
      out.x.push_back(a + width * (g.nodes[i] + 1L) / 2);
      out.w.push_back(g.weights[i] * width / 2);
    }
  }
  return out;
}

// S_r(x + iy) = sum_t P_{t,r}(1/(pi y)) e(t x) exp(-2 pi t y).
Complex partial_sum(const std::map<Rational, std::vector<Rational>>& terms, const Real& x,
                    const Real& y, const Real& pi, long prec) {
  Complex acc(Real(0L, prec), Real(0L, prec));
  Real u = Real(1L, prec) / (pi * y);
  for (const auto& [t, c] : terms) {
    Real poly(0L, prec), up(1L, prec);
    for (const auto& cj : c) {
      poly += Real(cj, prec) * up;
      up *= u;
    }
    Real tr(t, prec);
    Real mag = exp(-(2 * pi * tr * y)) * poly;
    Real ang = 2 * pi * tr * x;
    acc += Complex(mag * cos(ang), mag * sin(ang));
  }
  return acc;
}

Complex quadrature_once(const Side& f, const Side& g, const Rational& k, const Rational& s,
                        int nx, int ny, const Rule01& p, long prec) {
  const Real pi = Real::pi(prec);
  const Real kr(k, prec), sr(s, prec);
  Complex lower(Real(0L, prec), Real(0L, prec));

  std::set<Rational> rs;
  for (const auto& [r, terms] : f) {
    if (g.count(r)) rs.insert(r);
  }

  // Region sqrt(1 - x^2) <= y <= 1, |x| <= 1/2.
  GaussRule gx = gauss_legendre(nx, prec), gy = gauss_legendre(ny, prec);
  Real half(ratio(1, 2), prec);
  for (int i = 0; i < nx; ++i) {
    Real x = half * gx.nodes[i];
    Real y0 = sqrt(Real(1L, prec) - x * x);
    Real hy = (Real(1L, prec) - y0) / 2, my = (Real(1L, prec) + y0) / 2;
    Complex col(Real(0L, prec), Real(0L, prec));
    for (int j = 0; j < ny; ++j) {
      Real y = my + hy * gy.nodes[j];
      Complex acc(Real(0L, prec), Real(0L, prec));
      for (const auto& r : rs) {
        Real rr(r, prec);
        Real ir(0L, prec);
        for (size_t q = 0; q < p.x.size(); ++q) {
          ir += p.w[q] * exp(-(4 * pi * y * (rr * p.x[q] + sr * p.x[q] * p.x[q])));
        }
        acc += partial_sum(f.at(r), x, y, pi, prec) * conj(partial_sum(g.at(r), x, y, pi, prec)) *
               ir;
      }
      col += acc * (pow(y, kr - 2L) * gy.weights[j] * hy);
    }
    lower += col * (gx.weights[i] * half);
  }

  // Region y >= 1: the x-integral kills t != t'; the y-integral is an
  // incomplete gamma function.
  Real upper(0L, prec);
  for (const auto& r : rs) {
    const auto& ft = f.at(r);
    const auto& gt = g.at(r);
    Real rr(r, prec);
    for (const auto& [t, cf] : ft) {
      auto it = gt.find(t);
      if (it == gt.end()) continue;
      const auto& cg = it->second;
      Real tr(t, prec);
      for (size_t a = 0; a < cf.size(); ++a) {
        for (size_t b = 0; b < cg.size(); ++b) {
          Rational cc = cf[a] * cg[b];
          if (cc == 0) continue;
          long J = long(a + b);
          Real expo = kr - 1L - J;
          Real acc(0L, prec);
          for (size_t q = 0; q < p.x.size(); ++q) {
            Real X = 4 * pi * (tr + rr * p.x[q] + sr * p.x[q] * p.x[q]);
            acc += p.w[q] * gamma_upper(expo, X) / pow(X, expo);
          }
          upper += Real(cc, prec) * acc / pow(pi, J);
        }
      }
    }
  }
  Complex total = lower + Complex(upper, Real(0L, prec));
  return total * (Real(3L, prec) / pi);
}

}  // namespace

QuadratureResult petersson_quadrature(const NearlyHolExpansion& f, const NearlyHolExpansion& g,
                                      const QuadratureOptions& opt) {
  if (f.n() != 1 || g.n() != 1) fail(ErrorCode::kDomain, "Petersson quadrature needs n = 1");
  if (f.l() != 1 || g.l() != 1) fail(ErrorCode::kDomain, "Petersson quadrature needs l = 1");
  if (f.lambda() != 1 || g.lambda() != 1) {
    fail(ErrorCode::kDomain, "Petersson quadrature needs level lambda = 1");
  }
  if (f.k() != g.k() || f.S() != g.S()) {
    fail(ErrorCode::kDomain, "Petersson quadrature needs equal weight and index");
  }
  if (!strictly_supported(f) && !strictly_supported(g)) {
    fail(ErrorCode::kDomain, "Petersson quadrature needs one cuspidal argument");
  }
  Side sf = collect(f), sg = collect(g);
  const long prec = std::max<long>(opt.prec, kMinPrecision);
  const Rational s = f.S()(0, 0);

  Rule01 coarse_p = composite_rule(opt.p_panels, opt.p_nodes, prec);
  Rule01 fine_p = composite_rule(opt.p_panels, opt.p_nodes + 8, prec);
  Complex coarse = quadrature_once(sf, sg, f.k(), s, opt.x_nodes, opt.y_nodes, coarse_p, prec);
  Complex fine =
      quadrature_once(sf, sg, f.k(), s, opt.x_nodes + 16, opt.y_nodes + 8, fine_p, prec);
  QuadratureResult out{fine, abs(fine - coarse)};
  Real scale = abs(fine);
  Real tol(opt.tolerance, prec);
  if (!out.error_estimate.is_zero() && out.error_estimate > tol * scale) {
    fail(ErrorCode::kConvergence, "Petersson quadrature did not reach tolerance (change " +
                                      out.error_estimate.str(6) + ", value " + scale.str(6) +
                                      ")");
  }
  return out;
}

QuadratureResult petersson_quadrature(const JacobiExpansion& f, const JacobiExpansion& g,
                                      const QuadratureOptions& opt) {
  return petersson_quadrature(NearlyHolExpansion::embed(f), NearlyHolExpansion::embed(g), opt);
}

KernelCheckReport kernel_check(const JacobiExpansion& f, const std::vector<JacobiPoint>& points,
                               const QuadratureOptions& opt) {
  guard_weight(f.k(), f.n(), f.l());
  const long prec = std::max<long>(opt.prec, kMinPrecision);
  KernelCheckReport rep;
  rep.norm = petersson_quadrature(f, f, opt).value;
  if (!(rep.norm.re() > 0L)) fail(ErrorCode::kDomain, "kernel check needs a nonzero cusp form");

  QuadratureOptions finer = opt;
  finer.x_nodes += 24;
  finer.y_nodes += 12;
  finer.p_nodes += 8;
  Complex pairing = petersson_quadrature(f, f, finer).value;

  const Structured Cinv = kernel_constant(f.k(), f.n(), f.S(), f.lambda()).inverse();
  const Rational kappa = kappa_of(f.k(), f.n(), f.l());
  // beta_{t,r} = C^-1 det(h)^kappa <P_{t,r}, f> / <f, f>.
  std::vector<std::pair<CoeffKey, Real>> beta;
  for (const auto& [key, c] : f.coefficients()) {
    Structured p = *pair_with_poincare(f, key.t, key.r).exact;
    QMatrix h = discriminant_matrix(f.S(), key.t, key.r, f.lambda());
    Structured b = Cinv * Structured::power(h.det(), kappa) * p;
    beta.emplace_back(key, b.eval(prec) / rep.norm.re());
  }

  rep.max_rel_error = Real(0L, prec);
  for (const auto& z : points) {
    // <f, K(., z)> = pairing * sum beta_{t,r} e(tr(t tau)/lambda) e(tr(r^T w)).
    Complex B(Real(0L, prec), Real(0L, prec));
    for (const auto& [key, b] : beta) {
      CMatrix tt = CMatrix::from(key.t * (Rational(1) / f.lambda()), prec);
      CMatrix rt = CMatrix::from(key.r.transpose(), prec);
      Complex phase = (tt * z.tau).trace() + (rt * z.w).trace();
      B += expi2pi(phase) * b;
    }
    KernelPointReport pr{z, B * pairing, evaluate(f, z, prec).value, Real()};
    pr.rel_error = rel_error(pr.reproduced, pr.direct);
    rep.max_rel_error = max(rep.max_rel_error, pr.rel_error);
    rep.points.push_back(std::move(pr));
  }
  return rep;
}

AdjointnessReport adjointness_check(const JacobiExpansion& f, const NearlyHolExpansion& g,
                                    const QuadratureOptions& opt) {
  guard_weight(f.k(), f.n(), f.l());
  NearlyHolExpansion ef = NearlyHolExpansion::embed(f);
  AdjointnessReport rep;
  rep.lhs = petersson_quadrature(ef, g, opt).value;
  JacobiExpansion hg = hol_project(g);
  rep.rhs = petersson_quadrature(ef, NearlyHolExpansion::embed(hg), opt).value;
  rep.abs_error = abs(rep.lhs - rep.rhs);
  Real scale = max(abs(rep.lhs), abs(rep.rhs));
  rep.rel_error = scale.is_zero() ? scale : rep.abs_error / scale;
  return rep;
}

}  // namespace sjf
