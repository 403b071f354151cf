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

#include "sjf/identities.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sjf/error.hpp"
#include "sjf/numth.hpp"
#include "sjf/quadrature.hpp"

namespace sjf {

namespace {

Complex czero(long prec) { return Complex(Real(0L, prec), Real(0L, prec)); }

void finish(ValidationReport& r) {
  r.abs_error = abs(r.lhs - r.rhs);
  Real scale = abs(r.rhs);
  r.rel_error = scale.is_zero() ? r.abs_error : r.abs_error / scale;
  r.pass = r.rel_error <= Real(r.tolerance, r.prec);
}

Real gamma_real(const Rational& x, long prec) {
  if (Rational(x * 2).get_den() == 1) return gamma_n_exact(1, x).eval(prec);
  return tgamma(Real(x, prec));
}

std::string cmatrix_str(const CMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).re().str(6);
      const Real& im = m(i, j).im();
      if (!im.is_zero()) s += (im.sign() < 0 ? "-" : "+") + abs(im).str(6) + "i";
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

ValidationReport check_int_det(int n, const Rational& k, const CMatrix& tau, long prec,
                               double tolerance) {
  if (n != 1 && n != 2) fail(ErrorCode::kDomain, "int-det quadrature supports n = 1, 2");
  if (tau.rows() != n || tau.cols() != n) fail(ErrorCode::kDomain, "tau must be n x n");
  if (k <= ratio(n - 1, 2)) fail(ErrorCode::kDomain, "int-det needs k > (n-1)/2");
  ValidationReport r;
  r.name = "int-det";
  r.params = "n=" + std::to_string(n) + " k=" + rational_str(k) + " tau=" + cmatrix_str(tau);
  r.prec = prec;
  r.tolerance = tolerance;
  const long wp = prec + 16;
  const Real zero(0L, wp);
  DeOptions opt;
  opt.prec = wp;
  opt.max_levels = 14;

  if (n == 1) {
    Complex c = tau(0, 0).with_prec(wp);
    Real e(k - 1, wp);
    std::function<Complex(const Real&)> f = [&](const Real& t) {
      return exp(-(c * t)) * pow(t, e);
    };
    r.lhs = de_integrate<Complex>(DeKind::kHalfLine, zero, zero, f, opt);
    r.rhs = pow(c, Complex(Real(-k, wp), zero)) * gamma_real(k, wp);
  } else {
    // t = L L^T, L = [[x, 0], [y, z]]: dt = 4 x^2 z dx dy dz and
    // det(t)^(k-3/2) dt = 4 x^(2k-1) z^(2k-2) dx dy dz.
    Complex t11 = tau(0, 0).with_prec(wp), t12 = tau(0, 1).with_prec(wp),
            t22 = tau(1, 1).with_prec(wp);
    opt.tolerance = ldexp(Real(1L, wp), -(prec / 2 - 8));
    opt.max_levels = 10;
    Real ez(k * 2 - 2, wp), ex(k * 2 - 1, wp);
    std::function<Complex(const Real&)> fz = [&](const Real& z) {
      return exp(-(t22 * (z * z))) * pow(z, ez);
    };
    Complex Z = de_integrate<Complex>(DeKind::kHalfLine, zero, zero, fz, opt);
    DeOptions inner = opt;
    inner.tolerance = ldexp(Real(1L, wp), -(prec / 2));
    // The x range is cut where the Gaussian bound exp(-lam x^2) x^(2k-1),
    // lam the smallest eigenvalue of Re(tau), drops below 2^-(prec+40);
    // the y integral is centred on the real-part minimum.
    const double r11 = t11.re().to_double(), r12 = t12.re().to_double(),
                 r22 = t22.re().to_double();
    const double lam = (r11 + r22) / 2 - std::hypot((r11 - r22) / 2, r12);
    if (!(lam > 0)) fail(ErrorCode::kDomain, "Re(tau) must be positive definite");
    const double kd = k.get_d();
    double xmax = 1;
    for (int it = 0; it < 50; ++it) {
      xmax = std::sqrt(((prec + 40) * std::log(2.0) +
                        std::max(0.0, (2 * kd - 1) * std::log(xmax)) +
                        std::log(M_PI / lam)) / lam);
    }
    const Real centre_ratio(-r12 / r22, wp);
    std::function<Complex(const Real&)> fx = [&](const Real& x) {
      Real c = centre_ratio * x;
      std::function<Complex(const Real&)> fy = [&](const Real& v) {
        Real y = v + c;
        // Kept as one exponent: the cross term alone can overflow.
        return exp(-(t11 * (x * x) + t12 * (2 * x * y) + t22 * (y * y)));
      };
      Complex Y = de_integrate<Complex>(DeKind::kWholeLine, zero, zero, fy, inner);
      return Y * pow(x, ex);
    };
    Complex X = de_integrate<Complex>(DeKind::kFinite, zero, Real(xmax, wp), fx, opt);
    r.lhs = Z * X * Real(4L, wp);
    Complex det = t11 * t22 - t12 * t12;
    r.rhs = gamma_n(2, k, wp) * pow(det, Complex(Real(-k, wp), zero));
  }
  r.lhs = r.lhs.with_prec(prec);
  r.rhs = r.rhs.with_prec(prec);
  finish(r);
  return r;
}

ValidationReport check_cool_id(const QMatrix& S, const QMatrix& R, const QMatrix& A,
                               const Rational& a, long prec, double tolerance) {
  const int l = S.rows(), n = A.rows();
  if (l < 1 || l > 2 || n < 1 || n > 2) {
    fail(ErrorCode::kDomain, "Gaussian quadrature supports n, l <= 2");
  }
  if (!S.is_symmetric() || !S.is_positive_definite()) {
    fail(ErrorCode::kDomain, "S must be symmetric positive definite");
  }
  if (!A.is_symmetric() || !A.is_positive_definite()) {
    fail(ErrorCode::kDomain, "A must be symmetric positive definite");
  }
  if (R.rows() != n || R.cols() != l) fail(ErrorCode::kDomain, "R must be n x l");
  if (a <= 0) fail(ErrorCode::kDomain, "the Gaussian integral diverges unless a > 0");
  ValidationReport rep;
  rep.name = "cool-id";
  rep.params = "S=" + S.str() + " R=" + R.str() + " A=" + A.str() + " a=" + rational_str(a);
  rep.prec = prec;
  rep.tolerance = tolerance;
  const long wp = prec + 16;

  // Exponent -a v^T M v + a c^T v for v = vec(X), index (i, j) -> i n + j,
  // M_{(i,j),(k,m)} = S_ik A_jm and c_{(i,m)} = (A R)_{m i}.
  const int d = l * n;
  QMatrix M(d, d), c(d, 1);
  QMatrix AR = A * R;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < l; ++k) {
        for (int m = 0; m < n; ++m) M(i * n + j, k * n + m) = S(i, k) * A(j, m);
      }
      c(i * n + j, 0) = AR(j, i);
    }
  }
  // Box centred at v0 = M^-1 c / 2. Along coordinate i the marginal has
  // variance (M^-1)_ii / (2a) and the dual-lattice error of spacing h_i is
  // exp(-pi^2 (M^-1)_ii / (a h_i^2)); both are set to the target digits.
  QMatrix Minv = M.inverse();
  QMatrix v0 = Minv * c * ratio(1, 2);
  const double ad = a.get_d();
  const double digits = std::min(0.30103 * prec, -std::log10(tolerance)) + 8;
  const double L = digits * std::log(10.0);
  const long N = long(std::ceil(2 * L / M_PI)) + 2;
  std::vector<Real> h(d), x0(d);
  for (int i = 0; i < d; ++i) {
    double var = Minv(i, i).get_d() / ad;
    double hi = M_PI * std::sqrt(var / L);
    h[i] = Real(hi, wp);
    x0[i] = Real(v0(i, 0), wp) - h[i] * (N / 2);
  }

  // Innermost coordinate summed by multiplicative recurrences.
  std::vector<Real> Mr(d * d), cr(d);
  for (int i = 0; i < d; ++i) {
    cr[i] = Real(c(i, 0) * a, wp);
    for (int j = 0; j < d; ++j) Mr[i * d + j] = Real(M(i, j) * a, wp);
  }
  std::vector<long> idx(d - 1, 0);
  Real total(0L, wp);
  const int last = d - 1;
  const Real& hl = h[last];
  const Real& xl = x0[last];
  for (;;) {
    std::vector<Real> u(d - 1);
    for (int i = 0; i < d - 1; ++i) u[i] = x0[i] + h[i] * idx[i];
    // E(x) = alpha + beta x - gamma x^2 for the last coordinate x.
    Real alpha(0L, wp), beta = cr[last], gamma = Mr[last * d + last];
    for (int i = 0; i < d - 1; ++i) {
      alpha += cr[i] * u[i];
      beta -= 2 * Mr[i * d + last] * u[i];
      for (int j = 0; j < d - 1; ++j) alpha -= Mr[i * d + j] * u[i] * u[j];
    }
    // x_j = x0 + j h: E_j = E_0 + j (beta h - 2 gamma x0 h) - gamma h^2 j^2.
    Real e0 = alpha + beta * xl - gamma * xl * xl;
    Real lin = beta * hl - 2 * gamma * xl * hl;
    Real quad = gamma * hl * hl;
    Real term = exp(e0);
    Real ratio_j = exp(lin - quad);  // E_1 - E_0
    Real step = exp(-(2 * quad));
    Real acc(0L, wp);
    for (long j = 0; j <= N; ++j) {
      acc += term;
      term *= ratio_j;
      ratio_j *= step;
    }
    total += acc;
    int pos = d - 2;
    while (pos >= 0 && ++idx[pos] > N) idx[pos--] = 0;
    if (pos < 0) break;
  }
  for (int i = 0; i < d; ++i) total *= h[i];
  rep.lhs = Complex(total.with_prec(prec), Real(0L, prec));

  // Closed form.
  Real pi = Real::pi(wp), ar(a, wp);
  Real rhs = pow(Real(A.det(), wp), Real(ratio(-l, 2), wp)) *
             pow(pi / ar, Real(ratio(n * l, 2), wp)) *
             pow(Real(S.det(), wp), Real(ratio(-n, 2), wp));
  QMatrix q = R * S.inverse() * R.transpose() * A;
  rhs *= exp(ar * Real(q.trace(), wp) / 4);
  rep.rhs = Complex(rhs.with_prec(prec), Real(0L, prec));
  finish(rep);
  return rep;
}

std::vector<GroupPair> random_group_pairs(int n, int l, size_t count, std::uint64_t seed,
                                          long prec) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-2, 2), coin(0, 2), len(2, 5);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.5, 2.0), uw(-1.0, 1.0);
  auto random_g = [&]() {
    QMatrix g = QMatrix::identity(2 * n);
    const QMatrix J = symplectic_form(n);
    int steps = len(rng);
    for (int s = 0; s < steps; ++s) {
      if (coin(rng) == 0) {
        g = g * J;
        continue;
      }
      QMatrix T = QMatrix::identity(2 * n);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          int v = small(rng);
          T(i, n + j) = v;
          T(j, n + i) = v;
        }
      }
      g = g * T;
    }
    return g;
  };
  auto random_int = [&](int r, int c) {
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m(i, j) = small(rng);
    }
    return m;
  };
  auto random_sym = [&](int r) {
    QMatrix m(r, r);
    for (int i = 0; i < r; ++i) {
      for (int j = i; j < r; ++j) m(i, j) = m(j, i) = small(rng);
    }
    return m;
  };
  std::vector<GroupPair> out;
  for (size_t t = 0; t < count; ++t) {
    GroupPair p;
    p.g1 = {random_int(l, n), random_int(l, n), random_sym(l), random_g()};
    p.g2 = {random_int(l, n), random_int(l, n), random_sym(l), random_g()};
    p.z.tau = CMatrix(n, n, prec);
    p.z.w = CMatrix(l, n, prec);
    // tau = x + i y with y = diag(uy) + small symmetric perturbation.
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Real x(ux(rng), prec);
        Real y(i == j ? uy(rng) : 0.1 * ux(rng), prec);
        p.z.tau(i, j) = Complex(x, y);
        p.z.tau(j, i) = p.z.tau(i, j);
      }
    }
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < n; ++j) p.z.w(i, j) = Complex(Real(uw(rng), prec), Real(uw(rng), prec));
    }
    out.push_back(std::move(p));
  }
  return out;
}

ValidationReport check_cocycle(const Rational& k, const QMatrix& S,
                               const std::vector<GroupPair>& batch, long prec, double tolerance) {
  ValidationReport r;
  r.name = "cocycle";
  r.params = "k=" + rational_str(k) + " S=" + S.str() + " pairs=" + std::to_string(batch.size());
  r.prec = prec;
  r.tolerance = tolerance;
  r.rel_error = Real(0L, prec);
  r.abs_error = Real(0L, prec);
  r.lhs = r.rhs = czero(prec);
  for (const auto& p : batch) {
    Complex lhs = eval_J(k, S, p.g1 * p.g2, p.z);
    Complex rhs = eval_J(k, S, p.g1, act(p.g2, p.z)) * eval_J(k, S, p.g2, p.z);
    Real err = rel_error(lhs, rhs);
    if (err > r.rel_error || (r.lhs.is_zero() && r.rhs.is_zero())) {
      r.rel_error = err;
      r.abs_error = abs(lhs - rhs);
      r.lhs = lhs;
      r.rhs = rhs;
    }
  }
  r.pass = r.rel_error <= Real(tolerance, prec);
  return r;
}

ValidationReport check_delta_invariance(const Rational& k, const QMatrix& S,
                                        const std::vector<GroupPair>& batch, long prec,
                                        double tolerance) {
  ValidationReport r;
  r.name = "delta-invariance";
  r.params = "k=" + rational_str(k) + " S=" + S.str() + " pairs=" + std::to_string(batch.size());
  r.prec = prec;
  r.tolerance = tolerance;
  r.rel_error = Real(0L, prec);
  r.abs_error = Real(0L, prec);
  r.lhs = r.rhs = czero(prec);
  for (const auto& p : batch) {
    GroupElement g = p.g1 * p.g2;
    Real lhs = delta_Sk(k, S, act(g, p.z));
    Real j = norm(eval_J(k, S, g, p.z));
    Real rhs = delta_Sk(k, S, p.z) / j;
    Real err = rel_error(lhs, rhs);
    if (err > r.rel_error || (r.lhs.is_zero() && r.rhs.is_zero())) {
      r.rel_error = err;
      r.abs_error = abs(lhs - rhs);
      r.lhs = Complex(lhs, Real(0L, prec));
      r.rhs = Complex(rhs, Real(0L, prec));
    }
  }
  r.pass = r.rel_error <= Real(tolerance, prec);
  return r;
}

// --- Shipped grids -----------------------------------------------------------

std::vector<ValidationReport> run_int_det_grid(long prec) {
  std::vector<ValidationReport> out;
  auto scalar = [&](const Rational& re, const Rational& im) {
    CMatrix t(1, 1, prec);
    t(0, 0) = Complex(Real(re, prec), Real(im, prec));
    return t;
  };
  // n = 1: closed forms are exact; the quadrature must agree to near full
  // precision.
  const double tight = std::pow(2.0, -double(prec) / 2);
  out.push_back(check_int_det(1, Rational(3), scalar(2, 0), prec, tight));
  out.push_back(check_int_det(1, ratio(5, 2), scalar(1, 0), prec, tight));
  out.push_back(check_int_det(1, Rational(4), scalar(ratio(3, 2), ratio(1, 2)), prec, tight));
  out.push_back(check_int_det(1, ratio(7, 2), scalar(1, -1), prec, tight));
  // n = 2.
  auto sym2 = [&](const Rational& a, const Rational& b, const Rational& c, const Rational& bi) {
    CMatrix t(2, 2, prec);
    t(0, 0) = Complex(Real(a, prec), Real(0L, prec));
    t(1, 1) = Complex(Real(c, prec), Real(0L, prec));
    t(0, 1) = t(1, 0) = Complex(Real(b, prec), Real(bi, prec));
    return t;
  };
  out.push_back(check_int_det(2, Rational(3), sym2(1, 0, 1, 0), prec, 1e-8));
  out.push_back(check_int_det(2, ratio(5, 2), sym2(2, ratio(1, 2), 1, 0), prec, 1e-8));
  out.push_back(check_int_det(2, Rational(2), sym2(ratio(3, 2), ratio(-1, 3), 2, ratio(1, 4)),
                              prec, 1e-8));
  return out;
}

std::vector<ValidationReport> run_cool_id_grid(long prec) {
  std::vector<ValidationReport> out;
  auto m = [](const std::string& s) { return QMatrix::parse(s); };
  out.push_back(check_cool_id(m("1"), m("0"), m("1"), Rational(1), prec, 1e-8));
  out.push_back(check_cool_id(m("2"), m("1"), m("3/2"), ratio(1, 2), prec, 1e-8));
  out.push_back(check_cool_id(m("[[1,1/2],[1/2,1]]"), m("[[1,-1]]"), m("2"), Rational(1), prec,
                              1e-8));
  out.push_back(check_cool_id(m("1"), m("[[1],[2]]"), m("[[2,1/2],[1/2,1]]"), ratio(2, 3), prec,
                              1e-8));
  out.push_back(check_cool_id(m("[[2,1/2],[1/2,1]]"), m("[[1,0],[-1,1]]"),
                              m("[[1,1/4],[1/4,3/2]]"), Rational(1), prec, 1e-8));
  return out;
}

std::vector<ValidationReport> run_group_grid(long prec) {
  std::vector<ValidationReport> out;
  const QMatrix S1 = QMatrix::scalar(1);
  auto batch = random_group_pairs(1, 1, 50, 20260101, prec);
  out.push_back(check_cocycle(Rational(12), S1, batch, prec, 1e-20));
  out.push_back(check_cocycle(ratio(13, 2), S1, batch, prec, 1e-20));
  out.push_back(check_delta_invariance(Rational(12), S1, batch, prec, 1e-20));
  auto batch2 = random_group_pairs(2, 1, 20, 20260102, prec);
  out.push_back(check_cocycle(Rational(10), QMatrix::scalar(2), batch2, prec, 1e-20));
  out.push_back(check_delta_invariance(Rational(10), QMatrix::scalar(2), batch2, prec, 1e-20));
  return out;
}

std::string report_record(const ValidationReport& r) {
  std::ostringstream os;
  os << "identity=" << r.name << " " << r.params << " lhs=" << r.lhs.str(20)
     << " rhs=" << r.rhs.str(20) << " abs_err=" << r.abs_error.str(4)
     << " rel_err=" << r.rel_error.str(4) << " prec=" << r.prec << " tol=" << r.tolerance
     << " pass=" << (r.pass ? "true" : "false");
  return os.str();
}

}  // namespace sjf
