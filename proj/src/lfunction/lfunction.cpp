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

#include "sjf/lfunction.hpp"

#include <algorithm>
#include <numeric>

#include "sjf/error.hpp"

namespace sjf {

namespace {

Complex czero(long prec) { return Complex(Real(0L, prec), Real(0L, prec)); }
Complex cone(long prec) { return Complex(Real(1L, prec), Real(0L, prec)); }

// p^-s
Complex prime_power_minus(long p, const Complex& s, long prec) {
  return exp(-(s * log(Real(p, prec))));
}

// Power series 1 / P(X) to degree `deg`, P(0) = 1.
std::vector<Complex> invert_series(const std::vector<Complex>& P, int deg, long prec) {
  std::vector<Complex> out(deg + 1, czero(prec));
  out[0] = cone(prec);
  for (int m = 1; m <= deg; ++m) {
    Complex acc = czero(prec);
    for (int j = 1; j <= m && j < int(P.size()); ++j) acc += P[j] * out[m - j];
    out[m] = -acc;
  }
  return out;
}

std::vector<Complex> multiply_series(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                     int deg, long prec) {
  std::vector<Complex> out(deg + 1, czero(prec));
  for (int i = 0; i <= deg && i < int(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= deg && j < int(b.size()); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<long> smallest_prime_factor(long N) {
  std::vector<long> spf(N + 1, 0);
  for (long i = 2; i <= N; ++i) {
    if (spf[i]) continue;
    for (long j = i; j <= N; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  return spf;
}

bool g_is_trivial(const LSeriesSpec& spec) {
  for (const auto& [p, g] : spec.g) {
    if (g.num != std::vector<Rational>{1} || g.den != std::vector<Rational>{1}) return false;
  }
  return true;
}

// n + l/2 as a Real.
Real shift_of(const LSeriesSpec& spec, long prec) {
  return Real(Rational(spec.n) + ratio(spec.l, 2), prec);
}

LValue lvalue_product(const std::vector<LValue>& fs, long prec) {
  LValue out{Rational(1), cone(prec)};
  for (const auto& f : fs) {
    out.value *= f.value;
    if (out.exact && f.exact) {
      *out.exact *= *f.exact;
    } else {
      out.exact.reset();
    }
  }
  return out;
}

}  // namespace

// --- Euler factors ----------------------------------------------------------

Complex EulerFactor::eval(const Complex& X) const {
  const long prec = X.prec();
  Complex acc = czero(prec), xp = cone(prec);
  for (const auto& c : poly) {
    acc += c * xp;
    xp *= X;
  }
  return acc;
}

EulerFactor euler_factor_from_satake(const std::vector<Complex>& mu) {
  if (mu.empty()) fail(ErrorCode::kDomain, "Satake list is empty");
  const long prec = mu[0].prec();
  std::vector<Complex> poly{cone(prec)};
  for (const auto& m : mu) {
    if (m.is_zero()) fail(ErrorCode::kDomain, "Satake parameter must be nonzero");
    Complex inv = cone(prec) / m;
    std::vector<Complex> quad{cone(prec), -(m + inv), cone(prec)};
    poly = multiply_series(poly, quad, int(poly.size()) + 1, prec);
  }
  return EulerFactor{mu, std::move(poly)};
}

EulerFactor euler_factor_from_poly(std::vector<Complex> poly) {
  if (poly.empty() || poly.size() % 2 == 0) {
    fail(ErrorCode::kInvariant, "L_p(X) must have even degree 2n");
  }
  const long prec = poly[0].prec();
  Real tol = ldexp(Real(1L, prec), -(prec / 2));
  if (abs(poly[0] - cone(prec)) > tol) fail(ErrorCode::kInvariant, "L_p(0) must be 1");
  const size_t d = poly.size() - 1;
  for (size_t j = 0; j <= d; ++j) {
    if (abs(poly[j] - poly[d - j]) > tol * max(Real(1L, prec), abs(poly[j]))) {
      fail(ErrorCode::kInvariant, "L_p(X) coefficients are not palindromic");
    }
  }
  return EulerFactor{std::nullopt, std::move(poly)};
}

Complex GCorrection::eval(const Complex& X) const {
  const long prec = X.prec();
  auto ev = [&](const std::vector<Rational>& c) {
    Complex acc = czero(prec), xp = cone(prec);
    for (const auto& v : c) {
      acc += xp * Real(v, prec);
      xp *= X;
    }
    return acc;
  };
  Complex d = ev(den);
  if (d.is_zero()) fail(ErrorCode::kPole, "G_p denominator vanishes");
  return ev(num) / d;
}

bool has_unitary_satake(const LSeriesSpec& spec) {
  if (spec.euler.empty()) return false;
  Real tol = ldexp(Real(1L, spec.prec), -(spec.prec / 2));
  for (const auto& [p, f] : spec.euler) {
    if (!f.satake) return false;
    for (const auto& m : *f.satake) {
      if (abs(abs(m) - Real(1L, spec.prec)) > tol) return false;
    }
  }
  return true;
}

// --- Eigenvalues ------------------------------------------------------------

void eigenvalues_from_euler(LSeriesSpec& spec, long cutoff) {
  const long prec = spec.prec;
  const int delta = spec.l % 2;
  std::vector<long> spf = smallest_prime_factor(std::max(cutoff, 2L));
  std::map<long, std::vector<Complex>> local;  // p -> b(p^e)
  for (long p : primes_up_to(cutoff)) {
    int deg = 0;
    for (long q = p; q <= cutoff; q *= p) ++deg;
    if (!spec.coprime_to_level(p)) {
      std::vector<Complex> one(deg + 1, czero(prec));
      one[0] = cone(prec);
      local[p] = std::move(one);
      continue;
    }
    auto it = spec.euler.find(p);
    if (it == spec.euler.end()) {
      fail(ErrorCode::kDomain, "no Euler factor for p = " + std::to_string(p));
    }
    Complex cp = spec.chi_value(p);
    // L_p(chi(p) X)
    std::vector<Complex> lp;
    Complex cpow = cone(prec);
    for (const auto& c : it->second.poly) {
      lp.push_back(c * cpow);
      cpow *= cp;
    }
    std::vector<Complex> series = invert_series(lp, deg, prec);
    Complex c2 = cp * cp;
    for (int i = 1; i <= spec.n; ++i) {
      // (1 - chi^2(p) p^-(2n-2i+delta) X^2)^-1
      Real w = pow(Real(p, prec), -(2L * spec.n - 2L * i + delta));
      std::vector<Complex> f{cone(prec), czero(prec), -(c2 * w)};
      series = multiply_series(series, invert_series(f, deg, prec), deg, prec);
    }
    local[p] = std::move(series);
  }

  std::vector<Complex> b(cutoff + 1, czero(prec));
  if (cutoff >= 1) b[1] = cone(prec);
  spec.eigenvalues.clear();
  const Real shift = shift_of(spec, prec);
  for (long a = 1; a <= cutoff; ++a) {
    if (a > 1) {
      long p = spf[a], rest = a;
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      b[a] = local[p][e] * b[rest];
    }
    Complex ca = spec.chi_value(a);
    if (ca.is_zero() || b[a].is_zero()) {
      spec.eigenvalues[a] = czero(prec);
      continue;
    }
    spec.eigenvalues[a] = b[a] * pow(Real(a, prec), shift) / ca;
  }
}

MultiplicativityReport check_multiplicativity(const LSeriesSpec& spec, long limit,
                                              const Real& tolerance) {
  MultiplicativityReport rep;
  rep.max_error = Real(0L, spec.prec);
  const auto& ev = spec.eigenvalues;
  for (long a = 2; a <= limit; ++a) {
    auto ia = ev.find(a);
    if (ia == ev.end()) continue;
    for (long c = a + 1; a * c <= limit; ++c) {
      if (std::gcd(a, c) != 1) continue;
      auto ic = ev.find(c), iac = ev.find(a * c);
      if (ic == ev.end() || iac == ev.end()) continue;
      Real err = abs(iac->second - ia->second * ic->second) /
                 max(Real(1L, spec.prec), abs(iac->second));
      rep.max_error = max(rep.max_error, err);
      ++rep.pairs_checked;
    }
  }
  rep.pass = rep.max_error <= tolerance;
  return rep;
}

// --- Series and products ----------------------------------------------------

Real divisor_tail(int m, const Real& sigma, long N) {
  const long prec = sigma.working_prec();
  if (!(sigma > 1L)) fail(ErrorCode::kDomain, "divisor tail needs sigma > 1");
  std::vector<Integer> d(N + 1, 0), one(N + 1, 1);
  d[1] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<Integer> next(N + 1, 0);
    for (long a = 1; a <= N; ++a) {
      if (d[a] == 0) continue;
      for (long b = 1; a * b <= N; ++b) next[a * b] += d[a];
    }
    d = std::move(next);
  }
  Real partial(0L, prec + 32);
  for (long a = 1; a <= N; ++a) {
    partial += Real(d[a], prec + 32) * pow(Real(a, prec + 32), -sigma.with_prec(prec + 32));
  }
  Complex z = hurwitz_zeta(Complex(sigma.with_prec(prec + 32), Real(0L, prec + 32)), Rational(1),
                           prec + 32);
  Real total = pow(z.re(), long(m));
  return (total - partial).with_prec(prec);
}

SeriesValue dirichlet_series_D(const LSeriesSpec& spec, const Complex& s, long cutoff,
                               bool allow_outside) {
  const long prec = spec.prec;
  SeriesValue out{czero(prec), std::nullopt, false};
  if (!(s.re() > Real(long(2 * spec.n + spec.l + 1), prec))) {
    if (!allow_outside) {
      fail(ErrorCode::kDomain, "D(s) needs Re(s) > 2n + l + 1");
    }
    out.outside_window = true;
  }
  for (long a = 1; a <= cutoff; ++a) {
    auto it = spec.eigenvalues.find(a);
    if (it == spec.eigenvalues.end() || it->second.is_zero()) continue;
    Complex ca = spec.chi_value(a);
    if (ca.is_zero()) continue;
    out.value += it->second * ca * exp(-(s * log(Real(a, prec))));
  }
  Real sigma = s.re() - shift_of(spec, prec);
  if (sigma > 1L && has_unitary_satake(spec) && g_is_trivial(spec)) {
    out.tail_bound = divisor_tail(3 * spec.n, sigma, cutoff);
  }
  return out;
}

Complex frak_L(const LSeriesSpec& spec, const Complex& s, long cutoff) {
  const long prec = spec.prec;
  const int delta = spec.l % 2;
  Complex acc = cone(prec);
  for (long p : primes_up_to(cutoff)) {
    if (!spec.coprime_to_level(p)) continue;
    Complex cp = spec.chi_value(p);
    Complex c2 = cp * cp;
    auto git = spec.g.find(p);
    if (git != spec.g.end()) acc *= git->second.eval(prime_power_minus(p, s, prec));
    for (int i = 1; i <= spec.n; ++i) {
      Complex arg = s * Real(2L, prec) + Complex(Real(long(2 * spec.n - 2 * i + delta), prec),
                                                 Real(0L, prec));
      Complex factor = cone(prec) - c2 * prime_power_minus(p, arg, prec);
      if (factor.is_zero()) fail(ErrorCode::kPole, "frakL factor vanishes at p = " + std::to_string(p));
      acc *= factor;
    }
  }
  return acc;
}

SeriesValue euler_product_L(const LSeriesSpec& spec, const Complex& s, long cutoff,
                            bool allow_outside) {
  const long prec = spec.prec;
  SeriesValue out{cone(prec), std::nullopt, false};
  if (!(s.re() > shift_of(spec, prec) + 1L)) {
    if (!allow_outside) fail(ErrorCode::kDomain, "Euler product needs Re(s) > n + l/2 + 1");
    out.outside_window = true;
  }
  for (long p : primes_up_to(cutoff)) {
    if (!spec.coprime_to_level(p)) continue;
    auto it = spec.euler.find(p);
    if (it == spec.euler.end()) {
      fail(ErrorCode::kDomain, "no Euler factor for p = " + std::to_string(p));
    }
    Complex X = spec.chi_value(p) * prime_power_minus(p, s, prec);
    Complex v = it->second.eval(X);
    if (v.is_zero()) fail(ErrorCode::kPole, "L_p vanishes at p = " + std::to_string(p));
    out.value /= v;
  }
  return out;
}

Real nonvanishing_bound(const LSeriesSpec& spec, const Real& sigma, long cutoff) {
  const long prec = spec.prec;
  Real acc(1L, prec);
  for (long p : primes_up_to(cutoff)) {
    if (!spec.coprime_to_level(p)) continue;
    Real f = Real(1L, prec) + pow(Real(p, prec), -sigma);
    acc /= pow(f, long(2 * spec.n));
  }
  return acc;
}

// --- Normalizers ------------------------------------------------------------

LValue lambda_normalizer(int l, int n_eis, long level, const DirichletCharacter& chi,
                         const DirichletCharacter& psi, const Rational& s, long prec) {
  if (n_eis < 1) fail(ErrorCode::kDomain, "normalizer degree must be positive");
  std::vector<LValue> fs;
  DirichletCharacter chi2 = chi.square();
  if (l % 2 == 0) {
    fs.push_back(dirichlet_L_depleted(s * 2 - ratio(l, 2), chi * psi, level, prec));
    for (int i = 1; i <= n_eis / 2; ++i) {
      fs.push_back(dirichlet_L_depleted(s * 4 - l - 2 * i, chi2, level, prec));
    }
  } else {
    for (int i = 1; i <= (n_eis + 1) / 2; ++i) {
      fs.push_back(dirichlet_L_depleted(s * 4 - l - 2 * i + 1, chi2, level, prec));
    }
  }
  return lvalue_product(fs, prec);
}

LValue lambda_normalizer(int l, int n_eis, long level, const DirichletCharacter& chi,
                         const DirichletCharacter& psi, const Complex& s, long prec) {
  if (n_eis < 1) fail(ErrorCode::kDomain, "normalizer degree must be positive");
  std::vector<LValue> fs;
  DirichletCharacter chi2 = chi.square();
  auto shifted = [&](long mult, long minus) {
    return s * Real(mult, prec) - Complex(Real(minus, prec), Real(0L, prec));
  };
  if (l % 2 == 0) {
    fs.push_back(dirichlet_L_depleted(shifted(2, l / 2), chi * psi, level, prec));
    for (int i = 1; i <= n_eis / 2; ++i) {
      fs.push_back(dirichlet_L_depleted(shifted(4, l + 2 * i), chi2, level, prec));
    }
  } else {
    for (int i = 1; i <= (n_eis + 1) / 2; ++i) {
      fs.push_back(dirichlet_L_depleted(shifted(4, l + 2 * i - 1), chi2, level, prec));
    }
  }
  LValue out = lvalue_product(fs, prec);
  out.exact.reset();
  return out;
}

CSkValue c_Sk(const QMatrix& S, const Rational& k, int n, const Rational& sigma) {
  validate_index_matrix(S);
  if (n < 1) fail(ErrorCode::kDomain, "degree n must be positive");
  const int l = S.rows();
  const Rational b = sigma + k - ratio(l, 2);
  if (sigma < 0 || b <= 2 * n) {
    fail(ErrorCode::kDomain, "c_{S,k} needs sigma >= 0 and sigma + k - l/2 > 2n");
  }
  CSkValue out;
  out.gamma_ratio = gamma_n_ratio(n, b - ratio(n + 1, 2), b);
  Structured v = Structured::power((S * Rational(2)).det(), Rational(-n));
  v = v * Structured::power(Rational(2), ratio(n * (n + 3), 2) - sigma * 4 - k * n);
  v = v * Structured::pi_power(ratio(n * (n + 1), 2));
  v = v * Structured::rational(out.gamma_ratio);
  out.value = v;
  return out;
}

long exponent_e_sigma(int n, long k, int l, long sigma) {
  long e = l % 2 == 0 ? long(n) * n + n - sigma + l / 2 : long(n) * n;
  return long(n) * (k - l + sigma) - e;
}

long exponent_e_sigma_general(int n, const std::vector<long>& ks, int l, long sigma) {
  if (ks.empty()) fail(ErrorCode::kDomain, "need at least one weight");
  const long d = long(ks.size());
  long sum = 0;
  for (long k : ks) sum += k - l + sigma;
  long e = (l % 2 == 0 && 2 * sigma >= 4L * n + l) ? long(n) * n + n - sigma + l / 2
                                                   : long(n) * n;
  return long(n) * sum - d * e;
}

bool in_sigma_window(int n, long k, int l, long sigma) {
  // k/2 - 2n - l/2 > sigma/2 > n + l/2 + 1, doubled.
  return k - 4L * n - l > sigma && sigma > 2L * n + l + 2 && (sigma - k) % 2 == 0;
}

BoldLambda bold_lambda(const LSeriesSpec& spec, long sigma, long cutoff, bool allow_outside) {
  const long prec = spec.prec;
  if (spec.k.get_den() != 1) fail(ErrorCode::kDomain, "bold-Lambda needs integral weight k");
  BoldLambda out;
  if (!in_sigma_window(spec.n, spec.k.get_num().get_si(), spec.l, sigma)) {
    if (!allow_outside) {
      fail(ErrorCode::kDomain, "sigma = " + std::to_string(sigma) + " is outside the window");
    }
    out.outside_window = true;
  }
  Complex s(Rational(sigma) - spec.n - ratio(spec.l, 2), prec);
  if (!spec.euler.empty()) {
    out.l_part = euler_product_L(spec, s, cutoff, true).value;
  } else {
    // L(s) = frakL(chi, s) D(s + n + l/2) from eigenvalue data alone.
    Complex shifted = s + Complex(shift_of(spec, prec),
                                  Real(0L, prec));
    out.l_part = frak_L(spec, s, cutoff) * dirichlet_series_D(spec, shifted, cutoff, true).value;
  }
  out.value = out.l_part;
  if (spec.l % 2 == 0) {
    LValue h = dirichlet_L_depleted(Rational(sigma) - spec.l / 2, spec.chi * spec.psi.character,
                                    spec.level, prec);
    out.hecke_part = h.value;
    out.value *= h.value;
  }
  return out;
}

NormalizedValue normalized_special_value(const LSeriesSpec& spec, long sigma,
                                         const Complex& petersson_norm, long cutoff,
                                         const Integer& max_height, bool allow_outside) {
  const long prec = spec.prec;
  Real tol = ldexp(Real(1L, prec), -(prec / 2));
  if (!(petersson_norm.re() > 0L) || abs(petersson_norm.im()) > tol * petersson_norm.re()) {
    fail(ErrorCode::kDomain, "Petersson norm must be positive");
  }
  BoldLambda bl = bold_lambda(spec, sigma, cutoff, allow_outside);
  NormalizedValue out;
  out.e_sigma = exponent_e_sigma(spec.n, spec.k.get_num().get_si(), spec.l, sigma);
  Real denom = pow(Real::pi(prec), out.e_sigma) * petersson_norm.re();
  out.value = bl.value / denom;
  out.recognized = rational_recognize(out.value, max_height);
  if (out.recognized) {
    Integer p = abs(out.recognized->get_num());
    Integer q = out.recognized->get_den();
    out.height = p > q ? p : q;
  }
  return out;
}

}  // namespace sjf
