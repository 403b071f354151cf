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

#include "sjf/numth.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sjf/error.hpp"
#include "sjf/matrix.hpp"

namespace sjf {

namespace {

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) { return q.get_num().get_si(); }

Rational floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// Gamma(a) for a in (1/2)Z as q * sqrt(pi)^h, h in {0, 1}.
std::pair<Rational, int> gamma_half_integer(const Rational& a) {
  if (is_integer(a)) {
    long m = to_long(a);
    if (m <= 0) fail(ErrorCode::kPole, "gamma pole at " + rational_str(a));
    return {Rational(factorial(m - 1)), 0};
  }
  // a = m + 1/2
  long m = to_long(floor_q(a));
  if (m >= 0) {
    Integer num = factorial(2 * m);
    Integer den = factorial(m);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * m);
    Rational q(num, den);
    q.canonicalize();
    return {q, 1};
  }
  long j = -m;  // a = 1/2 - j
  Integer num = factorial(j);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * j);
  if (j % 2) num = -num;
  Rational q(num, factorial(2 * j));
  q.canonicalize();
  return {q, 1};
}

}  // namespace

Real PiPower::eval(long prec) const {
  Real r(q, prec + 16);
  if (pi_half_power != 0) r *= pow(sqrt(Real::pi(prec + 16)), pi_half_power);
  return r.with_prec(prec);
}

PiPower gamma_n_exact(int n, const Rational& x) {
  if (n < 1) fail(ErrorCode::kDomain, "gamma_n needs n >= 1");
  Rational twice = x * 2;
  if (!is_integer(twice)) fail(ErrorCode::kDomain, "exact gamma_n needs 2x integral");
  PiPower out{Rational(1), long(n) * (n - 1) / 2};
  for (int i = 0; i < n; ++i) {
    auto [q, h] = gamma_half_integer(x - ratio(i, 2));
    out.q *= q;
    out.pi_half_power += h;
  }
  return out;
}

Real gamma_n(int n, const Rational& x, long prec) {
  if (is_integer(Rational(x * 2))) return gamma_n_exact(n, x).eval(prec);
  const long wp = prec + 16;
  Real r = pow(Real::pi(wp), Real(ratio(long(n) * (n - 1), 4), wp));
  for (int i = 0; i < n; ++i) r *= tgamma(Real(Rational(x - ratio(i, 2)), wp));
  return r.with_prec(prec);
}

Complex complex_gamma(const Complex& z, long prec) {
  const long wp = prec + 24;
  Complex w = z.with_prec(wp);
  if (w.im().is_zero() && w.re() <= Real(0L, wp) && floor(w.re()) == w.re()) {
    fail(ErrorCode::kPole, "gamma pole at non-positive integer");
  }
  Real half(ratio(1, 2), wp);
  if (w.re() < half) {
    Complex one(Real(1L, wp), Real(0L, wp));
    Real pi = Real::pi(wp);
    Complex s = sin(w * pi);
    return (Complex(pi, Real(0L, wp)) / (s * complex_gamma(one - w, wp))).with_prec(prec);
  }
  return exp(complex_lgamma(w, wp)).with_prec(prec);
}

Complex complex_lgamma(const Complex& z, long prec) {
  // Shifted Stirling series; valid for Re z >= 1/2.
  const long wp = prec + 24;
  Complex w = z.with_prec(wp);
  const long K = prec * 35 / 100 + 10;
  long shift = 0;
  Complex prod(Real(1L, wp), Real(0L, wp));
  while (abs(w) < Real(K, wp) || w.re() < Real(K / 2, wp)) {
    prod *= w;
    w += Complex(Real(1L, wp), Real(0L, wp));
    ++shift;
  }
  Real half(ratio(1, 2), wp);
  Complex lw = log(w);
  Complex res = (w - Complex(half, Real(0L, wp))) * lw - w +
                Complex(log(Real::pi(wp) * 2) / 2, Real(0L, wp));
  const int max_terms = static_cast<int>(K);
  auto b = bernoulli_numbers(2 * max_terms + 2);
  Complex wpow = w;
  Complex w2 = w * w;
  Real eps = epsilon(wp);
  for (int j = 1; j <= max_terms; ++j) {
    Rational c = b[2 * j] / Rational(Integer(2 * j) * (2 * j - 1));
    Complex term = Complex(Real(c, wp), Real(0L, wp)) / wpow;
    res += term;
    if (abs(term) < eps * abs(res)) break;
    wpow *= w2;
  }
  if (shift > 0) res -= log(prod);
  return res.with_prec(prec);
}

Complex gamma_n(int n, const Complex& x, long prec) {
  const long wp = prec + 16;
  Real pe(ratio(long(n) * (n - 1), 4), wp);
  Complex r(pow(Real::pi(wp), pe), Real(0L, wp));
  for (int i = 0; i < n; ++i) {
    Complex arg = x.with_prec(wp) - Complex(ratio(i, 2), wp);
    r *= complex_gamma(arg, wp);
  }
  return r.with_prec(prec);
}

Rational gamma_n_ratio(int n, const Rational& a, const Rational& b) {
  if (n < 1) fail(ErrorCode::kDomain, "gamma_n_ratio needs n >= 1");
  // Group the arguments a - i/2 and b - i/2 by their class modulo 1.
  std::map<Rational, std::vector<Rational>> top, bot;
  for (int i = 0; i < n; ++i) {
    Rational ta = a - ratio(i, 2), tb = b - ratio(i, 2);
    for (const Rational* v : {&ta, &tb}) {
      if (is_integer(*v) && *v <= 0) {
        fail(ErrorCode::kPole, "gamma pole at " + rational_str(*v));
      }
    }
    top[ta - floor_q(ta)].push_back(ta);
    bot[tb - floor_q(tb)].push_back(tb);
  }
  Rational out = 1;
  for (auto& [cls, vals] : top) {
    auto it = bot.find(cls);
    if (it == bot.end() || it->second.size() != vals.size()) {
      fail(ErrorCode::kDomain, "gamma_n(" + rational_str(a) + ")/gamma_n(" + rational_str(b) +
                                   ") is not rational");
    }
    std::sort(vals.begin(), vals.end());
    std::sort(it->second.begin(), it->second.end());
    for (size_t j = 0; j < vals.size(); ++j) {
      // Gamma(u)/Gamma(v) with u - v integral.
      Rational u = vals[j], v = it->second[j];
      Rational d = u - v;
      long steps = to_long(d);
      if (steps >= 0) {
        for (long s = 0; s < steps; ++s) out *= v + s;
      } else {
        for (long s = 0; s < -steps; ++s) out /= u + s;
      }
    }
  }
  if (top.size() != bot.size()) fail(ErrorCode::kDomain, "gamma_n ratio is not rational");
  return out;
}

std::vector<Rational> bernoulli_numbers(int m) {
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (int k = 1; k <= m; ++k) {
    if (k > 1 && k % 2 == 1) {
      b[k] = 0;
      continue;
    }
    Rational acc = 0;
    for (int j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * b[j];
    b[k] = -acc / (k + 1);
  }
  return b;
}

Rational bernoulli_poly(int m, const Rational& x, const std::vector<Rational>& b) {
  Rational acc = 0;
  std::vector<Rational> powers(m + 1);
  powers[0] = 1;
  for (int i = 1; i <= m; ++i) powers[i] = powers[i - 1] * x;
  for (int k = 0; k <= m; ++k) acc += Rational(binomial(m, k)) * b[k] * powers[m - k];
  return acc;
}

// ---------------------------------------------------------------------------
// Characters

long kronecker_symbol(long a, long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  long result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v2 = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v2;
  }
  if (v2 > 0) {
    if (a % 2 == 0) return 0;
    long r8 = ((a % 8) + 8) % 8;
    if ((v2 % 2 == 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (a/n), n odd positive.
  long aa = ((a % n) + n) % n;
  long nn = n;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      long r = nn % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, nn);
    if (aa % 4 == 3 && nn % 4 == 3) result = -result;
    aa %= nn;
  }
  return nn == 1 ? result : 0;
}

DirichletCharacter::DirichletCharacter(long modulus, long order, std::vector<long> exps)
    : modulus_(modulus), order_(order), exps_(std::move(exps)) {}

DirichletCharacter DirichletCharacter::principal(long modulus) {
  if (modulus < 1) fail(ErrorCode::kDomain, "character modulus must be positive");
  std::vector<long> e(modulus);
  for (long a = 0; a < modulus; ++a) e[a] = std::gcd(a, modulus) == 1 ? 0 : -1;
  return DirichletCharacter(modulus, 1, std::move(e));
}

DirichletCharacter DirichletCharacter::kronecker(long disc) {
  if (disc == 1) return principal(1);
  long r = ((disc % 4) + 4) % 4;
  if (disc == 0 || (r != 0 && r != 1)) {
    fail(ErrorCode::kDomain, "Kronecker character needs a discriminant = 0,1 mod 4");
  }
  long N = disc < 0 ? -disc : disc;
  std::vector<long> e(N);
  bool nontrivial = false;
  for (long a = 0; a < N; ++a) {
    long v = kronecker_symbol(disc, a);
    e[a] = v == 0 ? -1 : (v == 1 ? 0 : 1);
    if (v == -1) nontrivial = true;
  }
  return DirichletCharacter(N, nontrivial ? 2 : 1, std::move(e));
}

DirichletCharacter DirichletCharacter::from_table(long modulus, long order,
                                                  std::vector<long> exps) {
  if (modulus < 1 || order < 1 || long(exps.size()) != modulus) {
    fail(ErrorCode::kInvariant, "character table size must equal the modulus");
  }
  for (long a = 0; a < modulus; ++a) {
    bool coprime = std::gcd(a, modulus) == 1;
    if (coprime != (exps[a] >= 0)) {
      fail(ErrorCode::kInvariant, "character must vanish exactly on non-units");
    }
    if (exps[a] >= order) fail(ErrorCode::kInvariant, "character exponent out of range");
  }
  if (exps[1 % modulus] != 0) fail(ErrorCode::kInvariant, "character must send 1 to 1");
  for (long a = 0; a < modulus; ++a) {
    if (exps[a] < 0) continue;
    for (long b = a; b < modulus; ++b) {
      if (exps[b] < 0) continue;
      if (exps[(a * b) % modulus] != (exps[a] + exps[b]) % order) {
        fail(ErrorCode::kInvariant, "character table is not multiplicative");
      }
    }
  }
  return DirichletCharacter(modulus, order, std::move(exps));
}

long DirichletCharacter::exponent(long a) const {
  long r = ((a % modulus_) + modulus_) % modulus_;
  return exps_[r];
}

bool DirichletCharacter::is_principal() const {
  for (long e : exps_)
    if (e > 0) return false;
  return true;
}

int DirichletCharacter::parity() const {
  long e = exponent(-1);
  // chi(-1) = +-1 so e is 0 or order/2.
  return e == 0 ? 1 : -1;
}

int DirichletCharacter::real_value(long a) const {
  if (!is_real()) fail(ErrorCode::kDomain, "exact value requested for a non-real character");
  long e = exponent(a);
  if (e < 0) return 0;
  return e == 0 ? 1 : -1;
}

Complex DirichletCharacter::value(long a, long prec) const {
  long e = exponent(a);
  if (e < 0) return Complex(Real(0L, prec), Real(0L, prec));
  if (e == 0) return Complex(Real(1L, prec), Real(0L, prec));
  if (2 * e == order_) return Complex(Real(-1L, prec), Real(0L, prec));
  return unit_root(e, order_, prec);
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  long N = std::lcm(modulus_, o.modulus_);
  long ord = std::lcm(order_, o.order_);
  std::vector<long> e(N);
  long g = ord;
  for (long a = 0; a < N; ++a) {
    long x = exponent(a), y = o.exponent(a);
    if (x < 0 || y < 0) {
      e[a] = -1;
      continue;
    }
    e[a] = (x * (ord / order_) + y * (ord / o.order_)) % ord;
    g = std::gcd(g, e[a]);
  }
  if (g == 0) g = ord;
  for (auto& v : e)
    if (v > 0) v /= g;
  return DirichletCharacter(N, ord / g, std::move(e));
}

std::string DirichletCharacter::str() const {
  std::string s = "modulus=" + std::to_string(modulus_) + " order=" + std::to_string(order_) +
                  " values=[";
  for (long a = 0; a < modulus_; ++a) {
    if (a) s += ",";
    s += exps_[a] < 0 ? std::string("*") : std::to_string(exps_[a]);
  }
  return s + "]";
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (long p = 2; p <= n; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (long q = p * p; q <= n; q += p) sieve[q] = false;
  }
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

long squarefree_kernel(const Integer& v) {
  if (v == 0) fail(ErrorCode::kDomain, "squarefree kernel of zero");
  if (!v.fits_slong_p()) fail(ErrorCode::kDomain, "value too large for squarefree kernel");
  long x = v.get_si();
  long sign = x < 0 ? -1 : 1;
  long out = 1;
  for (auto [p, e] : factorize(x))
    if (e % 2) out *= p;
  return sign * out;
}

long fundamental_discriminant(const Rational& generator) {
  Integer prod = generator.get_num() * generator.get_den();
  long d = squarefree_kernel(prod);
  if (d == 1) return 1;
  long r = ((d % 4) + 4) % 4;
  return r == 1 ? d : 4 * d;
}

QuadCharacterPsiS psi_S(const QMatrix& S) {
  if (!S.is_half_integral() || !S.is_positive_definite()) {
    fail(ErrorCode::kDomain, "index matrix must be positive definite and half-integral");
  }
  QuadCharacterPsiS out;
  out.l = S.rows();
  Rational det2 = (S * Rational(2)).det();
  if (out.l % 2 == 1) {
    out.primary_generator = det2;
  } else {
    out.primary_generator = (out.l / 2) % 2 ? Rational(-det2) : det2;
    Rational ds = S.det();
    out.alternate_generator = (out.l / 2) % 2 ? Rational(-ds) : ds;
    out.alternate_discriminant = fundamental_discriminant(*out.alternate_generator);
  }
  out.primary_discriminant = fundamental_discriminant(out.primary_generator);
  out.character = DirichletCharacter::kronecker(out.primary_discriminant);
  if (out.alternate_discriminant) {
    out.branches_agree = *out.alternate_discriminant == out.primary_discriminant;
  }
  return out;
}

// ---------------------------------------------------------------------------
// L-values

Rational generalized_bernoulli(int m, const DirichletCharacter& chi) {
  auto b = bernoulli_numbers(m);
  const long f = chi.modulus();
  Rational acc = 0;
  for (long a = 1; a <= f; ++a) {
    int v = chi.real_value(a);
    if (v == 0) continue;
    acc += v * bernoulli_poly(m, ratio(a, f), b);
  }
  Integer fp;
  mpz_pow_ui(fp.get_mpz_t(), Integer(f).get_mpz_t(), static_cast<unsigned long>(m - 1));
  return acc * Rational(fp);
}

namespace {

Complex real_pow_neg(const Real& x, const Complex& s) {
  // x^(-s) for real x > 0.
  Real lx = log(x);
  return exp(Complex(-(s.re() * lx), -(s.im() * lx)));
}

Real digamma_rational(const Rational& x, long prec) {
  const long wp = prec + 24;
  const long N = wp / 2 + 10;
  Real acc(0L, wp);
  for (long k = 0; k < N; ++k) acc -= Real(1L, wp) / Real(Rational(x + k), wp);
  Real w(Rational(x + N), wp);
  Real res = log(w) - Real(1L, wp) / (w * 2);
  auto b = bernoulli_numbers(2 * wp + 2);
  Real w2 = w * w, wpow = w2;
  Real eps = epsilon(wp);
  for (long j = 1; 2 * j <= 2 * wp; ++j) {
    Real term = Real(Rational(b[2 * j] / (2 * j)), wp) / wpow;
    res -= term;
    if (abs(term) < eps * abs(res)) break;
    wpow *= w2;
  }
  return (res + acc).with_prec(prec);
}

}  // namespace

Complex hurwitz_zeta(const Complex& s, const Rational& a, long prec) {
  if (a <= 0) fail(ErrorCode::kDomain, "Hurwitz zeta needs a > 0");
  const long wp = prec + 32;
  Complex sw = s.with_prec(wp);
  if (sw.im().is_zero() && sw.re() == Real(1L, wp)) {
    fail(ErrorCode::kPole, "Hurwitz zeta pole at s = 1");
  }
  long sabs = static_cast<long>(abs(sw).to_double()) + 1;
  const long N = wp / 2 + sabs + 10;
  Complex acc(Real(0L, wp), Real(0L, wp));
  for (long k = 0; k < N; ++k) acc += real_pow_neg(Real(Rational(a + k), wp), sw);
  Real x(Rational(a + N), wp);
  Complex one(Real(1L, wp), Real(0L, wp));
  Complex xs = real_pow_neg(x, sw);  // x^-s
  acc += xs * x / (sw - one);
  acc += xs / Real(2L, wp);
  // Euler-Maclaurin tail with B_2j/(2j)! * (s)_(2j-1) * x^(-s-2j+1).
  const int max_j = static_cast<int>(wp);
  auto b = bernoulli_numbers(2 * max_j + 2);
  Complex poch = sw;                 // (s)_1
  Complex xpow = xs / x;             // x^(-s-1)
  Real invx2 = Real(1L, wp) / (x * x);
  Real eps = epsilon(wp);
  Integer fact = 2;                  // (2j)!
  for (int j = 1; j <= max_j; ++j) {
    Real coef(Rational(b[2 * j] / Rational(fact)), wp);
    Complex term = poch * xpow * coef;
    acc += term;
    if (poch.is_zero()) break;
    if (j > 2 && abs(term) < eps * abs(acc)) break;
    // Advance to j+1.
    poch *= (sw + Complex(Real(2L * j - 1, wp), Real(0L, wp))) *
            (sw + Complex(Real(2L * j, wp), Real(0L, wp)));
    xpow *= invx2;
    fact *= Integer(2 * j + 1) * (2 * j + 2);
  }
  return acc.with_prec(prec);
}

namespace {

LValue l_via_hurwitz(const Complex& s, const DirichletCharacter& chi, long prec) {
  const long wp = prec + 16;
  const long f = chi.modulus();
  Complex acc(Real(0L, wp), Real(0L, wp));
  for (long a = 1; a <= f; ++a) {
    if (chi.is_zero_at(a)) continue;
    acc += chi.value(a, wp) * hurwitz_zeta(s, ratio(a, f), wp);
  }
  acc *= real_pow_neg(Real(f, wp), s.with_prec(wp));
  return {std::nullopt, acc.with_prec(prec)};
}

}  // namespace

LValue dirichlet_L(const Rational& s, const DirichletCharacter& chi, long prec) {
  if (is_integer(s) && s <= 0) {
    int m = static_cast<int>(1 - to_long(s));
    if (chi.is_real()) {
      Rational v = -generalized_bernoulli(m, chi) / m;
      return {v, Complex(v, prec)};
    }
    // Non-real character: exact rationals times numeric roots of unity.
    auto b = bernoulli_numbers(m);
    const long f = chi.modulus();
    Complex acc(Real(0L, prec + 16), Real(0L, prec + 16));
    for (long a = 1; a <= f; ++a) {
      if (chi.is_zero_at(a)) continue;
      acc += chi.value(a, prec + 16) * Real(bernoulli_poly(m, ratio(a, f), b), prec + 16);
    }
    Integer fp;
    mpz_pow_ui(fp.get_mpz_t(), Integer(f).get_mpz_t(), static_cast<unsigned long>(m - 1));
    acc *= Real(Rational(-Rational(fp) / m), prec + 16);
    return {std::nullopt, acc.with_prec(prec)};
  }
  if (s == 1) {
    if (chi.is_principal()) fail(ErrorCode::kPole, "L(s, chi) has a pole at s = 1 for principal chi");
    const long wp = prec + 16;
    const long f = chi.modulus();
    Complex acc(Real(0L, wp), Real(0L, wp));
    for (long a = 1; a <= f; ++a) {
      if (chi.is_zero_at(a)) continue;
      acc += chi.value(a, wp) * digamma_rational(ratio(a, f), wp);
    }
    acc *= Real(ratio(-1, f), wp);
    return {std::nullopt, acc.with_prec(prec)};
  }
  return l_via_hurwitz(Complex(s, prec + 16), chi, prec);
}

LValue dirichlet_L(const Complex& s, const DirichletCharacter& chi, long prec) {
  if (s.im().is_zero()) {
    Rational q = s.re().to_rational();
    if (is_integer(q) && (q <= 0 || q == 1)) return dirichlet_L(q, chi, prec);
  }
  return l_via_hurwitz(s, chi, prec);
}

LValue dirichlet_L_depleted(const Rational& s, const DirichletCharacter& chi, long c,
                            long prec) {
  if (c < 1) fail(ErrorCode::kDomain, "level must be positive");
  LValue base = dirichlet_L(s, chi, prec);
  bool exact = base.exact.has_value() && chi.is_real() && is_integer(s);
  Rational eq = exact ? *base.exact : Rational(0);
  const long wp = prec + 16;
  Complex val = base.value.with_prec(wp);
  for (auto [q, e] : factorize(c)) {
    (void)e;
    if (exact) {
      long sv = to_long(s);
      Integer qp;
      mpz_pow_ui(qp.get_mpz_t(), Integer(q).get_mpz_t(), static_cast<unsigned long>(sv < 0 ? -sv : sv));
      Rational qs = sv <= 0 ? Rational(qp) : Rational(Integer(1), qp);
      qs.canonicalize();
      eq *= Rational(1) - chi.real_value(q) * qs;
    }
    Complex qps = real_pow_neg(Real(q, wp), Complex(s, wp));
    val *= Complex(Real(1L, wp), Real(0L, wp)) - chi.value(q, wp) * qps;
  }
  if (exact) return {eq, Complex(eq, prec)};
  return {std::nullopt, val.with_prec(prec)};
}

LValue dirichlet_L_depleted(const Complex& s, const DirichletCharacter& chi, long c,
                            long prec) {
  if (s.im().is_zero()) {
    Rational q = s.re().to_rational();
    if (is_integer(q)) return dirichlet_L_depleted(q, chi, c, prec);
  }
  LValue base = dirichlet_L(s, chi, prec);
  const long wp = prec + 16;
  Complex val = base.value.with_prec(wp);
  for (auto [q, e] : factorize(c)) {
    (void)e;
    Complex qps = real_pow_neg(Real(q, wp), s.with_prec(wp));
    val *= Complex(Real(1L, wp), Real(0L, wp)) - chi.value(q, wp) * qps;
  }
  return {std::nullopt, val.with_prec(prec)};
}

// ---------------------------------------------------------------------------
// Recognition

std::optional<Rational> rational_recognize(const Complex& x, const Integer& max_height,
                                           std::optional<Real> tolerance) {
  const long prec = x.prec();
  Real tol = tolerance ? *tolerance : ldexp(Real(1L, prec), -(prec / 2));
  if (abs(x.im()) > tol) return std::nullopt;
  Real v = x.re();
  // Convergents h/k via the standard recurrence.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Real rem = v;
  for (int iter = 0; iter < 4 * prec; ++iter) {
    Real fl = floor(rem);
    Integer a = fl.to_rational().get_num();
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    Integer ah = abs(h);
    if (ah > max_height || k > max_height) return std::nullopt;
    Rational cand(h, k);
    cand.canonicalize();
    if (abs(v - Real(cand, prec)) <= tol) return cand;
    Real frac = rem - fl;
    if (frac.is_zero()) return std::nullopt;
    rem = Real(1L, prec) / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

}  // namespace sjf
