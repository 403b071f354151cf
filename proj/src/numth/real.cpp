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

#include "sjf/real.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <cstring>

#include "sjf/error.hpp"

namespace sjf {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long clamp_prec(long p) { return std::max(p, 2L); }

template <typename F>
Real unary(const Real& x, F f) {
  Real r(0L, x.working_prec());
  f(r.raw(), x.raw(), kRnd);
  return r;
}

}  // namespace

long default_precision_from_env() {
  const char* env = std::getenv("SJF_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < kMinPrecision) return kDefaultPrecision;
  return v;
}

Real::Real() {
  mpfr_init2(v_, kMinPrecision);
  mpfr_set_zero(v_, 1);
  prec_ = 0;
}

Real::Real(long v, long prec) : prec_(clamp_prec(prec)) {
  mpfr_init2(v_, prec_);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(const Integer& v, long prec) : prec_(clamp_prec(prec)) {
  mpfr_init2(v_, prec_);
  mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

Real::Real(const Rational& v, long prec) : prec_(clamp_prec(prec)) {
  mpfr_init2(v_, prec_);
  mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

Real::Real(double v, long prec) : prec_(clamp_prec(prec)) {
  mpfr_init2(v_, prec_);
  mpfr_set_d(v_, v, kRnd);
}

Real Real::from_string(const std::string& s, long prec) {
  Real r(0L, prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, kRnd) != 0) {
    fail(ErrorCode::kParse, "malformed real literal '" + s + "'");
  }
  return r;
}

Real Real::pi(long prec) {
  Real r(0L, prec);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

Real::Real(const Real& o) : prec_(o.prec_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, kRnd);
}

Real::Real(Real&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(v_, 2);
  mpfr_swap(v_, o.v_);
  o.prec_ = 0;
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, kRnd);
    prec_ = o.prec_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  std::swap(prec_, o.prec_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_prec(long prec) const {
  Real r(0L, prec);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

long result_prec(const Real& a, const Real& b) {
  if (!a.has_prec()) return b.working_prec();
  if (!b.has_prec()) return a.working_prec();
  return std::min(a.prec(), b.prec());
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, kRnd);
  return r;
}

Rational Real::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

long Real::exponent2() const {
  if (is_zero()) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string Real::str(int digits) const {
  if (digits <= 0) digits = static_cast<int>(working_prec() * 0.30103) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

#define SJF_BINOP(OP, FN)                                  \
  Real operator OP(const Real& a, const Real& b) {         \
    Real r(0L, result_prec(a, b));                         \
    FN(r.raw(), a.raw(), b.raw(), kRnd);                   \
    return r;                                              \
  }
SJF_BINOP(+, mpfr_add)
SJF_BINOP(-, mpfr_sub)
SJF_BINOP(*, mpfr_mul)
SJF_BINOP(/, mpfr_div)
#undef SJF_BINOP

Real operator*(const Real& a, long b) {
  Real r(0L, a.working_prec());
  mpfr_mul_si(r.raw(), a.raw(), b, kRnd);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r(0L, a.working_prec());
  mpfr_div_si(r.raw(), a.raw(), b, kRnd);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(0L, a.working_prec());
  mpfr_add_si(r.raw(), a.raw(), b, kRnd);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(0L, a.working_prec());
  mpfr_sub_si(r.raw(), a.raw(), b, kRnd);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()); }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()); }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()); }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()); }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()); }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real tgamma(const Real& x) { return unary(x, mpfr_gamma); }

Real floor(const Real& x) {
  Real r(0L, x.working_prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real lgamma_abs(const Real& x) {
  Real r(0L, x.working_prec());
  int sgn = 0;
  mpfr_lgamma(r.raw(), &sgn, x.raw(), kRnd);
  return r;
}

Real gamma_upper(const Real& a, const Real& x) {
  Real r(0L, result_prec(a, x));
  mpfr_gamma_inc(r.raw(), a.raw(), x.raw(), kRnd);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(0L, result_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(0L, result_prec(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(0L, x.working_prec());
  mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(0L, x.working_prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real epsilon(long bits) { return ldexp(Real(1L, bits), -bits); }

long Complex::prec() const { return result_prec(re_, im_); }

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }
Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

std::string Complex::str(int digits) const {
  return "(" + re_.str(digits) + "," + im_.str(digits) + ")";
}

Complex operator+(const Complex& a, const Complex& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}
Complex operator-(const Complex& a, const Complex& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  if (d.is_zero()) fail(ErrorCode::kDomain, "complex division by zero");
  return {(a.re() * b.re() + a.im() * b.im()) / d,
          (a.im() * b.re() - a.re() * b.im()) / d};
}
Complex operator*(const Complex& a, const Real& b) { return {a.re() * b, a.im() * b}; }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) { return {a.re() / b, a.im() / b}; }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
  Real r(0L, z.prec());
  mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), kRnd);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  Real s(0L, z.prec()), c(0L, z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), kRnd);
  return {m * c, m * s};
}

Complex log(const Complex& z) {
  if (z.is_zero()) fail(ErrorCode::kDomain, "logarithm of zero");
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  return exp(Complex(log(z).re() / 2, arg(z) / 2));
}

Complex pow(const Complex& z, const Real& a) {
  if (z.is_zero()) {
    if (a > 0L) return z;
    fail(ErrorCode::kPole, "zero raised to a non-positive power");
  }
  Complex l = log(z);
  return exp(Complex(l.re() * a, l.im() * a));
}

Complex pow(const Complex& z, const Complex& a) {
  if (z.is_zero()) {
    if (a.re() > 0L) return z;
    fail(ErrorCode::kPole, "zero raised to a non-positive power");
  }
  return exp(log(z) * a);
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1L, z.prec()), Real(0L, z.prec())) / pow(z, -n);
  Complex result(Real(1L, z.prec()), Real(0L, z.prec()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Complex sin(const Complex& z) {
  return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())};
}

Complex expi2pi(const Complex& x) {
  Real tp = Real::pi(x.prec()) * 2;
  return exp(Complex(-x.im() * tp, x.re() * tp));
}

Complex expi2pi(const Real& x) {
  Real t = Real::pi(x.working_prec()) * x * 2;
  Real s(0L, x.working_prec()), c(0L, x.working_prec());
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), kRnd);
  return {c, s};
}

Complex unit_root(long j, long m, long prec) {
  return expi2pi(Real(ratio(j, m), prec));
}

Real rel_error(const Complex& a, const Complex& b) {
  Real d = abs(a - b);
  Real s = abs(b);
  if (s.is_zero()) return d;
  return d / s;
}

Real rel_error(const Real& a, const Real& b) {
  Real d = abs(a - b);
  Real s = abs(b);
  if (s.is_zero()) return d;
  return d / s;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail(ErrorCode::kParse, "empty rational literal");
  std::string body = s;
  size_t start = (body[0] == '-' || body[0] == '+') ? 1 : 0;
  if (start == body.size()) fail(ErrorCode::kParse, "malformed rational '" + s + "'");
  size_t slash = body.find('/');
  for (size_t i = start; i < body.size(); ++i) {
    char c = body[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (c == '/' && i == slash))) {
      fail(ErrorCode::kParse, "malformed rational '" + s + "'");
    }
  }
  if (slash != std::string::npos && (slash == start || slash + 1 == body.size())) {
    fail(ErrorCode::kParse, "malformed rational '" + s + "'");
  }
  if (body[0] == '+') body = body.substr(1);
  Rational q;
  if (q.set_str(body, 10) != 0) fail(ErrorCode::kParse, "malformed rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::kParse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

}  // namespace sjf
