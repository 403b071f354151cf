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

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace sjf {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr long kDefaultPrecision = 128;
inline constexpr long kMinPrecision = 64;

// Reads SJF_PRECISION from the environment, falling back to 128 bits.
long default_precision_from_env();

// Arbitrary precision real. Each value owns its precision; binary operations
// produce a result at the smaller of the two operand precisions. A
// default-constructed value is an exact zero whose precision is "unset" and
// adopts the precision of whatever it is combined with.
class Real {
 public:
  Real();
  Real(long v, long prec);
  Real(const Integer& v, long prec);
  Real(const Rational& v, long prec);
  Real(double v, long prec);
  static Real from_string(const std::string& s, long prec);
  static Real pi(long prec);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  long prec() const { return prec_; }
  bool has_prec() const { return prec_ != 0; }
  // Precision used when this value participates in arithmetic.
  long working_prec() const { return prec_ ? prec_ : kMinPrecision; }
  Real with_prec(long prec) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rational to_rational() const;
  long exponent2() const;  // floor(log2|x|)+1, or LONG_MIN for zero
  // Scientific decimal string with `digits` significant digits.
  std::string str(int digits = 0) const;

 private:
  mpfr_t v_;
  long prec_ = 0;
};

long result_prec(const Real& a, const Real& b);

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real tgamma(const Real& x);
Real lgamma_abs(const Real& x);
// Upper incomplete gamma Γ(a, x).
Real gamma_upper(const Real& a, const Real& x);

// 2^-bits relative to 1, at precision bits.
Real epsilon(long bits);

class Complex {
 public:
  Complex() = default;
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(std::move(re)), im_() {}
  Complex(const Rational& re, long prec) : re_(re, prec), im_(0L, prec) {}
  static Complex i(long prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  long prec() const;
  Complex with_prec(long prec) const { return {re_.with_prec(prec), im_.with_prec(prec)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex operator-() const { return {-re_, -im_}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string str(int digits = 0) const;

 private:
  Real re_, im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Real& a);
Complex pow(const Complex& z, const Complex& a);
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
// e(x) = exp(2 pi i x).
Complex expi2pi(const Complex& x);
Complex expi2pi(const Real& x);
// Unit root exp(2 pi i j / m).
Complex unit_root(long j, long m, long prec);

// max(|a-b|/|b|) style relative error; falls back to absolute when b = 0.
Real rel_error(const Complex& a, const Complex& b);
Real rel_error(const Real& a, const Real& b);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// a/b in lowest terms (mpq_class(a, b) does not canonicalize).
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace sjf
