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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "sjf/corpus.hpp"
#include "sjf/error.hpp"
#include "sjf/lfunction.hpp"

using namespace sjf;

namespace {

constexpr long kPrec = 128;

Complex gauss(const Rational& re, const Rational& im) {
  return Complex(Real(re, kPrec), Real(im, kPrec));
}

LSeriesSpec corpus_spec(const std::string& name) {
  return load_corpus(std::string(SJF_CORPUS_DIR) + "/" + name).table().to_spec(kPrec);
}

Real tiny() { return epsilon(kPrec - 24); }

}  // namespace

TEST_CASE("Euler factors") {
  // (1 - mu X)(1 - X/mu) = 1 - (mu + 1/mu) X + X^2 with mu + 1/mu = 6/5.
  auto f = euler_factor_from_satake({gauss(ratio(3, 5), ratio(4, 5))});
  REQUIRE(f.poly.size() == 3);
  CHECK(abs(f.poly[1] - gauss(ratio(-6, 5), 0)) < tiny());
  CHECK(abs(f.poly[2] - gauss(1, 0)) < tiny());
  // (1 + X^2)(1 - X)^2.
  auto g = euler_factor_from_satake({gauss(0, 1), gauss(1, 0)});
  const long expect[] = {1, -2, 2, -2, 1};
  REQUIRE(g.poly.size() == 5);
  for (int j = 0; j < 5; ++j) CHECK(abs(g.poly[j] - gauss(expect[j], 0)) < tiny());
  Complex X = gauss(ratio(1, 3), ratio(1, 7));
  Complex direct = (gauss(1, 0) + X * X) * (gauss(1, 0) - X) * (gauss(1, 0) - X);
  CHECK(rel_error(g.eval(X), direct) < tiny());

  CHECK_NOTHROW(euler_factor_from_poly({gauss(1, 0), gauss(3, 0), gauss(1, 0)}));
  try {
    euler_factor_from_poly({gauss(1, 0), gauss(2, 0), gauss(3, 0)});
    FAIL("non-palindromic factor accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvariant);
  }
  CHECK_THROWS_AS(euler_factor_from_poly({gauss(1, 0), gauss(2, 0)}), Error);
}

TEST_CASE("eigenvalues from Satake data") {
  for (const char* name : {"satake_0_n1_l1.satake", "satake_3_n2_l2.satake"}) {
    auto spec = corpus_spec(name);
    eigenvalues_from_euler(spec, 2000);
    // lambda(p) = p^(n + l/2) sum_i (mu_i + 1/mu_i).
    // chi(2) = 0, so lambda(2) is not determined and stored as zero.
    CHECK(spec.eigenvalues.at(2).is_zero());
    for (long p : {5L, 7L, 13L, 101L, 1999L}) {
      Complex s = gauss(0, 0);
      for (const auto& m : *spec.euler.at(p).satake) s += m + gauss(1, 0) / m;
      Real scale = pow(Real(p, kPrec), Real(Rational(spec.n) + ratio(spec.l, 2), kPrec));
      Complex expect = s * scale;
      CHECK(abs(spec.eigenvalues.at(p) - expect) <= tiny() * max(Real(1L, kPrec), abs(expect)));
    }
    // Multiples of the level vanish.
    bool vanishes = spec.eigenvalues.count(3) == 0 || spec.eigenvalues.at(3).is_zero();
    CHECK(vanishes);
    auto m = check_multiplicativity(spec, 2000, epsilon(100));
    CHECK(m.pass);
    CHECK(m.pairs_checked > 1000);
  }
}

TEST_CASE("Euler product against the Dirichlet series") {
  auto spec = corpus_spec("satake_1_n1_l2.satake");
  const long N = 500;
  eigenvalues_from_euler(spec, N);
  Complex s(Real(Rational(spec.n) + ratio(spec.l, 2) + 2, kPrec), Real(ratio(7, 10), kPrec));
  Complex shift(Real(Rational(spec.n) + ratio(spec.l, 2), kPrec), Real(0L, kPrec));
  auto D = dirichlet_series_D(spec, s + shift, N);
  REQUIRE(D.tail_bound);
  Complex fl = frak_L(spec, s, N);
  auto E = euler_product_L(spec, s, N);
  CHECK(abs(fl * D.value - E.value) <= abs(fl) * *D.tail_bound);
  // Outside the convergence window the series needs an explicit opt-in.
  Complex low(Real(2L, kPrec), Real(0L, kPrec));
  CHECK_THROWS_AS(dirichlet_series_D(spec, low, N), Error);
  CHECK(dirichlet_series_D(spec, low, N, true).outside_window);
}

TEST_CASE("divisor tail") {
  // d_1 = 1: sum_{a > 10} a^-2 = zeta(2) - H_10^(2).
  Real sigma(2L, kPrec);
  Real partial(0L, kPrec);
  for (long a = 1; a <= 10; ++a) partial += Real(Rational(1, a * a), kPrec);
  Real pi = Real::pi(kPrec);
  CHECK(rel_error(divisor_tail(1, sigma, 10), pi * pi / 6 - partial) < tiny());
}

TEST_CASE("pi exponents") {
  CHECK(exponent_e_sigma(2, 30, 1, 16) == 86);
  // n = 1, k = 20, l = 2, sigma = 8: (20 - 2 + 8) - (1 + 1 - 8 + 1).
  CHECK(exponent_e_sigma(1, 20, 2, 8) == 31);
  CHECK(in_sigma_window(2, 30, 1, 16));
  CHECK_FALSE(in_sigma_window(2, 30, 1, 15));
  CHECK_FALSE(in_sigma_window(2, 30, 1, 22));
  for (int n = 1; n <= 3; ++n) {
    for (int l = 1; l <= 4; ++l) {
      for (long k = 10; k <= 60; ++k) {
        for (long sigma = 0; sigma <= k; ++sigma) {
          if (!in_sigma_window(n, k, l, sigma)) continue;
          CHECK(exponent_e_sigma(n, k, l, sigma) == exponent_e_sigma_general(n, {k}, l, sigma));
        }
      }
    }
  }
  // d = 2 with equal weights doubles the d = 1 value.
  CHECK(exponent_e_sigma_general(1, {20, 20}, 1, 9) == 2 * exponent_e_sigma(1, 20, 1, 9));
}

TEST_CASE("c_{S,k}") {
  auto c = c_Sk(QMatrix::identity(1), Rational(12), 1, Rational(6));
  CHECK(c.gamma_ratio == ratio(2, 33));
  // 2^-1 2^(2 - 24 - 12) pi (2/33).
  CHECK(c.value.q == Rational(1) / (Rational(33) * Rational(Integer(1) << 34)));
  CHECK(c.value.pi_half_power == 2);
  CHECK(c.sign_unknown);
  CHECK_THROWS_AS(c_Sk(QMatrix::identity(1), Rational(2), 1, Rational(0)), Error);
}

TEST_CASE("normalizer values") {
  const auto one = DirichletCharacter::principal(1);
  // l odd, N = 2: zeta(4s - 2) at s = -1/4 is zeta(-3) = 1/120.
  auto v = lambda_normalizer(1, 2, 1, one, one, ratio(-1, 4), kPrec);
  REQUIRE(v.exact);
  CHECK(*v.exact == ratio(1, 120));
  // l even, N = 1: L(2s - 1, chi_-3) at s = 1/2 is 1/3; depleting at 2
  // multiplies by 1 - chi_-3(2) = 2.
  auto chi3 = DirichletCharacter::kronecker(-3);
  auto h = lambda_normalizer(2, 1, 1, one, chi3, ratio(1, 2), kPrec);
  REQUIRE(h.exact);
  CHECK(*h.exact == ratio(1, 3));
  auto h2 = lambda_normalizer(2, 1, 2, one, chi3, ratio(1, 2), kPrec);
  REQUIRE(h2.exact);
  CHECK(*h2.exact == ratio(2, 3));
}

TEST_CASE("recognition of an engineered special value") {
  auto spec = corpus_spec("satake_0_n1_l1.satake");
  const long sigma = 8, cutoff = 1000;
  REQUIRE(in_sigma_window(spec.n, 18, spec.l, sigma));
  auto bl = bold_lambda(spec, sigma, cutoff);
  long e = exponent_e_sigma(spec.n, 18, spec.l, sigma);
  Real norm = bl.value.re() / (pow(Real::pi(kPrec), e) * Real(ratio(3, 7), kPrec));
  auto nv = normalized_special_value(spec, sigma, Complex(norm, Real(0L, kPrec)), cutoff,
                                     Integer(10));
  REQUIRE(nv.recognized);
  CHECK(*nv.recognized == ratio(3, 7));
  CHECK(nv.height == 7);
  CHECK(nv.e_sigma == e);
  CHECK_THROWS_AS(bold_lambda(spec, 7, cutoff), Error);
}
