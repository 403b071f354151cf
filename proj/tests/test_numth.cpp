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

#include <cmath>
#include <vector>

#include "sjf/error.hpp"
#include "sjf/matrix.hpp"
#include "sjf/numth.hpp"

using namespace sjf;

namespace {

constexpr long kPrec = 160;

Real rel(const Real& a, const Real& b) { return rel_error(a, b); }
Real tight() { return epsilon(kPrec - 16); }

// Gamma(m/2) from Gamma(1/2) = sqrt(pi), Gamma(1) = 1 and x Gamma(x) = Gamma(x+1).
Real gamma_half_integer(long m) {
  Real g = (m % 2) ? sqrt(Real::pi(kPrec)) : Real(1L, kPrec);
  for (long j = (m % 2) ? 1 : 2; j < m; j += 2) g = g * Real(ratio(j, 2), kPrec);
  return g;
}

// Bernoulli numbers by the Akiyama-Tanigawa algorithm (B_1 = +1/2).
std::vector<Rational> akiyama_tanigawa(int m) {
  std::vector<Rational> out, a(m + 1);
  for (int i = 0; i <= m; ++i) {
    a[i] = ratio(1, i + 1);
    for (int j = i; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

long pow_mod(long b, long e, long m) {
  long r = 1;
  b %= m;
  if (b < 0) b += m;
  for (; e; e >>= 1, b = b * b % m) {
    if (e & 1) r = r * b % m;
  }
  return r;
}

bool is_prime_trial(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gamma at half-integers") {
  for (long m = 1; m <= 21; ++m) {
    CHECK(rel(tgamma(Real(ratio(m, 2), kPrec)), gamma_half_integer(m)) < tight());
    CHECK(rel(gamma_n(1, ratio(m, 2), kPrec), gamma_half_integer(m)) < tight());
  }
  auto g = gamma_n_exact(1, ratio(7, 2));
  CHECK(g.q == ratio(15, 8));
  CHECK(g.pi_half_power == 1);
}

TEST_CASE("multivariate gamma against products of the scalar gamma") {
  for (long m = 4; m <= 15; ++m) {
    Rational x = ratio(m, 2);
    Real expect = sqrt(Real::pi(kPrec)) * tgamma(Real(x, kPrec)) *
                  tgamma(Real(x - ratio(1, 2), kPrec));
    CHECK(rel(gamma_n(2, x, kPrec), expect) < tight());
    CHECK(rel(gamma_n_exact(2, x).eval(kPrec), expect) < tight());
  }
  Rational x = ratio(9, 2);
  Real expect3 = pow(Real::pi(kPrec), Real(ratio(3, 2), kPrec));
  for (int i = 0; i < 3; ++i) expect3 = expect3 * tgamma(Real(x - ratio(i, 2), kPrec));
  CHECK(rel(gamma_n(3, x, kPrec), expect3) < tight());
}

TEST_CASE("gamma ratios") {
  CHECK(gamma_n_ratio(1, Rational(7), Rational(5)) == 30);
  // Gamma(7/2) Gamma(3) / (Gamma(5/2) Gamma(2)) = 5/2 * 2.
  CHECK(gamma_n_ratio(2, ratio(7, 2), ratio(5, 2)) == 5);
  CHECK(gamma_n_ratio(1, ratio(3, 2), ratio(7, 2)) == ratio(4, 15));
  try {
    gamma_n_ratio(1, ratio(7, 2), Rational(5));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  CHECK_THROWS_AS(gamma_n_ratio(1, Rational(0), Rational(3)), Error);
}

TEST_CASE("complex gamma") {
  Complex z(Real(ratio(3, 10), kPrec), Real(ratio(7, 5), kPrec));
  Complex one(Rational(1), kPrec);
  CHECK(rel_error(complex_gamma(z + one, kPrec), z * complex_gamma(z, kPrec)) < tight());
  Complex half(ratio(1, 2), kPrec);
  CHECK(rel_error(complex_gamma(half, kPrec), Complex(sqrt(Real::pi(kPrec)))) < tight());
}

TEST_CASE("Bernoulli numbers") {
  auto b = bernoulli_numbers(30);
  auto oracle = akiyama_tanigawa(30);
  REQUIRE(b.size() == 31);
  CHECK(b[0] == 1);
  CHECK(abs(b[1]) == ratio(1, 2));
  for (int m = 2; m <= 30; ++m) CHECK(b[m] == oracle[m]);
  CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("Dirichlet L-values") {
  const auto zeta = DirichletCharacter::principal(1);
  const auto chi4 = DirichletCharacter::kronecker(-4);
  Real pi = Real::pi(kPrec);

  auto z2 = dirichlet_L(Rational(2), zeta, kPrec);
  CHECK(rel(z2.value.re(), pi * pi / 6) < tight());
  auto b3 = dirichlet_L(Rational(3), chi4, kPrec);
  CHECK(rel(b3.value.re(), pi * pi * pi / 32) < tight());

  auto l0 = dirichlet_L(Rational(0), chi4, kPrec);
  REQUIRE(l0.exact);
  CHECK(*l0.exact == ratio(1, 2));
  auto zm1 = dirichlet_L(Rational(-1), zeta, kPrec);
  REQUIRE(zm1.exact);
  CHECK(*zm1.exact == ratio(-1, 12));

  CHECK(generalized_bernoulli(1, chi4) == ratio(-1, 2));

  // Removing the Euler factor at 2 from zeta(2) leaves (3/4) pi^2/6.
  auto dep = dirichlet_L_depleted(Rational(2), zeta, 2, kPrec);
  CHECK(rel(dep.value.re(), pi * pi / 8) < tight());

  Complex s(Real(2L, kPrec), Real(0L, kPrec));
  CHECK(rel_error(hurwitz_zeta(s, Rational(1), kPrec), Complex(pi * pi / 6)) < tight());
}

TEST_CASE("Kronecker symbol against Euler's criterion") {
  for (long p : primes_up_to(200)) {
    if (p == 2) continue;
    for (long d : {-4L, -3L, 5L, 8L, -7L, 12L, 13L}) {
      if (d % p == 0) continue;
      long e = pow_mod(d, (p - 1) / 2, p);
      long expect = e == 1 ? 1 : -1;
      CHECK(kronecker_symbol(d, p) == expect);
    }
  }
  auto chi = DirichletCharacter::kronecker(-4);
  CHECK(chi.modulus() == 4);
  CHECK(chi.real_value(1) == 1);
  CHECK(chi.real_value(3) == -1);
  CHECK(chi.is_zero_at(2));
  CHECK(chi.parity() == -1);
  CHECK(chi.square().is_principal());
}

TEST_CASE("primes and factorization") {
  auto ps = primes_up_to(10000);
  CHECK(ps.size() == 1229);
  long count = 0;
  for (long n = 2; n <= 10000; ++n) count += is_prime_trial(n);
  CHECK(count == 1229);
  for (long p : ps) CHECK(is_prime_trial(p));
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long, int>{2, 3});
  CHECK(f[1] == std::pair<long, int>{3, 2});
  CHECK(f[2] == std::pair<long, int>{5, 1});
}

TEST_CASE("quadratic character of an index matrix") {
  // l = 1, S = 1: det(2S) = 2, so K_S = Q(sqrt 2) of discriminant 8.
  auto psi = psi_S(QMatrix::identity(1));
  CHECK(psi.primary_generator == 2);
  CHECK(psi.primary_discriminant == 8);
  // l = 2, S = A_2 / 2: -det(2S) = -3.
  auto psi2 = psi_S(QMatrix::parse("[[1,1/2],[1/2,1]]"));
  CHECK(psi2.primary_generator == -3);
  CHECK(psi2.primary_discriminant == -3);
  CHECK(fundamental_discriminant(Rational(12)) == 12);
  CHECK(fundamental_discriminant(Rational(-4)) == -4);
  CHECK(squarefree_kernel(Integer(-18)) == -2);
}

TEST_CASE("rational recognition") {
  Complex x(Real(ratio(3, 7), kPrec), Real(0L, kPrec));
  auto q = rational_recognize(x, Integer(10));
  REQUIRE(q);
  CHECK(*q == ratio(3, 7));
  CHECK_FALSE(rational_recognize(x, Integer(5)));
  Complex pi(Real::pi(kPrec), Real(0L, kPrec));
  CHECK_FALSE(rational_recognize(pi, Integer(1000)));
}
