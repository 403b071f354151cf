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

#include "qseries.hpp"
#include "sjf/corpus.hpp"
#include "sjf/error.hpp"
#include "sjf/petersson.hpp"

using namespace sjf;

namespace {

constexpr long kPrec = 128;

JacobiExpansion index_one(const qseries::Series& s, long k, long cap) {
  JacobiExpansion f(1, Rational(k), QMatrix::identity(1), 1, Rational(cap), true);
  for (const auto& [key, c] : s.terms()) {
    f.set(QMatrix::scalar(key.first), QMatrix::scalar(key.second), Rational(c));
  }
  return f;
}

Real rpow(const Rational& b, const Rational& e) {
  return pow(Real(b, kPrec), Real(e, kPrec));
}

}  // namespace

TEST_CASE("structured values") {
  auto a = Structured::power(Rational(12), ratio(1, 2));
  CHECK(a.q == 2);
  CHECK(a.sqrt_arg == 3);
  CHECK(Structured::power(Rational(9), ratio(-3, 2)) == Structured::rational(ratio(1, 27)));
  auto b = Structured::pi_power(ratio(-5, 2)) * Structured::power(ratio(2, 3), ratio(1, 2));
  CHECK(b * b.inverse() == Structured::rational(1));
  Real expect = pow(Real::pi(kPrec), Real(ratio(-5, 2), kPrec)) * sqrt(Real(ratio(2, 3), kPrec));
  CHECK(rel_error(b.eval(kPrec), expect) < epsilon(kPrec - 8));
  Structured v{3, 0, 1, -1};
  CHECK_THROWS_AS(v.eval(kPrec), Error);
  CHECK(rel_error(v.eval(kPrec, Real(ratio(3, 2), kPrec)), Real(2L, kPrec)) < epsilon(kPrec - 8));
  CHECK_THROWS_AS(Structured::power(Rational(-2), ratio(1, 2)), Error);
}

TEST_CASE("kernel constant") {
  // k = 12, n = l = 1, S = 1: kappa = 21/2, det(2S)^(-1/2) Gamma(21/2) pi^(-21/2) / vol.
  auto c = kernel_constant(Rational(12), 1, QMatrix::identity(1), 1);
  CHECK(c.q == Rational(654729075, 2048));
  CHECK(c.pi_half_power == -20);
  CHECK(c.sqrt_arg == 2);
  CHECK(c.vol_power == -1);
  Real expect = tgamma(Real(ratio(21, 2), kPrec)) * rpow(Rational(2), ratio(-1, 2)) *
                pow(Real::pi(kPrec), Real(ratio(-21, 2), kPrec));
  CHECK(rel_error(c.eval(kPrec, Real(1L, kPrec)), expect) < epsilon(kPrec - 8));

  // Level 2, l = 2, S = A_2/2 in degree 2: kappa = 20 - 5/2.
  auto c2 = kernel_constant(Rational(20), 2, QMatrix::parse("[[1,1/2],[1/2,1]]"), 2);
  Rational kappa = ratio(35, 2);
  Real gamma2 = sqrt(Real::pi(kPrec)) * tgamma(Real(kappa, kPrec)) *
                tgamma(Real(kappa - ratio(1, 2), kPrec));
  Real expect2 = gamma2 / Real(3L, kPrec) *
                 pow(Real::pi(kPrec) / Real(2L, kPrec), Real(-2 * kappa, kPrec));
  CHECK(rel_error(c2.eval(kPrec, Real(1L, kPrec)), expect2) < epsilon(kPrec - 8));
}

TEST_CASE("pairing with Poincare series") {
  auto f = load_corpus(std::string(SJF_CORPUS_DIR) + "/phi10_1.jacobi").jacobi();
  auto p = pair_with_poincare(f, QMatrix::scalar(1), QMatrix::scalar(1));
  REQUIRE(p.exact);
  // Gamma(17/2) 2^(-1/2) (3 pi)^(-17/2) c(1,1), c(1,1) = 1.
  CHECK(p.exact->q == Rational(25025, 124416));
  CHECK(p.exact->pi_half_power == -16);
  CHECK(p.exact->sqrt_arg == 6);
  Real expect = tgamma(Real(ratio(17, 2), kPrec)) * rpow(Rational(2), ratio(-1, 2)) *
                pow(Real(3L, kPrec) * Real::pi(kPrec), Real(ratio(-17, 2), kPrec));
  CHECK(rel_error(p.exact->eval(kPrec, Real(1L, kPrec)), expect) < epsilon(kPrec - 8));
  // Pairing with a vanishing coefficient index.
  auto z = pair_with_poincare(f, QMatrix::scalar(1), QMatrix::scalar(0));
  CHECK(z.exact->is_zero() == (f.get(QMatrix::scalar(1), QMatrix::scalar(0)) == 0));
  // Theta series are not cusp forms; weight 1/2 is also below the bound.
  auto theta = load_corpus(std::string(SJF_CORPUS_DIR) + "/theta_q2_h0.jacobi").jacobi();
  CHECK_THROWS_AS(pair_with_poincare(theta, QMatrix::scalar(1), QMatrix::scalar(0)), Error);
}

TEST_CASE("Petersson quadrature") {
  const long cap = 6;
  auto phi10 = index_one(qseries::phi_10_1(cap), 10, cap);
  QuadratureOptions opt;
  opt.tolerance = 1e-8;
  auto q = petersson_quadrature(phi10, phi10, opt);
  CHECK(q.value.re() > 0L);
  CHECK(abs(q.value.im()) <= q.error_estimate + epsilon(kPrec - 16) * abs(q.value.re()));
  // Sesquilinear in the scaling.
  auto q3 = petersson_quadrature(phi10.scaled(3), phi10, opt);
  CHECK(rel_error(q3.value, q.value * Real(3L, kPrec)) < Real(1e-20, kPrec));

  auto a2 = load_corpus(std::string(SJF_CORPUS_DIR) + "/delta_theta_a2.jacobi").jacobi();
  CHECK_THROWS_AS(petersson_quadrature(a2, a2, opt), Error);
}

TEST_CASE("adjointness of the holomorphic projection") {
  const long cap = 6;
  using namespace qseries;
  auto phi10 = phi_10_1(cap), e2phi = e2(cap) * phi10;
  auto phi12 = index_one(phi_12_1(cap), 12, cap);
  NearlyHolExpansion g(1, Rational(12), QMatrix::identity(1), 1, Rational(cap), 1);
  for (const auto& [key, c] : e2phi.terms()) {
    Poly p(1);
    p.add_term({0}, c);
    p.add_term({1}, -3 * Rational(phi10.get(key.first, key.second)));
    g.set(QMatrix::scalar(key.first), QMatrix::scalar(key.second), p);
  }
  QuadratureOptions opt;
  opt.tolerance = 1e-6;
  auto rep = adjointness_check(phi12, g, opt);
  CHECK(rep.rel_error <= Real(1e-8, kPrec));
  CHECK(abs(rep.lhs) > Real(0L, kPrec));
}
