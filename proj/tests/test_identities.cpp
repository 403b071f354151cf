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

#include "sjf/error.hpp"
#include "sjf/identities.hpp"
#include "sjf/numth.hpp"

using namespace sjf;

namespace {

constexpr long kPrec = 128;

CMatrix scalar(double re, double im) {
  CMatrix m(1, 1, kPrec);
  m(0, 0) = Complex(Real(re, kPrec), Real(im, kPrec));
  return m;
}

}  // namespace

TEST_CASE("scalar Gamma integral") {
  // int_0^inf t^(k-1) e^(-t tau) dt = Gamma(k) tau^-k; for k = 3, tau = 2: 2/8.
  auto r = check_int_det(1, Rational(3), scalar(2, 0), kPrec, 1e-30);
  CHECK(r.pass);
  CHECK(rel_error(r.rhs, Complex(Real(ratio(1, 4), kPrec))) < epsilon(kPrec - 8));
  auto c = check_int_det(1, ratio(5, 2), scalar(1, -1), kPrec, 1e-30);
  CHECK(c.pass);
  // Re(tau) must be positive definite.
  CHECK_THROWS_AS(check_int_det(1, Rational(3), scalar(-1, 1), kPrec, 1e-30), Error);
}

TEST_CASE("degree two Gamma integral") {
  CMatrix tau = CMatrix::identity(2, kPrec);
  tau(0, 0) = Complex(Real(2L, kPrec), Real(0L, kPrec));
  auto r = check_int_det(2, Rational(3), tau, kPrec, 1e-8);
  CHECK(r.pass);
  // Gamma_2(3) det(tau)^-3 = sqrt(pi) Gamma(3) Gamma(5/2) / 8.
  Real g2 = sqrt(Real::pi(kPrec)) * tgamma(Real(3L, kPrec)) * tgamma(Real(ratio(5, 2), kPrec));
  CHECK(rel_error(r.rhs, Complex(g2 / Real(8L, kPrec))) < epsilon(kPrec - 8));
}

TEST_CASE("Gaussian integral") {
  auto r = check_cool_id(QMatrix::identity(1), QMatrix::scalar(ratio(1, 2)), QMatrix::identity(1),
                         Rational(1), kPrec, 1e-8);
  CHECK(r.pass);
  // int exp(-x^2 + x/2) dx = sqrt(pi) e^(1/16).
  Real expect = sqrt(Real::pi(kPrec)) * exp(Real(ratio(1, 16), kPrec));
  CHECK(rel_error(r.rhs, Complex(expect)) < epsilon(kPrec - 8));
  CHECK_THROWS_AS(check_cool_id(QMatrix::identity(1), QMatrix::scalar(1), QMatrix::identity(1),
                                Rational(-1), kPrec, 1e-8),
                  Error);
}

TEST_CASE("random group pairs") {
  auto a = random_group_pairs(2, 2, 10, 42, kPrec);
  auto b = random_group_pairs(2, 2, 10, 42, kPrec);
  REQUIRE(a.size() == 10);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].g1 == b[i].g1);
    CHECK(a[i].g2 == b[i].g2);
    CHECK(a[i].g1.is_symplectic());
    CHECK(a[i].g2.is_symplectic());
    CHECK(a[i].g1.kappa.is_symmetric());
    CHECK(a[i].z.tau.imag_part().det().re() > 0L);
  }
  CHECK_FALSE(random_group_pairs(1, 1, 5, 1, kPrec)[0].g1 ==
              random_group_pairs(1, 1, 5, 2, kPrec)[0].g1);
}

TEST_CASE("cocycle and Delta invariance on a small batch") {
  auto batch = random_group_pairs(1, 1, 20, 7, kPrec);
  auto good = check_cocycle(Rational(12), QMatrix::identity(1), batch, kPrec, 1e-20);
  CHECK(good.pass);
  auto d = check_delta_invariance(ratio(13, 2), QMatrix::identity(1), batch, kPrec, 1e-20);
  CHECK(d.pass);
}

TEST_CASE("shipped grids") {
  for (const auto& r : run_int_det_grid(kPrec)) CHECK_MESSAGE(r.pass, report_record(r));
  for (const auto& r : run_cool_id_grid(kPrec)) CHECK_MESSAGE(r.pass, report_record(r));
  for (const auto& r : run_group_grid(kPrec)) CHECK_MESSAGE(r.pass, report_record(r));
}

TEST_CASE("report records") {
  auto r = check_int_det(1, Rational(3), scalar(2, 0), kPrec, 1e-30);
  std::string s = report_record(r);
  CHECK(s.find("identity=") == 0);
  CHECK(s.find("pass=true") != std::string::npos);
}
