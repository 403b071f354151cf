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

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "sjf/corpus.hpp"
#include "sjf/error.hpp"
#include "sjf/forms.hpp"

using namespace sjf;

namespace {

constexpr long kPrec = 128;

JacobiExpansion corpus_jacobi(const std::string& name) {
  return load_corpus(std::string(SJF_CORPUS_DIR) + "/" + name).jacobi();
}

JacobiPoint point(double x, double y, double u, double v) {
  JacobiPoint z;
  z.tau = CMatrix(1, 1, kPrec);
  z.w = CMatrix(1, 1, kPrec);
  z.tau(0, 0) = Complex(Real(x, kPrec), Real(y, kPrec));
  z.w(0, 0) = Complex(Real(u, kPrec), Real(v, kPrec));
  return z;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

// Theta series by direct lattice enumeration over a box: t = S[x + h],
// r = 2S(x + h), for the index S = Q/2.
std::map<std::pair<std::string, std::string>, Rational> enumerate_theta(const QMatrix& Q,
                                                                        const QMatrix& h,
                                                                        long cap, long box) {
  const int l = Q.rows();
  QMatrix S = Q * ratio(1, 2);
  std::map<std::pair<std::string, std::string>, Rational> out;
  std::vector<long> x(l, -box);
  while (true) {
    QMatrix v(l, 1);
    for (int i = 0; i < l; ++i) v(i, 0) = Rational(x[i]) + h(i, 0);
    Rational t = S.bracket(v)(0, 0);
    if (t <= cap) out[{QMatrix::scalar(t).str(), (S * v * Rational(2)).str()}] += 1;
    int i = 0;
    while (i < l && ++x[i] > box) x[i++] = -box;
    if (i == l) break;
  }
  return out;
}

}  // namespace

TEST_CASE("index matrix validation") {
  CHECK_NOTHROW(validate_index_matrix(QMatrix::parse("[[1,1/2],[1/2,1]]")));
  CHECK(code_of([] { validate_index_matrix(QMatrix::parse("[[1,1],[1,1]]")); }) ==
        ErrorCode::kDomain);
  CHECK(code_of([] { validate_index_matrix(QMatrix::scalar(ratio(1, 3))); }) ==
        ErrorCode::kDomain);
}

TEST_CASE("coefficient support") {
  JacobiExpansion f(1, Rational(10), QMatrix::identity(1), 1, Rational(5));
  f.set(QMatrix::scalar(1), QMatrix::scalar(2), Rational(3));
  CHECK(f.get(QMatrix::scalar(1), QMatrix::scalar(2)) == 3);
  CHECK(f.get(QMatrix::scalar(1), QMatrix::scalar(1)) == 0);
  try {
    f.set(QMatrix::scalar(1), QMatrix::scalar(3), Rational(1));
    FAIL("4t - r^2 < 0 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvariant);
    CHECK(std::string(e.what()).find("t=1") != std::string::npos);
  }
  // Beyond the truncation cap.
  CHECK_THROWS_AS(f.set(QMatrix::scalar(6), QMatrix::scalar(0), Rational(1)), Error);
}

TEST_CASE("theta series against lattice enumeration") {
  struct Case {
    const char* q;
    const char* h;
  } cases[] = {{"2", "[[0]]"}, {"2", "[[1/2]]"}, {"6", "[[1/3]]"},
               {"[[2,1],[1,2]]", "[[0],[0]]"}, {"[[2,1],[1,2]]", "[[1/3],[1/3]]"}};
  for (const auto& c : cases) {
    QMatrix Q = QMatrix::parse(c.q), h = QMatrix::parse(c.h);
    auto f = theta_series(Q, QMatrix::identity(Q.rows()), h, Rational(10));
    auto oracle = enumerate_theta(Q, h, 10, 8);
    std::map<std::pair<std::string, std::string>, Rational> got;
    for (const auto& [key, v] : f.coefficients()) got[{key.t.str(), key.r.str()}] = v;
    CHECK_MESSAGE(got == oracle, c.q, " h=", c.h);
  }
}

TEST_CASE("theta decomposition round trip on the corpus") {
  for (const char* name : {"phi10_1.jacobi", "phi12_1.jacobi", "e4_phi10_1.jacobi",
                           "theta_q2_h1_2.jacobi", "theta_a2_h1_3.jacobi",
                           "delta_theta_a2.jacobi"}) {
    auto f = corpus_jacobi(name);
    auto tc = theta_decompose(f);
    CHECK(tc.weight == f.k() - ratio(f.l(), 2));
    CHECK(tc.index() == size_t(Rational(f.S().det() * (1 << f.l())).get_num().get_ui()));
    CHECK_MESSAGE(theta_reconstruct(tc, f.cap()) == f, name);
  }
}

TEST_CASE("cuspidality and property A") {
  CHECK(is_cuspidal(corpus_jacobi("phi10_1.jacobi")));
  CHECK(is_cuspidal(corpus_jacobi("delta_theta_q4.jacobi")));
  CHECK_FALSE(is_cuspidal(corpus_jacobi("theta_q2_h0.jacobi")));
  auto a = property_A_check(corpus_jacobi("phi12_1.jacobi"));
  CHECK(a.pass);
  CHECK_FALSE(a.necessary_only);
  CHECK(a.entries.size() == 2);
  CHECK_FALSE(property_A_check(corpus_jacobi("theta_q2_h0.jacobi")).pass);
}

TEST_CASE("factor of automorphy in degree one") {
  const QMatrix S = QMatrix::identity(1);
  JacobiPoint z = point(0.13, 1.1, 0.21, -0.17);
  std::complex<double> tau(0.13, 1.1), w(0.21, -0.17);
  const std::complex<double> two_pi_i(0, 2 * M_PI);

  GroupElement inv = GroupElement::identity(1, 1);
  inv.g = symplectic_form(1);
  CHECK_NOTHROW(inv.validate());
  // c = 1, d = 0: J = tau^k e(w^2 / tau).
  std::complex<double> expect = std::pow(tau, 10) * std::exp(two_pi_i * w * w / tau);
  Complex got = eval_J(Rational(10), S, inv, z);
  CHECK(std::abs(std::complex<double>(got.re().to_double(), got.im().to_double()) - expect) <
        1e-12 * std::abs(expect));

  GroupElement heis = GroupElement::identity(1, 1);
  heis.lam(0, 0) = 1;
  // w -> w + tau: J = e(-tau - 2w).
  expect = std::exp(two_pi_i * (-tau - 2.0 * w));
  got = eval_J(Rational(10), S, heis, z);
  CHECK(std::abs(std::complex<double>(got.re().to_double(), got.im().to_double()) - expect) <
        1e-12 * std::abs(expect));
}

TEST_CASE("evaluation and modularity of the weight 10 cusp form") {
  auto f = corpus_jacobi("phi10_1.jacobi");
  JacobiPoint z = point(0.1, 1.1, 0.23, 0.11);

  std::complex<double> sum = 0, tau(0.1, 1.1), w(0.23, 0.11);
  for (const auto& [key, c] : f.coefficients()) {
    double t = key.t(0, 0).get_d(), r = key.r(0, 0).get_d();
    sum += c.get_d() * std::exp(std::complex<double>(0, 2 * M_PI) * (t * tau + r * w));
  }
  auto e = evaluate(f, z, kPrec);
  std::complex<double> got(e.value.re().to_double(), e.value.im().to_double());
  CHECK(std::abs(got - sum) < 1e-12 * std::abs(sum));
  // First omitted term: exp(-2 pi 11 y) for y = 1.1.
  CHECK(e.tail_estimate < Real(1e-32, kPrec));
  CHECK(e.tail_estimate > Real(1e-34, kPrec));

  GroupElement inv = GroupElement::identity(1, 1);
  inv.g = symplectic_form(1);
  GroupElement heis = GroupElement::identity(1, 1);
  heis.lam(0, 0) = -1;
  heis.mu(0, 0) = 1;
  GroupElement shift = GroupElement::identity(1, 1);
  shift.g(0, 1) = 1;
  for (const auto& g : {inv, heis, shift, shift * heis}) {
    Complex lhs = evaluate(f, act(g, z), kPrec).value;
    Complex rhs = eval_J(f.k(), f.S(), g, z) * evaluate(f, z, kPrec).value;
    CHECK(rel_error(lhs, rhs) < Real(1e-15, kPrec));
  }
}

TEST_CASE("group law") {
  GroupElement a = GroupElement::identity(1, 1);
  a.lam(0, 0) = 2;
  a.mu(0, 0) = -1;
  a.kappa(0, 0) = 3;
  a.g = symplectic_form(1);
  GroupElement b = GroupElement::identity(1, 1);
  b.lam(0, 0) = 1;
  b.g(0, 1) = 1;
  CHECK((a * b).is_symplectic());
  CHECK(a * GroupElement::identity(1, 1) == a);
  CHECK(GroupElement::identity(1, 1) * a == a);
  JacobiPoint z = point(-0.2, 0.9, 0.1, 0.3);
  JacobiPoint z1 = act(a * b, z), z2 = act(a, act(b, z));
  CHECK(rel_error(z1.tau(0, 0), z2.tau(0, 0)) < Real(1e-30, kPrec));
  CHECK(rel_error(z1.w(0, 0), z2.w(0, 0)) < Real(1e-30, kPrec));
}
