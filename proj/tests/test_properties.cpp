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

// Randomized properties with seeded generators. Each case draws a fixed
// number of inputs so failures replay deterministically.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "sjf/corpus.hpp"
#include "sjf/error.hpp"
#include "sjf/forms.hpp"
#include "sjf/numth.hpp"
#include "sjf/projection.hpp"

using namespace sjf;

namespace {

constexpr long kPrec = 192;

class Gen {
 public:
  explicit Gen(unsigned long seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long lo, long hi, long max_den) {
    return ratio(integer(lo * max_den, hi * max_den), integer(1, max_den));
  }
  // Positive definite half-integral index of size 1 or 2.
  QMatrix index_matrix() {
    if (integer(0, 1) == 0) return QMatrix::scalar(integer(1, 4));
    while (true) {
      long a = integer(1, 4), d = integer(1, 4), b = integer(-3, 3);
      if (4 * a * d - b * b > 0) {
        return QMatrix::from_rows({{Rational(a), ratio(b, 2)}, {ratio(b, 2), Rational(d)}});
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

// [[S, r/2], [r^T/2, t]] >= 0 for positive definite S, via the Schur
// complement written with the adjugate: 4 t det S - adj(S)[r] >= 0.
bool admissible(const QMatrix& S, const Rational& t, const QMatrix& r) {
  Rational quad;
  if (S.rows() == 1) {
    quad = r(0, 0) * r(0, 0);
  } else {
    quad = S(1, 1) * r(0, 0) * r(0, 0) - 2 * S(0, 1) * r(0, 0) * r(1, 0) +
           S(0, 0) * r(1, 0) * r(1, 0);
  }
  return 4 * t * S.det() - quad >= 0;
}

Rational falling(const Rational& a, int m) {
  Rational out(1);
  for (int j = 0; j < m; ++j) out *= a - j;
  return out;
}

Complex real_point(const Rational& v) { return Complex(Real(v, kPrec), Real(0L, kPrec)); }

}  // namespace

TEST_CASE("stored indices are exactly the admissible ones") {
  Gen gen(11);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    QMatrix S = gen.index_matrix();
    JacobiExpansion f(1, Rational(12), S, 1, Rational(8));
    Rational t(gen.integer(0, 8));
    QMatrix r(S.rows(), 1);
    for (int i = 0; i < S.rows(); ++i) r(i, 0) = gen.integer(-7, 7);
    bool expect = admissible(S, t, r);
    bool stored = true;
    try {
      f.set(QMatrix::scalar(t), r, Rational(1));
    } catch (const Error& e) {
      stored = false;
      CHECK(e.code() == ErrorCode::kInvariant);
    }
    CHECK_MESSAGE(stored == expect, "S=", S.str(), " t=", t.get_str(), " r=", r.str());
    (stored ? accepted : rejected)++;
  }
  // Both outcomes must actually be exercised.
  CHECK(accepted > 50);
  CHECK(rejected > 50);
}

TEST_CASE("theta series live on the null cone") {
  Gen gen(12);
  for (int trial = 0; trial < 12; ++trial) {
    QMatrix S = gen.index_matrix();
    const int l = S.rows();
    // h = (2S)^-1 mu keeps r = 2S(x + h) integral.
    QMatrix mu(l, 1);
    for (int i = 0; i < l; ++i) mu(i, 0) = gen.integer(0, 5);
    QMatrix Q = S * Rational(2);
    auto f = theta_series(Q, QMatrix::identity(l), Q.inverse() * mu, Rational(6));
    CHECK(f.size() > 0);
    for (const auto& [key, c] : f.coefficients()) {
      CHECK(discriminant_matrix(S, key.t, key.r, 1).is_zero());
      CHECK(c > 0);
    }
  }
}

TEST_CASE("theta components round trip through reconstruction") {
  Gen gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const long s = gen.integer(1, 3);
    QMatrix S = QMatrix::scalar(s);
    const Rational cap(6);
    auto tc = empty_theta_components(S, 1, Rational(10), cap, true);
    for (auto& [mu, comp] : tc.components) {
      // Exponents in the class of mu are congruent to -mu^2/(4s) mod 1.
      const long m = mu(0, 0).get_num().get_si();
      const long r0 = std::min(m, 2 * s - m);
      const Rational shift = ratio(-m * m, 4 * s);
      const int terms = int(gen.integer(0, 3));
      for (int j = 0; j < terms; ++j) {
        Rational e = shift + gen.integer(1, 5);
        while (e <= 0) e += 1;
        if (e + ratio(r0 * r0, 4 * s) > cap) continue;
        comp[e] = gen.rational(-20, 20, 7);
        if (comp[e] == 0) comp.erase(e);
      }
    }
    auto f = theta_reconstruct(tc, cap);
    CHECK(is_cuspidal(f));
    auto back = theta_decompose(f);
    CHECK(back.components == tc.components);
    CHECK(theta_reconstruct(back, cap) == f);

    // Serialization of the same expansion is stable.
    std::string text = write_corpus(corpus_of(f));
    auto parsed = parse_corpus(text);
    CHECK(parsed.jacobi() == f);
    CHECK(write_corpus(parsed) == text);
  }
}

TEST_CASE("multivariate gamma shift and reciprocity") {
  Gen gen(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = int(gen.integer(1, 4));
    Rational x = ratio(gen.integer(n, 40), 2);
    Rational expect(1);
    for (int i = 0; i < n; ++i) expect *= x - ratio(i, 2);
    CHECK(gamma_n_ratio(n, x + 1, x) == expect);
    Rational y = x + gen.integer(0, 6);
    CHECK(gamma_n_ratio(n, x, y) * gamma_n_ratio(n, y, x) == 1);
  }
}

TEST_CASE("psi_S is quadratic") {
  Gen gen(15);
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix S = gen.index_matrix();
    auto psi = psi_S(S);
    CHECK(psi.character.square().is_principal());
    for (long a = 1; a < 60; ++a) {
      if (!psi.character.is_zero_at(a)) {
        long v = psi.character.real_value(a);
        CHECK(v * v == 1);
      }
    }
    if (psi.primary_discriminant == 1) CHECK(psi.character.is_principal());
  }
}

TEST_CASE("rational recognition recovers small rationals under noise") {
  Gen gen(16);
  const Real noise(1e-30, kPrec);
  for (int trial = 0; trial < 100; ++trial) {
    Rational q = ratio(gen.integer(-1000, 1000), gen.integer(1, 1000));
    Complex x(Real(q, kPrec) + noise, Real(0L, kPrec));
    auto got = rational_recognize(x, Integer(1000));
    REQUIRE(got);
    CHECK(*got == q);
    auto again = rational_recognize(real_point(*got), Integer(1000));
    REQUIRE(again);
    CHECK(*again == *got);
  }
  auto half = rational_recognize(real_point(ratio(1, 2)), Integer(10));
  REQUIRE(half);
  CHECK(*half == ratio(1, 2));
  Complex near(Real(ratio(355, 113), kPrec) + noise, Real(0L, kPrec));
  auto pi_approx = rational_recognize(near, Integer(1000));
  REQUIRE(pi_approx);
  CHECK(*pi_approx == ratio(355, 113));
}

TEST_CASE("scalar Cayley chain") {
  Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    Rational alpha = gen.rational(-6, 6, 4);
    QMatrix h = QMatrix::scalar(gen.rational(1, 5, 3));
    for (int m = 0; m <= 6; ++m) {
      Poly R = Poly::variable(1, 0).pow(m);
      DiffResult d = matrix_diff_apply(R, alpha, h);
      Rational hm(1);
      for (int j = 0; j < m; ++j) hm *= h(0, 0);
      CHECK(d.det_exponent == alpha);
      CHECK_MESSAGE(d.coefficient * hm == falling(alpha, m), "alpha=", alpha.get_str(), " m=", m);
    }
  }
}
