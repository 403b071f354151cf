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

// Writes the shipped corpus into the directory given as the only argument.
// Every file is generated here: index-1 forms from product formulas, theta
// series by lattice enumeration, and Satake tables from a seeded generator.

#include <cstdio>
#include <random>
#include <string>

#include "qseries.hpp"
#include "sjf/corpus.hpp"
#include "sjf/error.hpp"
#include "sjf/numth.hpp"

namespace {

using sjf::QMatrix;
using sjf::Rational;

constexpr long kCap = 10;

sjf::JacobiExpansion index_one(const sjf::qseries::Series& s, long k, bool cuspidal) {
  sjf::JacobiExpansion f(1, Rational(k), QMatrix::scalar(1), 1, Rational(kCap), cuspidal);
  for (const auto& [key, c] : s.terms()) {
    if (c == 0) continue;
    f.set(QMatrix::scalar(key.first), QMatrix::scalar(key.second), Rational(c));
  }
  return f;
}

// Delta(tau) theta(tau, w): a cusp form of weight 12 + l/2.
sjf::JacobiExpansion delta_times(const sjf::JacobiExpansion& theta) {
  const auto delta = sjf::qseries::delta(kCap);
  sjf::JacobiExpansion f(1, theta.k() + 12, theta.S(), 1, Rational(kCap), true);
  for (const auto& [key, c] : theta.coefficients()) {
    for (const auto& [qk, d] : delta.terms()) {
      Rational t = key.t(0, 0) + qk.first;
      if (t > kCap) continue;
      f.add(QMatrix::scalar(t), key.r, c * Rational(d));
    }
  }
  return f;
}

// E_2^* phi_{10,1} in general form: E_2 phi_{10,1} - 3 U phi_{10,1}, U = 1/(pi y).
sjf::NearlyHolExpansion e2star_phi10(bool det_form) {
  using namespace sjf::qseries;
  const Series phi = phi_10_1(kCap);
  const Series e2phi = e2(kCap) * phi;
  auto nh = det_form
                ? sjf::NearlyHolExpansion::det_form(1, Rational(12), QMatrix::scalar(1), 1,
                                                    Rational(kCap), 1)
                : sjf::NearlyHolExpansion(1, Rational(12), QMatrix::scalar(1), 1,
                                          Rational(kCap), 1);
  std::map<std::pair<long, long>, std::pair<Rational, Rational>> data;
  for (const auto& [key, c] : e2phi.terms()) data[key].first = Rational(c);
  for (const auto& [key, c] : phi.terms()) data[key].second = Rational(c);
  for (const auto& [key, cs] : data) {
    // General: c0 - 3 c1 U. Det form (m = 1): det(Y)^-1 (c0 Y - 3 c1).
    sjf::Poly p(1);
    p.add_term({det_form ? 1 : 0}, cs.first);
    p.add_term({det_form ? 0 : 1}, -3 * cs.second);
    if (p.is_zero()) continue;
    nh.set(QMatrix::scalar(key.first), QMatrix::scalar(key.second), p);
  }
  return nh;
}

// Unit-circle points ((q^2 - p^2) + 2pq i) / (q^2 + p^2).
sjf::EulerTable satake_table(int n, int l, std::uint64_t seed) {
  sjf::EulerTable t;
  t.n = n;
  t.l = l;
  t.k = Rational(2 * (2 * n + l) + 12);
  t.S = l == 1 ? QMatrix::scalar(1) : QMatrix::parse("[[1,1/2],[1/2,1]]");
  t.level = 3;
  t.chi = sjf::DirichletCharacter::kronecker(-4);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  for (long p : sjf::primes_up_to(10000)) {
    if (t.level % p == 0) continue;
    std::vector<sjf::GaussianRational> mu;
    for (int i = 0; i < n; ++i) {
      Rational a(num(rng)), b(den(rng));
      Rational norm = a * a + b * b;
      mu.push_back({(b * b - a * a) / norm, 2 * a * b / norm});
    }
    t.satake[p] = mu;
  }
  return t;
}

void save(const std::string& dir, const std::string& name, const sjf::CorpusFile& f) {
  sjf::save_corpus(dir + "/" + name, f);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: make_corpus <output-dir>\n");
    return 2;
  }
  const std::string dir = argv[1];
  try {
    using namespace sjf::qseries;
    save(dir, "phi10_1.jacobi", sjf::corpus_of(index_one(phi_10_1(kCap), 10, true)));
    save(dir, "phi12_1.jacobi", sjf::corpus_of(index_one(phi_12_1(kCap), 12, true)));
    save(dir, "e4_phi10_1.jacobi",
         sjf::corpus_of(index_one(eisenstein(kCap, 4) * phi_10_1(kCap), 14, true)));
    save(dir, "e6_phi10_1.jacobi",
         sjf::corpus_of(index_one(eisenstein(kCap, 6) * phi_10_1(kCap), 16, true)));

    const QMatrix a2 = QMatrix::parse("[[2,1],[1,2]]");
    const QMatrix one = QMatrix::identity(1), two = QMatrix::identity(2);
    auto theta = [&](const QMatrix& Q, const QMatrix& L, const std::string& h) {
      return sjf::theta_series(Q, L, QMatrix::parse(h), Rational(kCap));
    };
    save(dir, "theta_q2_h0.jacobi", sjf::corpus_of(theta(QMatrix::scalar(2), one, "0")));
    save(dir, "theta_q2_h1_2.jacobi", sjf::corpus_of(theta(QMatrix::scalar(2), one, "1/2")));
    save(dir, "theta_q6_h1_3.jacobi", sjf::corpus_of(theta(QMatrix::scalar(6), one, "1/3")));
    save(dir, "theta_a2_h0.jacobi", sjf::corpus_of(theta(a2, two, "[[0],[0]]")));
    save(dir, "theta_a2_h1_3.jacobi", sjf::corpus_of(theta(a2, two, "[[1/3],[1/3]]")));
    save(dir, "delta_theta_q4.jacobi",
         sjf::corpus_of(delta_times(theta(QMatrix::scalar(4), one, "0"))));
    save(dir, "delta_theta_a2.jacobi", sjf::corpus_of(delta_times(theta(a2, two, "[[0],[0]]"))));

    save(dir, "e2star_phi10_1.nearly-hol", sjf::corpus_of(e2star_phi10(false)));
    save(dir, "e2star_phi10_1_det.nearly-hol", sjf::corpus_of(e2star_phi10(true)));

    const struct {
      int n, l;
      std::uint64_t seed;
    } tables[] = {{1, 1, 101}, {1, 2, 102}, {2, 1, 103}, {2, 2, 104}, {1, 1, 105}};
    int idx = 0;
    for (const auto& spec : tables) {
      std::string name = "satake_" + std::to_string(idx++) + "_n" + std::to_string(spec.n) +
                         "_l" + std::to_string(spec.l) + ".satake";
      save(dir, name,
           sjf::corpus_of(satake_table(spec.n, spec.l, spec.seed), sjf::CorpusKind::kSatake));
    }
  } catch (const sjf::Error& e) {
    std::fprintf(stderr, "make_corpus: %s\n", e.what());
    return 1;
  }
  return 0;
}
