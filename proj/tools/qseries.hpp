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

// Truncated q-series with Laurent-polynomial coefficients in zeta, used to
// build degree-1 Jacobi forms of index 1 from product formulas:
//   phi_{-2,1} = (zeta - 2 + zeta^-1) prod (1 - q^n zeta)^2 (1 - q^n/zeta)^2 / (1 - q^n)^4,
//   phi_{0,1}  = 12 (wp phi_{-2,1}) with wp the normalized Weierstrass function,
//   phi_{10,1} = Delta phi_{-2,1},  phi_{12,1} = Delta phi_{0,1}.

#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace sjf::qseries {

// (q-exponent, zeta-exponent) -> coefficient, truncated at q-exponent <= N.
class Series {
 public:
  explicit Series(long N) : N_(N) {}
  static Series one(long N) {
    Series s(N);
    s.add(0, 0, 1);
    return s;
  }
  long N() const { return N_; }
  const std::map<std::pair<long, long>, mpq_class>& terms() const { return c_; }

  void add(long n, long r, const mpq_class& v) {
    if (n > N_ || v == 0) return;
    auto& slot = c_[{n, r}];
    slot += v;
    if (slot == 0) c_.erase({n, r});
  }
  mpq_class get(long n, long r) const {
    auto it = c_.find({n, r});
    return it == c_.end() ? mpq_class(0) : it->second;
  }
  Series operator*(const Series& o) const {
    Series out(std::min(N_, o.N_));
    for (const auto& [a, ca] : c_) {
      for (const auto& [b, cb] : o.c_) out.add(a.first + b.first, a.second + b.second, ca * cb);
    }
    return out;
  }
  Series operator+(const Series& o) const {
    Series out(std::min(N_, o.N_));
    for (const auto& [a, ca] : c_) out.add(a.first, a.second, ca);
    for (const auto& [a, ca] : o.c_) out.add(a.first, a.second, ca);
    return out;
  }
  Series scaled(const mpq_class& s) const {
    Series out(N_);
    for (const auto& [a, ca] : c_) out.add(a.first, a.second, ca * s);
    return out;
  }

 private:
  long N_;
  std::map<std::pair<long, long>, mpq_class> c_;
};

// 1 - q^n zeta^r
inline Series binomial(long N, long n, long r) {
  Series s = Series::one(N);
  s.add(n, r, -1);
  return s;
}

// 1 / (1 - q^n), n >= 1
inline Series geometric(long N, long n) {
  Series s(N);
  for (long m = 0; m * n <= N; ++m) s.add(m * n, 0, 1);
  return s;
}

inline mpz_class sigma(long m, int power) {
  mpz_class acc = 0;
  for (long d = 1; d <= m; ++d) {
    if (m % d) continue;
    mpz_class p = 1;
    for (int i = 0; i < power; ++i) p *= d;
    acc += p;
  }
  return acc;
}

// prod (1 - q^n zeta)^2 (1 - q^n/zeta)^2 / (1 - q^n)^4
inline Series phi_product(long N) {
  Series p = Series::one(N);
  for (long n = 1; n <= N; ++n) {
    Series f = binomial(N, n, 1) * binomial(N, n, -1);
    Series g = geometric(N, n);
    p = p * f * f * g * g * g * g;
  }
  return p;
}

inline Series phi_m2_1(long N) {
  Series lead(N);
  lead.add(0, 1, 1);
  lead.add(0, 0, -2);
  lead.add(0, -1, 1);
  return lead * phi_product(N);
}

inline Series phi_0_1(long N) {
  // 12 (1/12 + zeta/(1-zeta)^2 + sum_n sum_{d|n} d (zeta^d - 2 + zeta^-d) q^n) phi_{-2,1};
  // zeta/(1-zeta)^2 phi_{-2,1} is the bare product.
  Series w(N);
  w.add(0, 0, mpq_class(1, 12));
  for (long n = 1; n <= N; ++n) {
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      w.add(n, d, d);
      w.add(n, 0, -2 * d);
      w.add(n, -d, d);
    }
  }
  return (w * phi_m2_1(N) + phi_product(N)).scaled(12);
}

// Delta = q prod (1 - q^n)^24
inline Series delta(long N) {
  Series s(N);
  s.add(1, 0, 1);
  for (long n = 1; n <= N; ++n) {
    Series b = binomial(N, n, 0);
    Series b2 = b * b, b4 = b2 * b2, b8 = b4 * b4, b16 = b8 * b8;
    s = s * b16 * b8;
  }
  return s;
}

// E_2 = 1 - 24 sum sigma_1(n) q^n (holomorphic part of E_2^*).
inline Series e2(long N) {
  Series s = Series::one(N);
  for (long n = 1; n <= N; ++n) s.add(n, 0, mpq_class(-24 * sigma(n, 1)));
  return s;
}

// E_k = 1 + c sum sigma_{k-1}(n) q^n for k = 4 (c = 240) and k = 6 (c = -504).
inline Series eisenstein(long N, int k) {
  const long c = k == 4 ? 240 : -504;
  Series s = Series::one(N);
  for (long n = 1; n <= N; ++n) s.add(n, 0, mpq_class(c * sigma(n, k - 1)));
  return s;
}

inline Series phi_10_1(long N) { return delta(N) * phi_m2_1(N); }
inline Series phi_12_1(long N) { return delta(N) * phi_0_1(N); }

}  // namespace sjf::qseries
