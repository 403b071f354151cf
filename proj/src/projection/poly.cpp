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

#include "sjf/poly.hpp"

#include "sjf/error.hpp"

namespace sjf {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (int(m.size()) != nvars_) fail(ErrorCode::kDomain, "monomial has the wrong arity");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) fail(ErrorCode::kDomain, "polynomial rings differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Rational(-1); }

Poly Poly::operator*(const Poly& o) const {
  if (o.nvars_ != nvars_) fail(ErrorCode::kDomain, "polynomial rings differ");
  Poly r(nvars_);
  Monomial m(nvars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = a[i] + b[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) fail(ErrorCode::kDomain, "negative polynomial power");
  Poly r = constant(nvars_, 1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

int Poly::degree(int first, int count) const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int i = first; i < first + count; ++i) d += m[i];
    best = std::max(best, d);
  }
  return best;
}

Poly Poly::partial(int i) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  if (int(x.size()) != nvars_) fail(ErrorCode::kDomain, "evaluation point has the wrong arity");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int e = 0; e < m[i]; ++e) v *= x[i];
    }
    acc += v;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (int(images.size()) != nvars_) fail(ErrorCode::kDomain, "substitution has the wrong arity");
  const int target = nvars_ ? images[0].nvars() : 0;
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly term = constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i]) term = term * images[i].pow(m[i]);
    }
    r += term;
  }
  return r;
}

Poly Poly::extend(int nvars) const {
  if (nvars < nvars_) fail(ErrorCode::kDomain, "cannot shrink a polynomial ring");
  Poly r(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial e = m;
    e.resize(nvars, 0);
    r.terms_.emplace(e, c);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += rational_str(c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      s += "*" + names.at(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace sjf
