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

#include <map>
#include <string>
#include <vector>

#include "sjf/real.hpp"

namespace sjf {

// Sparse multivariate polynomial with Rational coefficients.
class Poly {
 public:
  using Monomial = std::vector<int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  Poly pow(int e) const;

  // Total degree in variables [first, first + count); -1 for zero.
  int degree(int first, int count) const;
  int total_degree() const { return degree(0, nvars_); }
  Poly partial(int i) const;
  Rational eval(const std::vector<Rational>& x) const;
  // Replaces variable i by images[i]; all images share one ring.
  Poly substitute(const std::vector<Poly>& images) const;
  // Embeds into a ring with more variables (new ones appended).
  Poly extend(int nvars) const;

  // Sparse text form: "c*x0^2*x1 + ...", variables named by `names`.
  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace sjf
