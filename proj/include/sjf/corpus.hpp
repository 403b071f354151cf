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

// The corpus text format.
//
//   sjf-corpus 1.0
//   kind=jacobi
//   n=1
//   l=1
//   k=10
//   S=1
//   lambda=1
//   level=1
//   <kind-specific keys>
//   ---
//   t=1 r=1 c=1
//
// Rationals are written p/q, matrices row-major as [[a,b],[c,d]] (1 x 1 as a
// bare scalar). Kind-specific header keys and records:
//
//   jacobi            cap, cuspidal         t=<T> r=<R> c=<q>
//   nearly-hol        cap, form, D or m     t=<T> r=<R> p=<poly>  (q= in det form)
//   theta-components  cap, cuspidal         mu=<M> e=<q> c=<q>, or mu=<M> alone
//   eigenvalues       chi_modulus, chi_order, chi_values
//                                           a=<int> lambda=<g>
//   satake            as eigenvalues        p=<prime> mu=<g>;<g>...  or p=<prime> poly=<q>,<q>...
//
// <poly> is a ';'-separated list of c@e1,e2,... (coefficient and exponents
// of the symmetric symbols), <g> is a Gaussian rational re or re,im, and
// chi_values lists the exponent of a = 0..modulus-1 with * where chi(a) = 0.
// Lines starting with # are ignored. The writer emits the canonical form:
// keys and records in the order above, sorted, no comments.

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sjf/forms.hpp"
#include "sjf/lfunction.hpp"
#include "sjf/numth.hpp"
#include "sjf/projection.hpp"

namespace sjf {

inline constexpr int kCorpusMajor = 1;
inline constexpr int kCorpusMinor = 0;

enum class CorpusKind { kJacobi, kNearlyHol, kThetaComponents, kEigenvalues, kSatake };

std::string kind_name(CorpusKind kind);

struct GaussianRational {
  Rational re, im;
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  Complex eval(long prec) const { return Complex(Real(re, prec), Real(im, prec)); }
};

// Eigenvalue or Satake data of one form.
struct EulerTable {
  int n = 1;
  int l = 1;
  Rational k;
  QMatrix S;
  long lambda = 1;
  long level = 1;
  DirichletCharacter chi;
  std::map<long, GaussianRational> eigenvalues;
  std::map<long, std::vector<GaussianRational>> satake;  // p -> mu_1..mu_n
  std::map<long, std::vector<Rational>> polys;           // p -> c_0..c_2n

  // psi is derived from S.
  LSeriesSpec to_spec(long prec) const;
  bool operator==(const EulerTable& o) const;
};

struct CorpusFile {
  CorpusKind kind = CorpusKind::kJacobi;
  long level = 1;
  std::variant<JacobiExpansion, NearlyHolExpansion, ThetaComponents, EulerTable> body;

  const JacobiExpansion& jacobi() const;
  const NearlyHolExpansion& nearly_hol() const;
  const ThetaComponents& theta() const;
  const EulerTable& table() const;
};

CorpusFile corpus_of(const JacobiExpansion& f, long level = 1);
CorpusFile corpus_of(const NearlyHolExpansion& f, long level = 1);
CorpusFile corpus_of(const ThetaComponents& tc, long level = 1);
CorpusFile corpus_of(const EulerTable& t, CorpusKind kind);

// Raises kParse with the line number for malformed text or an unknown major
// version, and kInvariant naming (t, r) for an inadmissible coefficient.
CorpusFile parse_corpus(const std::string& text);
CorpusFile load_corpus(const std::string& path);
std::string write_corpus(const CorpusFile& file);
void save_corpus(const std::string& path, const CorpusFile& file);

// Sparse monomial list of a polynomial in `nvars` variables.
std::string poly_record(const Poly& p);
Poly parse_poly_record(const std::string& s, int nvars);

}  // namespace sjf
