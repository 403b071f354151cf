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

// Standard L-function of a Jacobi eigenform over Q assembled from Satake or
// eigenvalue data, together with its normalizers and pi-exponents.
//
// Ideals of Q are positive integers: N(a) = a and chi*(a) = chi(a).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sjf/matrix.hpp"
#include "sjf/numth.hpp"
#include "sjf/petersson.hpp"
#include "sjf/real.hpp"

namespace sjf {

// L_p(X) for one prime: coefficients c_0 = 1, ..., c_2n.
struct EulerFactor {
  std::optional<std::vector<Complex>> satake;
  std::vector<Complex> poly;
  Complex eval(const Complex& X) const;
};

// L_p(X) = prod (1 - mu X)(1 - X/mu).
EulerFactor euler_factor_from_satake(const std::vector<Complex>& mu);
// Raises kInvariant when the coefficients are not palindromic
// (c_j = c_{2n-j}), which every product of the above shape satisfies.
EulerFactor euler_factor_from_poly(std::vector<Complex> poly);

// G_p as a ratio of polynomials in X = p^-s.
struct GCorrection {
  std::vector<Rational> num{Rational(1)};
  std::vector<Rational> den{Rational(1)};
  Complex eval(const Complex& X) const;
};

struct LSeriesSpec {
  int n = 1;
  int l = 1;
  Rational k;
  long level = 1;  // c
  DirichletCharacter chi;
  QuadCharacterPsiS psi;
  std::map<long, Complex> eigenvalues;  // a -> lambda(a)
  std::map<long, EulerFactor> euler;    // primes prime to the level
  std::map<long, GCorrection> g;        // defaults to 1
  long prec = kDefaultPrecision;

  bool coprime_to_level(long p) const { return level % p != 0; }
  // chi(a) as a complex number.
  Complex chi_value(long a) const { return chi.value(a, prec); }
};

// Largest |log|mu|| over stored Satake data is zero.
bool has_unitary_satake(const LSeriesSpec& spec);

// Fills spec.eigenvalues for a <= cutoff from the identity
//   frakL(chi, s)^-1 prod_p L_p(chi(p) p^-s)^-1 = sum_a lambda(a) chi(a) a^-(s+n+l/2)
// with G = 1; lambda(a) = 0 where chi(a) = 0.
void eigenvalues_from_euler(LSeriesSpec& spec, long cutoff);

struct MultiplicativityReport {
  size_t pairs_checked = 0;
  Real max_error;
  bool pass = true;
};
MultiplicativityReport check_multiplicativity(const LSeriesSpec& spec, long limit,
                                              const Real& tolerance);

struct SeriesValue {
  Complex value;
  // Bound on the omitted part, when one is available.
  std::optional<Real> tail_bound;
  bool outside_window = false;
};

// sum_{a <= cutoff} lambda(a) chi(a) a^-s. Re(s) must exceed 2n + l + 1
// unless allow_outside is set. The tail bound assumes
// |lambda(a)| <= a^(n+l/2) d_{3n}(a), which holds for data generated from
// unitary Satake parameters.
SeriesValue dirichlet_series_D(const LSeriesSpec& spec, const Complex& s, long cutoff,
                               bool allow_outside = false);

// prod_{p <= cutoff, p prime to c} G_p(s) prod_{i=1..n} (1 - chi^2(p) p^-(2s+2n-2i+delta)),
// delta = 0 for even l, 1 for odd l. Raises kPole when a factor vanishes.
Complex frak_L(const LSeriesSpec& spec, const Complex& s, long cutoff);

// prod_{p <= cutoff} L_p(chi(p) p^-s)^-1, p | c contributing 1. Raises
// kDomain when a prime below the cutoff has no Euler factor and kPole when
// a factor vanishes. Re(s) must exceed n + l/2 + 1 unless allow_outside.
SeriesValue euler_product_L(const LSeriesSpec& spec, const Complex& s, long cutoff,
                            bool allow_outside = false);

// Lower bound prod_{p <= cutoff} (1 + p^-sigma)^-2n for |L| with unitary
// Satake data at Re(s) = sigma.
Real nonvanishing_bound(const LSeriesSpec& spec, const Real& sigma, long cutoff);

// sum_{a > N} d_m(a) a^-sigma = zeta(sigma)^m - sum_{a <= N} d_m(a) a^-sigma.
Real divisor_tail(int m, const Real& sigma, long N);

// Lambda^{N}_{k-l/2,c}(s - l/4, chi psi):
//   l even: L_c(2s - l/2, chi psi) prod_{i=1..[N/2]} L_c(4s - l - 2i, chi^2)
//   l odd:  prod_{i=1..[(N+1)/2]} L_c(4s - l - 2i + 1, chi^2)
// Exact when every factor is.
LValue lambda_normalizer(int l, int n_eis, long level, const DirichletCharacter& chi,
                         const DirichletCharacter& psi, const Rational& s, long prec);
LValue lambda_normalizer(int l, int n_eis, long level, const DirichletCharacter& chi,
                         const DirichletCharacter& psi, const Complex& s, long prec);

struct CSkValue {
  Structured value;       // without the undetermined sign
  Rational gamma_ratio;   // Gamma_n(sigma+k-l/2-(n+1)/2) / Gamma_n(sigma+k-l/2)
  bool sign_unknown = true;
};

// det(2S)^-n 2^(n(n+3)/2 - 4 sigma - nk) pi^(n(n+1)/2) Gamma-ratio, up to sign.
// Needs sigma >= 0 and sigma + k - l/2 > 2n.
CSkValue c_Sk(const QMatrix& S, const Rational& k, int n, const Rational& sigma);

// e_sigma = n(k - l + sigma) - e, e = n^2 + n - sigma + l/2 for even l and
// n^2 for odd l.
long exponent_e_sigma(int n, long k, int l, long sigma);
// General-field form n sum_v (k_v - l + sigma) - d e with d = ks.size() and
// e = n^2 + n - sigma + l/2 when l is even and sigma >= 2n + l/2, else n^2.
long exponent_e_sigma_general(int n, const std::vector<long>& ks, int l, long sigma);

// Theorem window k/2 - 2n - l/2 > sigma/2 > n + l/2 + 1 with sigma = k mod 2.
bool in_sigma_window(int n, long k, int l, long sigma);

struct BoldLambda {
  Complex value;
  Complex l_part;                       // L(sigma - n - l/2, f, chi)
  std::optional<Complex> hecke_part;    // L_c(sigma - l/2, chi psi_S), even l
  bool outside_window = false;
};

// bold-Lambda(sigma/2, f, chi).
BoldLambda bold_lambda(const LSeriesSpec& spec, long sigma, long cutoff,
                       bool allow_outside = false);

struct NormalizedValue {
  Complex value;
  long e_sigma = 0;
  std::optional<Rational> recognized;
  Integer height = 0;  // max(|p|, q) of the recognized value
};

// bold-Lambda(sigma/2) / (pi^e_sigma <f, f>) and its rational recognition.
NormalizedValue normalized_special_value(const LSeriesSpec& spec, long sigma,
                                         const Complex& petersson_norm, long cutoff,
                                         const Integer& max_height, bool allow_outside = false);

}  // namespace sjf
