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

#include <optional>
#include <string>
#include <vector>

#include "sjf/real.hpp"

namespace sjf {

class QMatrix;

// q * pi^(pi_half_power / 2).
struct PiPower {
  Rational q;
  long pi_half_power = 0;
  Real eval(long prec) const;
};

// Multivariate gamma pi^(n(n-1)/4) prod_{i<n} Gamma(x - i/2).
// Exact when 2x is an integer; raises kPole at poles.
PiPower gamma_n_exact(int n, const Rational& x);
Real gamma_n(int n, const Rational& x, long prec);
Complex gamma_n(int n, const Complex& x, long prec);

// Gamma_n(a)/Gamma_n(b) as an exact Rational. Factors are paired by residue
// class modulo 1; raises kDomain when the classes do not match (the ratio
// would carry a power of sqrt(pi) or a transcendental gamma ratio).
Rational gamma_n_ratio(int n, const Rational& a, const Rational& b);

Complex complex_gamma(const Complex& z, long prec);
Complex complex_lgamma(const Complex& z, long prec);

// Bernoulli numbers B_0..B_m with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int m);
Rational bernoulli_poly(int m, const Rational& x, const std::vector<Rational>& b);

// Character modulo N with values exp(2 pi i e(a)/order), e(a) = -1 meaning 0.
class DirichletCharacter {
 public:
  DirichletCharacter() : DirichletCharacter(principal(1)) {}
  static DirichletCharacter principal(long modulus);
  // Kronecker symbol (D/.) for a discriminant D = 0,1 mod 4, D != 0.
  static DirichletCharacter kronecker(long disc);
  static DirichletCharacter from_table(long modulus, long order, std::vector<long> exps);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  const std::vector<long>& exponents() const { return exps_; }
  // Exponent of a mod modulus, or -1 when gcd(a, N) > 1.
  long exponent(long a) const;
  bool is_zero_at(long a) const { return exponent(a) < 0; }
  bool is_real() const { return order_ <= 2; }
  bool is_principal() const;
  int parity() const;  // +1 even, -1 odd
  // Exact value for real characters.
  int real_value(long a) const;
  Complex value(long a, long prec) const;
  DirichletCharacter operator*(const DirichletCharacter& o) const;
  DirichletCharacter square() const { return *this * *this; }
  std::string str() const;
  bool operator==(const DirichletCharacter& o) const {
    return modulus_ == o.modulus_ && order_ == o.order_ && exps_ == o.exps_;
  }

 private:
  DirichletCharacter(long modulus, long order, std::vector<long> exps);
  long modulus_;
  long order_;
  std::vector<long> exps_;
};

long kronecker_symbol(long d, long n);
long squarefree_kernel(const Integer& v);  // signed squarefree part
long fundamental_discriminant(const Rational& generator);

// An L-value: exact when the computation stayed in Q.
struct LValue {
  std::optional<Rational> exact;
  Complex value;
};

// Dirichlet L(s, chi) on the plain Dirichlet series over residues mod N.
LValue dirichlet_L(const Rational& s, const DirichletCharacter& chi, long prec);
LValue dirichlet_L(const Complex& s, const DirichletCharacter& chi, long prec);
// L(s, chi) * prod_{q | c} (1 - chi(q) q^-s).
LValue dirichlet_L_depleted(const Rational& s, const DirichletCharacter& chi,
                            long c, long prec);
LValue dirichlet_L_depleted(const Complex& s, const DirichletCharacter& chi,
                            long c, long prec);

// Hurwitz zeta by Euler-Maclaurin summation.
Complex hurwitz_zeta(const Complex& s, const Rational& a, long prec);
// Generalized Bernoulli number B_{m,chi} for a real character.
Rational generalized_bernoulli(int m, const DirichletCharacter& chi);

// Quadratic character attached to an index matrix S.
struct QuadCharacterPsiS {
  long l = 0;
  // Generator D of K_S = Q(sqrt(D)): det(2S) for odd l, (-1)^(l/2) det(2S)
  // for even l.
  Rational primary_generator;
  long primary_discriminant = 1;  // 1 when K_S = Q
  DirichletCharacter character;
  // Even l only: the generator ((-1)^(l/4))^2 det(S) of the alternative
  // formula with the principal square root of -1.
  std::optional<Rational> alternate_generator;
  std::optional<long> alternate_discriminant;
  bool branches_agree = true;
};
QuadCharacterPsiS psi_S(const QMatrix& S);

// Continued-fraction recognition: the first convergent p/q with
// |x - p/q| <= tolerance (default 2^-(prec/2)) and max(|p|, q) <= max_height.
std::optional<Rational> rational_recognize(const Complex& x, const Integer& max_height,
                                           std::optional<Real> tolerance = std::nullopt);

std::vector<long> primes_up_to(long n);
std::vector<std::pair<long, int>> factorize(long n);

}  // namespace sjf
