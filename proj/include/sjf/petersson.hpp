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

// Petersson pairings against Poincare series, the reproducing-kernel constant,
// and a numerical Petersson integral over the degree-1 fundamental domain.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sjf/forms.hpp"
#include "sjf/projection.hpp"
#include "sjf/real.hpp"

namespace sjf {

// q * pi^(pi_half_power/2) * sqrt(sqrt_arg) * vol^vol_power, with vol the
// symbolic covolume. sqrt_arg is kept squarefree in numerator and denominator.
struct Structured {
  Rational q = 1;
  long pi_half_power = 0;
  Rational sqrt_arg = 1;
  long vol_power = 0;

  static Structured rational(const Rational& q);
  // base^e for base > 0 and 2e integral.
  static Structured power(const Rational& base, const Rational& e);
  static Structured pi_power(const Rational& e);  // 2e integral

  Structured operator*(const Structured& o) const;
  Structured inverse() const;  // raises kDomain on zero
  bool is_zero() const { return q == 0; }
  bool operator==(const Structured& o) const;
  // Numeric value; `vol` is required when vol_power != 0.
  Real eval(long prec, const std::optional<Real>& vol = std::nullopt) const;
  std::string str() const;
};

// C = vol^-1 det(2S)^(-n/2) Gamma_n(kappa) (pi/lambda)^(-n kappa),
// kappa = k - (n+l+1)/2. Raises kPole at a gamma pole and kDomain for
// kappa <= 0.
Structured kernel_constant(const Rational& k, int n, const QMatrix& S, long lambda);

enum class PairingMethod { kClosedForm, kQuadrature };

struct PairingResult {
  std::optional<Structured> exact;
  std::optional<Complex> numeric;
  PairingMethod method = PairingMethod::kClosedForm;
};

// <f, P_{t,r}> = C det(h)^(-kappa) c(t, r), h = 4t - lambda S^-1[r]. f must be
// cuspidal and k > 2n + l; indices without a stored coefficient pair to 0.
PairingResult pair_with_poincare(const JacobiExpansion& f, const QMatrix& t, const QMatrix& r);

struct QuadratureOptions {
  long prec = 128;
  int x_nodes = 40;       // Gauss-Legendre nodes in x on the lower region
  int y_nodes = 20;       // nodes in y between the arc and y = 1
  int p_panels = 4;       // composite rule on [0, 1] per Heisenberg coordinate
  int p_nodes = 16;
  double tolerance = 1e-10;  // relative agreement required between two rules
};

struct QuadratureResult {
  Complex value;
  Real error_estimate;  // |coarse - fine|
};

// <f, g> = vol^-1 int f conj(g) Delta_{S,k} dz over the degree-1 fundamental
// domain with vol = pi/3, lambda = 1, l = 1. Either argument may be nearly
// holomorphic; one of them must be cuspidal. The region y >= 1 is integrated
// exactly in x, the rest by a product Gauss-Legendre rule. Raises
// kConvergence when the coarse and fine rules disagree beyond the tolerance.
QuadratureResult petersson_quadrature(const NearlyHolExpansion& f, const NearlyHolExpansion& g,
                                      const QuadratureOptions& opt = {});
QuadratureResult petersson_quadrature(const JacobiExpansion& f, const JacobiExpansion& g,
                                      const QuadratureOptions& opt = {});

struct KernelPointReport {
  JacobiPoint z;
  Complex reproduced;  // <f, K(., z)>
  Complex direct;      // f(z)
  Real rel_error;
};

struct KernelCheckReport {
  Complex norm;  // <f, f> used to orthonormalize
  std::vector<KernelPointReport> points;
  Real max_rel_error;
};

// Builds the truncated kernel of the space spanned by the cusp form f,
//   K(z1, z2) = C^-1 sum det(h)^kappa P_{t,r}(z1) conj(e(t tau2) e(r^T w2)),
// with each P_{t,r} replaced by its projection <P_{t,r}, f>/<f, f> f, and
// compares <f, K(., z)> with f(z). The normalizing <f, f> uses `opt`; the
// final pairing uses a finer rule.
KernelCheckReport kernel_check(const JacobiExpansion& f, const std::vector<JacobiPoint>& points,
                               const QuadratureOptions& opt = {});

struct AdjointnessReport {
  Complex lhs;  // <f, g>
  Complex rhs;  // <f, Hol(g)>
  Real abs_error;
  Real rel_error;
};

AdjointnessReport adjointness_check(const JacobiExpansion& f, const NearlyHolExpansion& g,
                                    const QuadratureOptions& opt = {});

}  // namespace sjf
