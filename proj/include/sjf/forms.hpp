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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sjf/matrix.hpp"
#include "sjf/real.hpp"

namespace sjf {

// Positive definite, symmetric, diagonal integral, off-diagonal in (1/2)Z.
void validate_index_matrix(const QMatrix& S);

// Fourier index (t, r): t is n x n symmetric, r is l x n integral.
struct CoeffKey {
  QMatrix t;
  QMatrix r;
  bool operator<(const CoeffKey& o) const {
    if (t != o.t) return t < o.t;
    return r < o.r;
  }
  bool operator==(const CoeffKey& o) const { return t == o.t && r == o.r; }
};

// Truncated Fourier expansion
//   f(tau, w) = sum c(t, r) e(tr(t tau) / lambda) e(tr(r^T w)),
// truncated to tr(t) <= cap. Every stored index satisfies
// [[S, r/2], [r^T/2, t/lambda]] >= 0, strictly when the expansion is flagged
// cuspidal. Zero coefficients are never stored.
class JacobiExpansion {
 public:
  JacobiExpansion() = default;
  JacobiExpansion(int n, Rational k, QMatrix S, long lambda, Rational cap, bool cuspidal = false);

  int n() const { return n_; }
  int l() const { return S_.rows(); }
  const Rational& k() const { return k_; }
  const QMatrix& S() const { return S_; }
  long lambda() const { return lambda_; }
  const Rational& cap() const { return cap_; }
  bool cuspidal_flag() const { return cuspidal_; }
  const std::map<CoeffKey, Rational>& coefficients() const { return c_; }
  size_t size() const { return c_.size(); }

  // Raises kInvariant naming (t, r) when the index is not admissible.
  void set(const QMatrix& t, const QMatrix& r, const Rational& c);
  void add(const QMatrix& t, const QMatrix& r, const Rational& c);
  Rational get(const QMatrix& t, const QMatrix& r) const;
  // Throws if (t, r) cannot be stored in this expansion.
  void check_index(const QMatrix& t, const QMatrix& r) const;

  JacobiExpansion scaled(const Rational& s) const;
  // Same metadata; cap becomes the smaller of the two.
  JacobiExpansion operator+(const JacobiExpansion& o) const;
  bool same_shape(const JacobiExpansion& o) const;
  bool operator==(const JacobiExpansion& o) const;

 private:
  int n_ = 1;
  Rational k_;
  QMatrix S_;
  long lambda_ = 1;
  Rational cap_;
  bool cuspidal_ = false;
  std::map<CoeffKey, Rational> c_;
};

std::string key_str(const QMatrix& t, const QMatrix& r);

// Block matrix [[S, r/2], [r^T/2, t/lambda]].
QMatrix support_block(const QMatrix& S, const QMatrix& t, const QMatrix& r, long lambda);
// 4t - lambda S^-1[r].
QMatrix discriminant_matrix(const QMatrix& S, const QMatrix& t, const QMatrix& r, long lambda);

// --- Lattices ------------------------------------------------------------

// Upper-triangular column Hermite form of a nonsingular integral matrix:
// same column lattice, positive diagonal.
QMatrix hermite_columns(const QMatrix& basis);
// Canonical representative of v (l x 1 integral) modulo the column lattice
// of an upper-triangular Hermite basis H: 0 <= v_i < H_ii.
QMatrix reduce_mod_lattice(const QMatrix& v, const QMatrix& H);
// All canonical representatives of Z^l / H Z^l.
std::vector<QMatrix> coset_representatives(const QMatrix& H);

// --- Theta series --------------------------------------------------------

// Theta_{Q, L, h}(tau, w) = sum_{x in L^n} e(tr(Q[x+h] tau)/2) e(tr((Q(x+h))^T w)),
// L spanned by the columns of `lattice` (l x l), h an l x n characteristic.
// The result has weight l/2, index Q/2, level 1, and coefficient 1 on
// t = Q[x+h]/2, r = Q(x+h) for every x with tr(t) <= cap.
JacobiExpansion theta_series(const QMatrix& Q, const QMatrix& lattice, const QMatrix& h,
                             const Rational& cap);

// Components f_mu indexed by mu in Z^l / 2S Z^l (n = 1), so that
//   f(tau, w) = sum_mu f_mu(tau) Theta_{2S, Z^l, (2S)^-1 mu}(tau, w).
// f_mu is a map exponent -> coefficient, the exponent being
// t/lambda - S^-1[r]/4.
struct ThetaComponents {
  QMatrix S;
  long lambda = 1;
  Rational weight;  // k - l/2
  Rational cap;
  bool cuspidal = false;
  QMatrix lattice1;  // Z^l (identity basis)
  QMatrix lattice2;  // Hermite basis of 2S Z^l
  std::map<QMatrix, std::map<Rational, Rational>> components;
  size_t index() const { return components.size(); }
  bool operator==(const ThetaComponents& o) const;
};

// All classes of Z^l / 2S Z^l present and empty.
ThetaComponents empty_theta_components(const QMatrix& S, long lambda, const Rational& weight,
                                       const Rational& cap, bool cuspidal);

// Raises kInconsistent when two indices in one component with the same
// exponent carry different coefficients, or when an index inside the
// truncation is missing for a class that is present.
ThetaComponents theta_decompose(const JacobiExpansion& f);
// Weight of the result is tc.weight + l/2.
JacobiExpansion theta_reconstruct(const ThetaComponents& tc, const Rational& cap);

bool is_cuspidal(const JacobiExpansion& f);

struct PropertyAEntry {
  QMatrix mu;
  std::optional<Rational> min_exponent;  // none for a zero component
  bool pass = true;
};
struct PropertyAReport {
  bool pass = true;
  // At level lambda > 1 positivity of the exponents is necessary only.
  bool necessary_only = false;
  std::vector<PropertyAEntry> entries;
};
PropertyAReport property_A_check(const JacobiExpansion& f);

// --- Group elements and the factor of automorphy ------------------------

struct JacobiPoint {
  CMatrix tau;  // n x n, Im positive definite
  CMatrix w;    // l x n
};

// (lambda, mu, kappa) g.
struct GroupElement {
  QMatrix lam, mu, kappa, g;
  static GroupElement identity(int n, int l);
  int n() const { return g.rows() / 2; }
  int l() const { return lam.rows(); }
  QMatrix a() const { return g.block(0, 0, n(), n()); }
  QMatrix b() const { return g.block(0, n(), n(), n()); }
  QMatrix c() const { return g.block(n(), 0, n(), n()); }
  QMatrix d() const { return g.block(n(), n(), n(), n()); }
  bool is_symplectic() const;
  void validate() const;
  GroupElement operator*(const GroupElement& o) const;
  bool operator==(const GroupElement& o) const {
    return lam == o.lam && mu == o.mu && kappa == o.kappa && g == o.g;
  }
};

QMatrix symplectic_form(int n);

JacobiPoint act(const GroupElement& x, const JacobiPoint& z);
// J_{k,S}(x, z). For k in 1/2 + Z only |J| is returned (real, nonnegative).
Complex eval_J(const Rational& k, const QMatrix& S, const GroupElement& x, const JacobiPoint& z);
// det(y)^k exp(-4 pi tr(S[v] y^-1)).
Real delta_Sk(const Rational& k, const QMatrix& S, const JacobiPoint& z);

// --- Evaluation -----------------------------------------------------------

struct EvalResult {
  Complex value;
  // Size of the first omitted term's exponential factor at trace cap + 1.
  Real tail_estimate;
  bool truncation_warning = false;
};

EvalResult evaluate(const JacobiExpansion& f, const JacobiPoint& z, long prec);
// f_*(tau, v Omega_tau) with Omega_tau = [tau; 1_n] and v = (v1 v2) l x 2n:
// e(tr(S w (tau - conj tau)^-1 w^T)) f(tau, w), w = v1 tau + v2.
EvalResult f_star_evaluate(const JacobiExpansion& f, const CMatrix& tau, const QMatrix& v,
                           long prec);

struct GrowthProfile {
  Real sup;
  Real mean;
  size_t samples = 0;
};
// phi(z) = det(y)^(k/2) exp(-2 pi tr(y^-1 S[v])) |f(z)| over a Halton sample of
// the n = 1 fundamental region (|x| <= 1/2, |tau| >= 1, y <= y_max) and
// w = lambda tau + mu with (lambda, mu) in [0, 1)^(l x 2).
GrowthProfile growth_profile(const JacobiExpansion& f, size_t sample_count, long prec,
                             double y_max = 4.0);

}  // namespace sjf
