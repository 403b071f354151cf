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

#include "sjf/forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sjf/error.hpp"

namespace sjf {

void validate_index_matrix(const QMatrix& S) {
  if (!S.is_square() || S.rows() < 1) fail(ErrorCode::kDomain, "index matrix must be square");
  if (!S.is_symmetric()) fail(ErrorCode::kDomain, "index matrix must be symmetric");
  if (!S.is_half_integral()) fail(ErrorCode::kDomain, "index matrix must be half-integral");
  if (!S.is_positive_definite()) fail(ErrorCode::kDomain, "index matrix must be positive definite");
}

std::string key_str(const QMatrix& t, const QMatrix& r) {
  return "(t=" + t.str() + ", r=" + r.str() + ")";
}

QMatrix support_block(const QMatrix& S, const QMatrix& t, const QMatrix& r, long lambda) {
  const int l = S.rows(), n = t.rows();
  QMatrix m(l + n, l + n);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m(i, j) = S(i, j);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, l + j) = r(i, j) / 2;
      m(l + j, i) = r(i, j) / 2;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(l + i, l + j) = t(i, j) / lambda;
  return m;
}

QMatrix discriminant_matrix(const QMatrix& S, const QMatrix& t, const QMatrix& r, long lambda) {
  return t * Rational(4) - S.inverse().bracket(r) * Rational(lambda);
}

// ---------------------------------------------------------------------------

JacobiExpansion::JacobiExpansion(int n, Rational k, QMatrix S, long lambda, Rational cap,
                                 bool cuspidal)
    : n_(n), k_(std::move(k)), S_(std::move(S)), lambda_(lambda), cap_(std::move(cap)),
      cuspidal_(cuspidal) {
  if (n_ < 1) fail(ErrorCode::kDomain, "degree n must be positive");
  if (!S_.is_square() || !S_.is_symmetric() || !S_.is_positive_definite()) {
    fail(ErrorCode::kDomain, "index must be symmetric positive definite");
  }
  if (lambda_ < 1) fail(ErrorCode::kDomain, "level lambda must be positive");
}

void JacobiExpansion::check_index(const QMatrix& t, const QMatrix& r) const {
  if (t.rows() != n_ || t.cols() != n_ || !t.is_symmetric()) {
    fail(ErrorCode::kInvariant, "t must be a symmetric n x n matrix at " + key_str(t, r));
  }
  if (r.rows() != l() || r.cols() != n_ || !r.is_integral()) {
    fail(ErrorCode::kInvariant, "r must be an integral l x n matrix at " + key_str(t, r));
  }
  if (t.trace() > cap_) {
    fail(ErrorCode::kInvariant, "index beyond the truncation cap at " + key_str(t, r));
  }
  QMatrix block = support_block(S_, t, r, lambda_);
  if (cuspidal_) {
    if (!block.is_positive_definite()) {
      fail(ErrorCode::kInvariant, "cuspidal support requires a positive definite block at " +
                                      key_str(t, r));
    }
  } else if (!block.is_positive_semidefinite()) {
    fail(ErrorCode::kInvariant, "support requires a positive semidefinite block at " +
                                    key_str(t, r));
  }
}

void JacobiExpansion::set(const QMatrix& t, const QMatrix& r, const Rational& c) {
  check_index(t, r);
  CoeffKey key{t, r};
  if (c == 0) {
    c_.erase(key);
  } else {
    c_[key] = c;
  }
}

void JacobiExpansion::add(const QMatrix& t, const QMatrix& r, const Rational& c) {
  check_index(t, r);
  CoeffKey key{t, r};
  auto it = c_.find(key);
  Rational v = (it == c_.end() ? Rational(0) : it->second) + c;
  if (v == 0) {
    if (it != c_.end()) c_.erase(it);
  } else {
    c_[key] = v;
  }
}

Rational JacobiExpansion::get(const QMatrix& t, const QMatrix& r) const {
  auto it = c_.find(CoeffKey{t, r});
  return it == c_.end() ? Rational(0) : it->second;
}

JacobiExpansion JacobiExpansion::scaled(const Rational& s) const {
  JacobiExpansion out(n_, k_, S_, lambda_, cap_, cuspidal_);
  if (s == 0) return out;
  for (const auto& [key, v] : c_) out.c_[key] = v * s;
  return out;
}

bool JacobiExpansion::same_shape(const JacobiExpansion& o) const {
  return n_ == o.n_ && k_ == o.k_ && S_ == o.S_ && lambda_ == o.lambda_;
}

JacobiExpansion JacobiExpansion::operator+(const JacobiExpansion& o) const {
  if (!same_shape(o)) fail(ErrorCode::kDomain, "cannot add expansions of different shape");
  JacobiExpansion out(n_, k_, S_, lambda_, std::min(cap_, o.cap_), cuspidal_ && o.cuspidal_);
  for (const auto* src : {this, &o}) {
    for (const auto& [key, v] : src->c_) {
      if (key.t.trace() <= out.cap_) out.add(key.t, key.r, v);
    }
  }
  return out;
}

bool JacobiExpansion::operator==(const JacobiExpansion& o) const {
  return same_shape(o) && cap_ == o.cap_ && cuspidal_ == o.cuspidal_ && c_ == o.c_;
}

// ---------------------------------------------------------------------------
// Lattices

namespace {

void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

QMatrix hermite_columns(const QMatrix& basis) {
  if (!basis.is_square() || !basis.is_integral()) {
    fail(ErrorCode::kDomain, "lattice basis must be square and integral");
  }
  const int l = basis.rows();
  std::vector<std::vector<Integer>> h(l, std::vector<Integer>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) h[i][j] = basis(i, j).get_num();
  for (int i = l - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      if (h[i][j] == 0) continue;
      Integer a = h[i][i], b = h[i][j], g, x, y;
      ext_gcd(a, b, g, x, y);
      Integer ag = a / g, bg = b / g;
      for (int r = 0; r < l; ++r) {
        Integer ci = h[r][i], cj = h[r][j];
        h[r][i] = x * ci + y * cj;
        h[r][j] = ag * cj - bg * ci;
      }
    }
    if (h[i][i] == 0) fail(ErrorCode::kDomain, "lattice basis is singular");
    if (h[i][i] < 0)
      for (int r = 0; r < l; ++r) h[r][i] = -h[r][i];
  }
  QMatrix out(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) out(i, j) = Rational(h[i][j]);
  return out;
}

QMatrix reduce_mod_lattice(const QMatrix& v, const QMatrix& H) {
  QMatrix out = v;
  for (int i = H.rows() - 1; i >= 0; --i) {
    Integer q;
    Integer num = out(i, 0).get_num();
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), H(i, i).get_num_mpz_t());
    if (q == 0) continue;
    for (int r = 0; r <= i; ++r) out(r, 0) -= Rational(q) * H(r, i);
  }
  return out;
}

std::vector<QMatrix> coset_representatives(const QMatrix& H) {
  const int l = H.rows();
  std::vector<QMatrix> out;
  QMatrix v(l, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      out.push_back(v);
      return;
    }
    long bound = H(i, i).get_num().get_si();
    for (long a = 0; a < bound; ++a) {
      v(i, 0) = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Theta series

namespace {

struct ShortVector {
  QMatrix y;       // l x 1 integral
  Rational value;  // (y+c)^T G (y+c) / 2
};

// All y in Z^l with (y+c)^T G (y+c) / 2 <= cap, G positive definite.
std::vector<ShortVector> short_shifted_vectors(const QMatrix& G, const QMatrix& c,
                                               const Rational& cap) {
  std::vector<ShortVector> out;
  if (cap < 0) return out;
  const int l = G.rows();
  QMatrix ginv = G.inverse();
  std::vector<long> lo(l), hi(l);
  const double capd = cap.get_d();
  for (int i = 0; i < l; ++i) {
    double radius = std::sqrt(std::max(0.0, 2.0 * capd * ginv(i, i).get_d())) + 1e-9;
    double ci = c(i, 0).get_d();
    lo[i] = static_cast<long>(std::floor(-ci - radius)) - 1;
    hi[i] = static_cast<long>(std::ceil(-ci + radius)) + 1;
  }
  QMatrix y(l, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      QMatrix x = y + c;
      Rational v = G.bracket(x)(0, 0) / 2;
      if (v <= cap) out.push_back({y, v});
      return;
    }
    for (long a = lo[i]; a <= hi[i]; ++a) {
      y(i, 0) = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

QMatrix column(const QMatrix& m, int j) { return m.block(0, j, m.rows(), 1); }

}  // namespace

JacobiExpansion theta_series(const QMatrix& Q, const QMatrix& lattice, const QMatrix& h,
                             const Rational& cap) {
  if (!Q.is_square() || !Q.is_symmetric() || !Q.is_positive_definite()) {
    fail(ErrorCode::kDomain, "theta series needs a symmetric positive definite form");
  }
  const int l = Q.rows();
  if (lattice.rows() != l || lattice.cols() != l || !lattice.is_integral() ||
      lattice.det() == 0) {
    fail(ErrorCode::kDomain, "theta lattice must have a nonsingular integral l x l basis");
  }
  if (h.rows() != l || h.cols() < 1) fail(ErrorCode::kDomain, "characteristic must be l x n");
  const int n = h.cols();
  JacobiExpansion out(n, ratio(l, 2), Q * ratio(1, 2), 1, cap, false);
  QMatrix G = Q.bracket(lattice);
  QMatrix binv = lattice.inverse();
  std::vector<std::vector<ShortVector>> cols(n);
  std::vector<QMatrix> shifts(n);
  for (int j = 0; j < n; ++j) {
    shifts[j] = binv * column(h, j);
    cols[j] = short_shifted_vectors(G, shifts[j], cap);
  }
  // Combine columns whose diagonal traces fit under the cap.
  QMatrix X(l, n);
  std::function<void(int, Rational)> rec = [&](int j, Rational used) {
    if (j == n) {
      QMatrix t = Q.bracket(X) * ratio(1, 2);
      QMatrix r = Q * X;
      out.add(t, r, 1);
      return;
    }
    for (const auto& sv : cols[j]) {
      Rational u = used + sv.value;
      if (u > cap) continue;
      QMatrix x = lattice * (sv.y + shifts[j]);
      for (int i = 0; i < l; ++i) X(i, j) = x(i, 0);
      rec(j + 1, u);
    }
  };
  rec(0, Rational(0));
  return out;
}

// ---------------------------------------------------------------------------
// Theta decomposition (n = 1)

bool ThetaComponents::operator==(const ThetaComponents& o) const {
  return S == o.S && lambda == o.lambda && weight == o.weight && cap == o.cap &&
         cuspidal == o.cuspidal && lattice1 == o.lattice1 && lattice2 == o.lattice2 &&
         components == o.components;
}

ThetaComponents empty_theta_components(const QMatrix& S, long lambda, const Rational& weight,
                                       const Rational& cap, bool cuspidal) {
  ThetaComponents tc;
  tc.S = S;
  tc.lambda = lambda;
  tc.weight = weight;
  tc.cap = cap;
  tc.cuspidal = cuspidal;
  tc.lattice1 = QMatrix::identity(S.rows());
  tc.lattice2 = hermite_columns(S * Rational(2));
  for (auto& mu : coset_representatives(tc.lattice2)) tc.components[mu];
  return tc;
}

ThetaComponents theta_decompose(const JacobiExpansion& f) {
  if (f.n() != 1) fail(ErrorCode::kDomain, "theta decomposition is implemented for n = 1");
  const QMatrix& S = f.S();
  if (!(S * Rational(2)).is_integral()) {
    fail(ErrorCode::kDomain, "theta decomposition needs 2S integral");
  }
  const int l = S.rows();
  ThetaComponents tc = empty_theta_components(S, f.lambda(), f.k() - ratio(l, 2), f.cap(),
                                        f.cuspidal_flag());
  QMatrix sinv = S.inverse();
  for (const auto& [key, c] : f.coefficients()) {
    QMatrix mu = reduce_mod_lattice(key.r, tc.lattice2);
    Rational D = key.t(0, 0) / f.lambda() - sinv.bracket(key.r)(0, 0) / 4;
    auto& comp = tc.components.at(mu);
    auto [it, inserted] = comp.emplace(D, c);
    if (!inserted && it->second != c) {
      fail(ErrorCode::kInconsistent, "coefficients disagree within one theta class at " +
                                         key_str(key.t, key.r));
    }
  }
  // Every index of a present class inside the cap must carry the same value.
  QMatrix two_s = S * Rational(2);
  QMatrix two_s_inv = two_s.inverse();
  for (const auto& [mu, comp] : tc.components) {
    QMatrix h = two_s_inv * mu;
    for (const auto& [D, c] : comp) {
      Rational room = f.cap() / f.lambda() - D;
      for (const auto& sv : short_shifted_vectors(two_s, h, room)) {
        QMatrix r = two_s * (sv.y + h);
        QMatrix t = QMatrix::scalar((D + sv.value) * f.lambda());
        if (f.get(t, r) != c) {
          fail(ErrorCode::kInconsistent, "theta class of " + key_str(t, r) +
                                             " is incomplete or inconsistent");
        }
      }
    }
  }
  return tc;
}

JacobiExpansion theta_reconstruct(const ThetaComponents& tc, const Rational& cap) {
  const QMatrix& S = tc.S;
  const int l = S.rows();
  JacobiExpansion out(1, tc.weight + ratio(l, 2), S, tc.lambda, cap, tc.cuspidal);
  QMatrix two_s = S * Rational(2);
  QMatrix two_s_inv = two_s.inverse();
  for (const auto& [mu, comp] : tc.components) {
    if (comp.empty()) continue;
    QMatrix h = two_s_inv * mu;
    Rational dmin = comp.begin()->first;
    Rational limit = cap / tc.lambda;
    for (const auto& sv : short_shifted_vectors(two_s, h, limit - dmin)) {
      QMatrix r = two_s * (sv.y + h);
      for (const auto& [D, c] : comp) {
        if (D + sv.value > limit) break;
        out.add(QMatrix::scalar((D + sv.value) * tc.lambda), r, c);
      }
    }
  }
  return out;
}

bool is_cuspidal(const JacobiExpansion& f) {
  for (const auto& [key, c] : f.coefficients()) {
    if (!support_block(f.S(), key.t, key.r, f.lambda()).is_positive_definite()) return false;
  }
  return true;
}

PropertyAReport property_A_check(const JacobiExpansion& f) {
  ThetaComponents tc = theta_decompose(f);
  PropertyAReport rep;
  rep.necessary_only = f.lambda() > 1;
  for (const auto& [mu, comp] : tc.components) {
    PropertyAEntry e;
    e.mu = mu;
    if (!comp.empty()) {
      e.min_exponent = comp.begin()->first;
      e.pass = *e.min_exponent > 0;
    }
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Group elements

QMatrix symplectic_form(int n) {
  QMatrix J(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(i, n + i) = -1;
    J(n + i, i) = 1;
  }
  return J;
}

GroupElement GroupElement::identity(int n, int l) {
  return {QMatrix(l, n), QMatrix(l, n), QMatrix(l, l), QMatrix::identity(2 * n)};
}

bool GroupElement::is_symplectic() const {
  QMatrix J = symplectic_form(n());
  return g.transpose() * J * g == J;
}

void GroupElement::validate() const {
  const int n2 = g.rows();
  if (n2 % 2 || g.cols() != n2) fail(ErrorCode::kDomain, "g must be 2n x 2n");
  const int nn = n2 / 2, ll = lam.rows();
  if (lam.cols() != nn || mu.rows() != ll || mu.cols() != nn) {
    fail(ErrorCode::kDomain, "lambda and mu must be l x n");
  }
  if (kappa.rows() != ll || kappa.cols() != ll || !kappa.is_symmetric()) {
    fail(ErrorCode::kDomain, "kappa must be symmetric l x l");
  }
  if (!is_symplectic()) fail(ErrorCode::kDomain, "g is not symplectic");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  QMatrix lt = o.lam * d().transpose() - o.mu * c().transpose();
  QMatrix mt = o.mu * a().transpose() - o.lam * b().transpose();
  GroupElement out;
  out.lam = lam + lt;
  out.mu = mu + mt;
  out.kappa = kappa + o.kappa + lam * mt.transpose() + mt * lam.transpose() +
              lt * mt.transpose() - o.lam * o.mu.transpose();
  out.g = g * o.g;
  return out;
}

namespace {

CMatrix cblock(const QMatrix& q, long prec) { return CMatrix::from(q, prec); }

Complex ctrace_product(const CMatrix& a, const CMatrix& b) { return (a * b).trace(); }

}  // namespace

JacobiPoint act(const GroupElement& x, const JacobiPoint& z) {
  const long prec = z.tau.prec();
  CMatrix a = cblock(x.a(), prec), b = cblock(x.b(), prec), c = cblock(x.c(), prec),
          d = cblock(x.d(), prec);
  CMatrix m = c * z.tau + d;
  CMatrix minv = m.inverse();
  JacobiPoint out;
  out.tau = (a * z.tau + b) * minv;
  out.w = z.w * minv + cblock(x.lam, prec) * out.tau + cblock(x.mu, prec);
  return out;
}

Complex eval_J(const Rational& k, const QMatrix& S, const GroupElement& x, const JacobiPoint& z) {
  const long prec = z.tau.prec();
  const long wp = prec + 32;
  CMatrix tau = z.tau, w = z.w;
  CMatrix c = cblock(x.c(), wp), d = cblock(x.d(), wp), a = cblock(x.a(), wp),
          b = cblock(x.b(), wp);
  CMatrix Sm = cblock(S, wp), lam = cblock(x.lam, wp);
  CMatrix m = c * tau + d;
  Complex j = m.det();
  if (j.is_zero()) fail(ErrorCode::kDomain, "singular denominator c tau + d");
  CMatrix minv = m.inverse();
  CMatrix gtau = (a * tau + b) * minv;
  CMatrix wt = w.transpose(), lt = lam.transpose();
  Complex arg = -Complex(Rational((S * x.kappa).trace()), wp);
  arg += ctrace_product(wt * Sm * w * minv, c);
  arg -= ctrace_product(lt * Sm * w, minv) * Real(2L, wp);
  arg -= ctrace_product(lt * Sm * lam, gtau);
  Complex e = expi2pi(arg);
  if (k.get_den() == 1) {
    return (pow(j, k.get_num().get_si()) * e).with_prec(prec);
  }
  if (k.get_den() != 2) fail(ErrorCode::kDomain, "weight must be integral or half-integral");
  Real mag = pow(abs(j), Real(k, wp)) * abs(e);
  return Complex(mag, Real(0L, wp)).with_prec(prec);
}

Real delta_Sk(const Rational& k, const QMatrix& S, const JacobiPoint& z) {
  const long prec = z.tau.prec();
  const long wp = prec + 32;
  CMatrix y = z.tau.imag_part(), v = z.w.imag_part();
  Real dy = y.det().re();
  CMatrix sv = v.transpose() * cblock(S, wp) * v * y.inverse();
  Real ex = sv.trace().re() * Real::pi(wp) * Real(-4L, wp);
  return (pow(dy, Real(k, wp)) * exp(ex)).with_prec(prec);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Lower bound for the smallest eigenvalue of a positive definite real matrix.
Real min_eigen_lower_bound(const CMatrix& y) {
  const int n = y.rows();
  Real det = y.det().re();
  if (n == 1) return det;
  Real tr = y.trace().re();
  return det / pow(tr, long(n - 1));
}

}  // namespace

EvalResult evaluate(const JacobiExpansion& f, const JacobiPoint& z, long prec) {
  const long wp = prec + 32;
  if (z.tau.rows() != f.n() || z.w.rows() != f.l() || z.w.cols() != f.n()) {
    fail(ErrorCode::kDomain, "evaluation point has the wrong shape");
  }
  CMatrix tau = z.tau, w = z.w;
  Complex acc(Real(0L, wp), Real(0L, wp));
  Real inv_lambda(ratio(1, f.lambda()), wp);
  for (const auto& [key, c] : f.coefficients()) {
    Complex arg = (cblock(key.t, wp) * tau).trace() * inv_lambda +
                  (cblock(key.r.transpose(), wp) * w).trace();
    acc += expi2pi(arg) * Real(c, wp);
  }
  EvalResult res;
  res.value = acc.with_prec(prec);
  Real ymin = min_eigen_lower_bound(tau.imag_part());
  Real next(Rational(f.cap() + 1), wp);
  res.tail_estimate = exp(-(Real::pi(wp) * 2L) * next * ymin * inv_lambda).with_prec(prec);
  Real scale = acc.is_zero() ? Real(1L, wp) : abs(acc);
  res.truncation_warning = res.tail_estimate > ldexp(scale, -prec);
  return res;
}

EvalResult f_star_evaluate(const JacobiExpansion& f, const CMatrix& tau, const QMatrix& v,
                           long prec) {
  const int n = f.n(), l = f.l();
  if (v.rows() != l || v.cols() != 2 * n) fail(ErrorCode::kDomain, "v must be l x 2n");
  const long wp = prec + 32;
  CMatrix t = tau;
  CMatrix w = cblock(v.block(0, 0, l, n), wp) * t + cblock(v.block(0, n, l, n), wp);
  CMatrix diff = t - t.conj();
  Complex pre = (cblock(f.S(), wp) * w * diff.inverse() * w.transpose()).trace();
  EvalResult r = evaluate(f, JacobiPoint{t, w}, wp);
  r.value = (expi2pi(pre) * r.value).with_prec(prec);
  return r;
}

GrowthProfile growth_profile(const JacobiExpansion& f, size_t sample_count, long prec,
                             double y_max) {
  if (f.n() != 1) fail(ErrorCode::kDomain, "growth profile is implemented for n = 1");
  const int l = f.l();
  static const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  if (2 + 2 * l > int(sizeof(kPrimes) / sizeof(int))) {
    fail(ErrorCode::kDomain, "growth profile supports l <= 6");
  }
  auto halton = [](size_t i, int base) {
    double f = 1, r = 0;
    while (i > 0) {
      f /= base;
      r += f * double(i % base);
      i /= base;
    }
    return r;
  };
  GrowthProfile gp;
  gp.sup = Real(0L, prec);
  gp.mean = Real(0L, prec);
  Real sum(0L, prec);
  QMatrix S = f.S();
  for (size_t s = 1; s <= sample_count; ++s) {
    double x = halton(s, kPrimes[0]) - 0.5;
    double ylo = std::sqrt(1.0 - x * x);
    double y = ylo + halton(s, kPrimes[1]) * (y_max - ylo);
    CMatrix tau(1, 1, prec);
    tau(0, 0) = Complex(Real(x, prec), Real(y, prec));
    CMatrix w(l, 1, prec);
    QMatrix lamv(l, 1);
    for (int i = 0; i < l; ++i) {
      double lam = halton(s, kPrimes[2 + 2 * i]);
      double mu = halton(s, kPrimes[3 + 2 * i]);
      w(i, 0) = Complex(Real(lam * x + mu, prec), Real(lam * y, prec));
      lamv(i, 0) = Rational(lam);
    }
    Complex val = evaluate(f, JacobiPoint{tau, w}, prec).value;
    Real yr(y, prec);
    // tr(y^-1 S[v]) with v = lambda y.
    Real sl(Rational(S.bracket(lamv)(0, 0)), prec);
    Real phi = pow(yr, Real(Rational(f.k() / 2), prec)) *
               exp(-(Real::pi(prec) * 2L) * sl * yr) * abs(val);
    if (phi > gp.sup) gp.sup = phi;
    sum += phi;
  }
  gp.samples = sample_count;
  if (sample_count) gp.mean = sum / long(sample_count);
  return gp;
}

}  // namespace sjf
