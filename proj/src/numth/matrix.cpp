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

#include "sjf/matrix.hpp"

#include <algorithm>
#include <cctype>

#include "sjf/error.hpp"

namespace sjf {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (int(rows[i].size()) != m.cols_) fail(ErrorCode::kParse, "ragged matrix rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail(ErrorCode::kParse, "empty matrix literal");
  if (s[0] != '[') return scalar(parse_rational(s));
  if (s.size() < 4 || s[1] != '[' || s.substr(s.size() - 2) != "]]") {
    fail(ErrorCode::kParse, "malformed matrix literal '" + text + "'");
  }
  std::vector<std::vector<Rational>> rows;
  size_t pos = 1;
  while (pos < s.size() - 1) {
    if (s[pos] != '[') fail(ErrorCode::kParse, "malformed matrix literal '" + text + "'");
    size_t close = s.find(']', pos);
    if (close == std::string::npos) fail(ErrorCode::kParse, "unterminated matrix row");
    std::vector<Rational> row;
    std::string body = s.substr(pos + 1, close - pos - 1);
    size_t start = 0;
    while (true) {
      size_t comma = body.find(',', start);
      row.push_back(parse_rational(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    pos = close + 1;
    if (s[pos] == ',') ++pos;
    else if (pos != s.size() - 1) fail(ErrorCode::kParse, "malformed matrix literal '" + text + "'");
  }
  return from_rows(rows);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kDomain, "matrix shape mismatch");
  QMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kDomain, "matrix shape mismatch");
  QMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::kDomain, "matrix shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix r(*this);
  for (auto& v : r.a_) v *= s;
  return r;
}

QMatrix QMatrix::operator-() const { return *this * Rational(-1); }

bool QMatrix::operator<(const QMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
  }
  return false;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rational QMatrix::det() const {
  if (!is_square()) fail(ErrorCode::kDomain, "determinant of a non-square matrix");
  QMatrix m(*this);
  Rational d = 1;
  const int n = rows_;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) fail(ErrorCode::kDomain, "inverse of a non-square matrix");
  const int n = rows_;
  QMatrix m(*this), inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) { piv = r; break; }
    if (piv < 0) fail(ErrorCode::kDomain, "singular matrix");
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    Rational p = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& v : a_)
    if (v.get_den() != 1) return false;
  return true;
}

bool QMatrix::is_half_integral() const {
  if (!is_symmetric()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rational& v = (*this)(i, j);
      if (i == j ? v.get_den() != 1 : Rational(v * 2).get_den() != 1) return false;
    }
  return true;
}

namespace {

// Symmetric elimination; returns false as soon as a pivot contradicts the
// requested definiteness.
bool definiteness(const QMatrix& a, bool strict) {
  if (!a.is_symmetric()) return false;
  QMatrix m(a);
  const int n = m.rows();
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m(i, i) != 0) { piv = i; break; }
    if (piv < 0) {
      if (strict) return false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && m(i, j) != 0) return false;
      return true;
    }
    if (m(piv, piv) < 0) return false;
    if (strict) {
      // Strict case requires the leading remaining pivot in order.
      for (int i = 0; i < piv; ++i)
        if (!done[i]) return false;
    }
    done[piv] = true;
    Rational p = m(piv, piv);
    for (int i = 0; i < n; ++i) {
      if (done[i] || m(i, piv) == 0) continue;
      Rational f = m(i, piv) / p;
      for (int j = 0; j < n; ++j) {
        if (done[j]) continue;
        m(i, j) -= f * m(piv, j);
      }
    }
  }
  return true;
}

}  // namespace

bool QMatrix::is_positive_definite() const { return definiteness(*this, true); }
bool QMatrix::is_positive_semidefinite() const { return definiteness(*this, false); }

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
  QMatrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

QMatrix QMatrix::bracket(const QMatrix& x) const { return x.transpose() * (*this) * x; }

std::string QMatrix::str() const {
  if (rows_ == 1 && cols_ == 1) return rational_str(a_[0]);
  return str_bracketed();
}

std::string QMatrix::str_bracketed() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += rational_str((*this)(i, j));
    }
    s += "]";
  }
  s += "]";
  return s;
}

CMatrix::CMatrix(int rows, int cols, long prec)
    : rows_(rows), cols_(cols), prec_(prec),
      a_(size_t(rows) * cols, Complex(Real(0L, prec), Real(0L, prec))) {}

CMatrix CMatrix::from(const QMatrix& q, long prec) {
  CMatrix m(q.rows(), q.cols(), prec);
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) m(i, j) = Complex(q(i, j), prec);
  return m;
}

CMatrix CMatrix::identity(int n, long prec) {
  CMatrix m(n, n, prec);
  for (int i = 0; i < n; ++i) m(i, i) = Complex(Real(1L, prec), Real(0L, prec));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_, prec_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix t(*this);
  for (auto& v : t.a_) v = sjf::conj(v);
  return t;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kDomain, "matrix shape mismatch");
  CMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kDomain, "matrix shape mismatch");
  CMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::kDomain, "matrix shape mismatch");
  CMatrix r(rows_, o.cols_, std::min(prec_, o.prec_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Complex acc(Real(0L, r.prec_), Real(0L, r.prec_));
      for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

CMatrix CMatrix::operator*(const Complex& s) const {
  CMatrix r(*this);
  for (auto& v : r.a_) v *= s;
  return r;
}

Complex CMatrix::trace() const {
  Complex t(Real(0L, prec_), Real(0L, prec_));
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Complex CMatrix::det() const {
  if (rows_ != cols_) fail(ErrorCode::kDomain, "determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return Complex(Real(1L, prec_), Real(0L, prec_));
  if (n == 1) return a_[0];
  if (n == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  CMatrix m(*this);
  Complex d(Real(1L, prec_), Real(0L, prec_));
  for (int c = 0; c < n; ++c) {
    int piv = c;
    Real best = abs(m(c, c));
    for (int r = c + 1; r < n; ++r) {
      Real v = abs(m(r, c));
      if (v > best) { best = v; piv = r; }
    }
    if (best.is_zero()) return Complex(Real(0L, prec_), Real(0L, prec_));
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      Complex f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

CMatrix CMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorCode::kDomain, "inverse of a non-square matrix");
  const int n = rows_;
  CMatrix m(*this), inv = identity(n, prec_);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    Real best = abs(m(c, c));
    for (int r = c + 1; r < n; ++r) {
      Real v = abs(m(r, c));
      if (v > best) { best = v; piv = r; }
    }
    if (best.is_zero()) fail(ErrorCode::kDomain, "singular complex matrix");
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    Complex p = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      Complex f = m(r, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

CMatrix CMatrix::real_part() const {
  CMatrix r(*this);
  for (auto& v : r.a_) v = Complex(v.re(), Real(0L, prec_));
  return r;
}

CMatrix CMatrix::imag_part() const {
  CMatrix r(*this);
  for (auto& v : r.a_) v = Complex(v.im(), Real(0L, prec_));
  return r;
}

}  // namespace sjf
