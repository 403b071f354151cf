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

#include <string>
#include <vector>

#include "sjf/real.hpp"

namespace sjf {

// Dense exact rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static QMatrix identity(int n);
  static QMatrix scalar(const Rational& v) {
    QMatrix m(1, 1);
    m(0, 0) = v;
    return m;
  }
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  // "[[a,b],[c,d]]" or a bare rational for a 1x1 matrix.
  static QMatrix parse(const std::string& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  const std::vector<Rational>& data() const { return a_; }

  QMatrix transpose() const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& s) const;
  QMatrix operator-() const;
  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }
  bool operator<(const QMatrix& o) const;

  Rational trace() const;
  Rational det() const;
  QMatrix inverse() const;  // raises kDomain when singular
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_integral() const;
  // Diagonal integral, off-diagonal in (1/2)Z, symmetric.
  bool is_half_integral() const;
  bool is_positive_definite() const;
  bool is_positive_semidefinite() const;

  QMatrix block(int r0, int c0, int nr, int nc) const;
  // x^T * this * x
  QMatrix bracket(const QMatrix& x) const;

  // Canonical text form: bare rational for 1x1, else [[..],[..]].
  std::string str() const;
  // Always bracketed.
  std::string str_bracketed() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Dense complex matrix for numeric evaluation.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols, long prec);
  static CMatrix from(const QMatrix& q, long prec);
  static CMatrix identity(int n, long prec);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long prec() const { return prec_; }
  Complex& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  CMatrix transpose() const;
  CMatrix conj() const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(const Complex& s) const;
  Complex trace() const;
  Complex det() const;
  CMatrix inverse() const;
  CMatrix real_part() const;
  CMatrix imag_part() const;

 private:
  int rows_ = 0, cols_ = 0;
  long prec_ = kDefaultPrecision;
  std::vector<Complex> a_;
};

}  // namespace sjf
