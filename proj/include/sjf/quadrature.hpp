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

// Quadrature rules over the multiprecision Real type: Gauss-Legendre on
// finite intervals and double-exponential rules for endpoint singularities
// and infinite ranges.

#pragma once

#include <functional>
#include <vector>

#include "sjf/error.hpp"
#include "sjf/real.hpp"

namespace sjf {

struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

GaussRule gauss_legendre(int npoints, long prec);

inline Real zero_of(const Real&, long prec) { return Real(0L, prec); }
inline Complex zero_of(const Complex&, long prec) {
  return Complex(Real(0L, prec), Real(0L, prec));
}

// Integrates f over [a, b] with a precomputed Gauss-Legendre rule.
template <typename T, typename F>
T gauss_integrate(const GaussRule& rule, const Real& a, const Real& b, F&& f) {
  long prec = result_prec(a, b);
  Real half = (b - a) / 2;
  Real mid = (b + a) / 2;
  T acc = zero_of(T{}, prec);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += f(mid + half * rule.nodes[i]) * rule.weights[i];
  }
  return acc * half;
}

enum class DeKind { kFinite, kHalfLine, kWholeLine };

struct DeOptions {
  long prec = kDefaultPrecision;
  int max_levels = 12;   // step h = 2^-level
  Real tolerance;        // relative; defaults to 2^-(prec-8)
};

// Double-exponential quadrature. kFinite maps [a,b] by tanh-sinh, kHalfLine
// maps [a,inf) by exp-sinh, kWholeLine maps R by sinh-sinh (a, b unused).
// Raises kConvergence when the requested tolerance is not reached.
template <typename T>
T de_integrate(DeKind kind, const Real& a, const Real& b,
               const std::function<T(const Real&)>& f, const DeOptions& opt,
               Real* err_out = nullptr) {
  const long prec = opt.prec;
  Real tol = opt.tolerance.has_prec() ? opt.tolerance : ldexp(Real(1L, prec), -(prec - 8));
  Real half_pi = Real::pi(prec) / 2;
  Real eps = ldexp(Real(1L, prec), -prec - 20);

  auto mapped = [&](const Real& t, bool& negligible) -> T {
    // Returns f(x(t)) x'(t); flags when the weight underflows.
    negligible = false;
    Real s = sinh(t), c = cosh(t);
    switch (kind) {
      case DeKind::kFinite: {
        Real u = half_pi * s;
        Real ch = cosh(u);
        Real w = half_pi * c / (ch * ch);
        Real xm = tanh(u);
        Real half = (b - a) / 2;
        Real x = (b + a) / 2 + half * xm;
        // Endpoint reached to working precision.
        if (x <= a || x >= b) { negligible = true; return zero_of(T{}, prec); }
        if (abs(w * half) < eps) { negligible = true; return zero_of(T{}, prec); }
        return f(x) * (w * half);
      }
      case DeKind::kHalfLine: {
        Real e = exp(half_pi * s);
        Real w = half_pi * c * e;
        Real x = a + e;
        if (x <= a) { negligible = true; return zero_of(T{}, prec); }
        return f(x) * w;
      }
      case DeKind::kWholeLine: {
        Real u = half_pi * s;
        Real x = sinh(u);
        Real w = half_pi * c * cosh(u);
        return f(x) * w;
      }
    }
    return zero_of(T{}, prec);
  };

  // Trapezoid sum on t = j*h, extended outward until terms are negligible.
  auto sweep = [&](const Real& h, long stride_parity_only) -> T {
    T acc = zero_of(T{}, prec);
    for (int dir = -1; dir <= 1; dir += 2) {
      int small_run = 0;
      for (long j = (dir < 0 ? 1 : 0);; ++j) {
        long idx = dir * j;
        if (stride_parity_only && (idx % 2 == 0)) continue;
        if (!stride_parity_only && dir < 0 && j == 0) continue;
        Real t = h * idx;
        if (abs(t) > Real(7L, prec)) break;
        bool negl = false;
        T v = mapped(t, negl);
        if (negl) {
          if (++small_run >= 2) break;
          continue;
        }
        acc += v;
        if (abs(v) <= eps * abs(acc)) {
          if (++small_run >= 3) break;
        } else {
          small_run = 0;
        }
      }
    }
    return acc;
  };

  Real h(1L, prec);
  T sum = sweep(h, 0);
  T estimate = sum * h;
  Real last_diff;
  for (int level = 1; level <= opt.max_levels; ++level) {
    h = h / 2;
    sum += sweep(h, 1);
    T next = sum * h;
    Real diff = abs(next - estimate);
    estimate = next;
    Real scale = abs(estimate);
    if (level >= 3 && (diff <= tol * scale || (scale.is_zero() && diff.is_zero()))) {
      if (err_out) *err_out = diff;
      return estimate;
    }
    last_diff = diff;
  }
  if (err_out) *err_out = last_diff;
  fail(ErrorCode::kConvergence,
       "double-exponential quadrature did not reach tolerance (last change " +
           last_diff.str(6) + ")");
}

}  // namespace sjf
