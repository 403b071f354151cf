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

#include "sjf/quadrature.hpp"

#include <cmath>

namespace sjf {

GaussRule gauss_legendre(int npoints, long prec) {
  if (npoints < 1) fail(ErrorCode::kDomain, "Gauss-Legendre rule needs at least one node");
  const long wp = prec + 32;
  GaussRule rule;
  rule.nodes.resize(npoints);
  rule.weights.resize(npoints);
  Real tol = ldexp(Real(1L, wp), -(prec + 8));
  for (int i = 0; i < (npoints + 1) / 2; ++i) {
    Real x(std::cos(M_PI * (i + 0.75) / (npoints + 0.5)), wp);
    Real dp;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_n and its derivative.
      Real p0(1L, wp), p1 = x;
      for (int k = 2; k <= npoints; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      if (npoints == 1) p0 = Real(1L, wp);
      dp = npoints * (x * p1 - p0) / (x * x - 1L);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    // Recompute derivative at the converged node.
    Real p0(1L, wp), p1 = x;
    for (int k = 2; k <= npoints; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    if (npoints == 1) p0 = Real(1L, wp);
    dp = npoints * (x * p1 - p0) / (x * x - 1L);
    Real w = Real(2L, wp) / ((Real(1L, wp) - x * x) * dp * dp);
    rule.nodes[i] = (-x).with_prec(prec);
    rule.nodes[npoints - 1 - i] = x.with_prec(prec);
    rule.weights[i] = w.with_prec(prec);
    rule.weights[npoints - 1 - i] = w.with_prec(prec);
  }
  return rule;
}

}  // namespace sjf
