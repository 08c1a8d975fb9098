// Copyright 2020 The Authors.
//
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

#include "mixcut/exact_lp.hpp"

#include "mixcut/errors.hpp"

namespace mixcut {

FeasibilityResult solve_feasibility(const RationalMatrix& a, const RationalVector& b) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) throw DimensionMismatch("rhs length differs from rows");
  const int cols = m == 0 ? 0 : static_cast<int>(a[0].size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != cols) throw DimensionMismatch("ragged matrix");
  }
  FeasibilityResult result;
  if (m == 0) {
    result.feasible = true;
    result.x.assign(cols, Rational(0));
    return result;
  }

  // Columns [0, cols) are structural, [cols, cols + m) artificial.
  const int total = cols + m;
  std::vector<int> sign(m, 1);
  RationalMatrix t(m, RationalVector(total, Rational(0)));
  RationalVector rhs(m);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;
    for (int c = 0; c < cols; ++c) t[i][c] = sign[i] < 0 ? Rational(-a[i][c]) : a[i][c];
    t[i][cols + i] = 1;
    rhs[i] = sign[i] < 0 ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  RationalVector reduced(total, Rational(0));
  Rational objective = 0;
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < cols; ++c) reduced[c] -= t[i][c];
    objective += rhs[i];
  }

  while (true) {
    int enter = -1;
    for (int c = 0; c < total; ++c) {
      if (reduced[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave < 0) throw InternalInvariant("unbounded phase-one simplex");

    const Rational pivot = t[leave][enter];
    for (int c = 0; c < total; ++c) {
      if (t[leave][c] != 0) t[leave][c] /= pivot;
    }
    rhs[leave] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (int c = 0; c < total; ++c) {
        if (t[leave][c] != 0) t[i][c] -= factor * t[leave][c];
      }
      rhs[i] -= factor * rhs[leave];
    }
    const Rational factor = reduced[enter];
    for (int c = 0; c < total; ++c) {
      if (t[leave][c] != 0) reduced[c] -= factor * t[leave][c];
    }
    objective += factor * rhs[leave];
    basis[leave] = enter;
  }

  if (objective == 0) {
    result.feasible = true;
    result.x.assign(cols, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (basis[i] < cols) result.x[basis[i]] = rhs[i];
    }
    return result;
  }
  // Duals of the sign-adjusted rows are 1 - reduced cost of the artificial.
  result.farkas.resize(m);
  for (int i = 0; i < m; ++i) {
    Rational dual = 1 - reduced[cols + i];
    result.farkas[i] = sign[i] < 0 ? dual : Rational(-dual);
  }
  return result;
}

}  // namespace mixcut
