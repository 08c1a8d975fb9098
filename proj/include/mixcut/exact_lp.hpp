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

#ifndef MIXCUT_EXACT_LP_HPP_
#define MIXCUT_EXACT_LP_HPP_

#include "mixcut/rational.hpp"

namespace mixcut {

// Outcome of A x = b, x >= 0.
struct FeasibilityResult {
  bool feasible = false;
  // A solution when feasible.
  RationalVector x;
  // When infeasible: f with f . A_col >= 0 for every column and f . b < 0.
  RationalVector farkas;
};

// Phase-one simplex in exact arithmetic with Bland's rule.
// A is row-major (m rows). Throws DimensionMismatch.
FeasibilityResult solve_feasibility(const RationalMatrix& a, const RationalVector& b);

}  // namespace mixcut

#endif  // MIXCUT_EXACT_LP_HPP_
