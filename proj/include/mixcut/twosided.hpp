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

#ifndef MIXCUT_TWOSIDED_HPP_
#define MIXCUT_TWOSIDED_HPP_

#include <string>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/instance.hpp"
#include "mixcut/vrep.hpp"

namespace mixcut {

// Scenario data of a two-sided chance constraint: upper deviations w,
// lower deviations v, and the bound u_a on the free variable.
struct TwoSidedData {
  RationalVector w;
  RationalVector v;
  Rational u_a = 0;

  int n() const { return static_cast<int>(w.size()); }
};

// Checks u_a >= w_i >= v_i >= 0. Throws ConditionViolated with the first
// offending index, ValidationError on shape problems.
TwoSidedData make_two_sided(RationalVector w, RationalVector v, Rational u_a);

// {"n", "w", "v", "u_a"}
TwoSidedData parse_two_sided(const std::string& json_text);
TwoSidedData load_two_sided(const std::string& path);
std::string serialize_two_sided(const TwoSidedData& data);

// Columns w and v + u_a, eps = u_a. Throws InternalInvariant if the
// converted instance does not have the expected I_bar, L_W and submodular g.
MixingInstance to_mixing(const TwoSidedData& data);

struct GeneralizedCutPair {
  // On (y_1, y_2, z) of the converted instance.
  LinearCut primed;
  // On (y_c, y_a, z) with y_1 = y_c + y_a, y_2 = y_c - y_a + u_a.
  LinearCut original;
};

// Throws InternalInvariant if the two disagree under the substitution.
GeneralizedCutPair generalized_cut(const TwoSidedData& data, const Sequence& theta);

// u_a >= y_1 - y_2 >= -u_a as two cuts.
std::vector<LinearCut> band_cuts(const TwoSidedData& data);

constexpr int kTwoSidedHullBound = 16;

struct TwoSidedHullReport {
  HullDiagnosis diagnosis;
  int extreme_points = 0;
  bool band_satisfied = false;
  // Points where rays from extreme points meet the band.
  int band_vertices = 0;
  bool band_vertices_integral = false;
  // conv(M) intersected with the band (M-space).
  VRepresentation clipped;
  // Mix*, generalized' cuts, linking and band; filled for n <= 6.
  std::vector<LinearCut> description;
};

// n <= 16.
TwoSidedHullReport hull_with_bounds(const TwoSidedData& data);

}  // namespace mixcut

#endif  // MIXCUT_TWOSIDED_HPP_
