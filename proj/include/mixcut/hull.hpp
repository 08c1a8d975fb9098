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

#ifndef MIXCUT_HULL_HPP_
#define MIXCUT_HULL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixcut/counterexample.hpp"
#include "mixcut/cut.hpp"
#include "mixcut/instance.hpp"
#include "mixcut/vrep.hpp"

namespace mixcut {

// Rational or +infinity.
struct ExtendedRational {
  bool infinite = false;
  Rational value = 0;

  static ExtendedRational inf() { return {true, 0}; }
  std::string str() const { return infinite ? "inf" : to_string(value); }
};

bool operator<=(const Rational& a, const ExtendedRational& b);

struct HullDiagnosis {
  // 0-based, ascending.
  std::vector<int> i_bar;
  bool c1_holds = true;
  bool c2_holds = true;
  bool negligible = true;
  ExtendedRational l_w;
  bool eps_le_lw = true;
  bool g_submodular = true;
  // Mix*, A-Mix*, linking and bounds describe the hull.
  bool sufficient = true;
  // Smallest (p, q), p outside and q inside I_bar, q above p in some column.
  std::optional<std::pair<int, int>> c1_pair;
  // Smallest distinct pair attaining L_W.
  std::optional<std::pair<int, int>> l_w_pair;
};

// Requires l = 0 (LowerBoundsNotReduced).
HullDiagnosis diagnose(const MixingInstance& instance);

// Multi-line "key: value" summary. I_bar is printed 1-based.
std::string format_diagnosis(const MixingInstance& instance, const HullDiagnosis& d);
std::string diagnosis_json(const MixingInstance& instance, const HullDiagnosis& d);
std::string format_index_set(const std::vector<int>& indices);

struct MembershipResult {
  bool inside = false;
  // Convex weights on points and conic weights on rays when inside.
  RationalVector lambda;
  RationalVector mu;
  // When outside: valid for every point and ray, violated by the query.
  std::optional<LinearCut> separator;
};

// Point and vrep must use the same space. Throws DimensionMismatch.
MembershipResult membership(const VRepresentation& vrep, const Point& point);

// Reusable membership oracle for many queries against one hull.
class HullOracle {
 public:
  explicit HullOracle(VRepresentation vrep);
  MembershipResult query(const Point& point) const;
  const VRepresentation& vrep() const { return vrep_; }

 private:
  VRepresentation vrep_;
  RationalMatrix columns_;
};

struct WitnessSearch {
  std::optional<Witness> witness;
  MembershipResult membership;
  int candidates_tried = 0;
  // True when the hit came from the grid rather than the closed-form points.
  bool from_grid = false;
};

// Closed-form witnesses first. If each lies inside the hull (possible when
// W has zero entries), z runs over a rational grid on each admissible
// support (1 elsewhere) and every vertex of the cut polyhedron's y-fiber at
// that z is queried. All cuts must have alpha = e_j or all ones.
WitnessSearch search_witness(const MixingInstance& instance, const HullOracle& hull,
                             const std::vector<LinearCut>& cuts, int grid_denominator = 6);

struct SufficiencyOptions {
  std::uint64_t seed = 1;
  int samples = 200;
};

struct SufficiencyReport {
  HullDiagnosis diagnosis;
  // Branch (i): seeded points satisfying every listed cut, all inside.
  int samples_checked = 0;
  int samples_outside = 0;
  std::optional<Point> first_outside;
  int cuts_in_family = 0;
  // Branch (ii): witness outside the hull that satisfies every cut.
  std::optional<Witness> witness;
  // Candidates queried before one landed outside (or all of them).
  int candidates_tried = 0;
  bool witness_from_grid = false;
  bool witness_satisfies_cuts = false;
  bool witness_outside = false;
  std::optional<LinearCut> separator;
  bool passed = false;
};

// n <= 8. Requires l = 0.
SufficiencyReport check_sufficiency(const MixingInstance& instance,
                                    const SufficiencyOptions& options = {});
std::string sufficiency_json(const MixingInstance& instance, const SufficiencyReport& r);

// Mix* of every column plus A-Mix* over sequences of [n] \ I_bar, plus linking.
std::vector<LinearCut> sufficient_cut_family(const MixingInstance& instance);

// Every Mix cut and every A-Mix cut over all sequences of [n] (n <= 8).
std::vector<LinearCut> full_cut_family(const MixingInstance& instance);

}  // namespace mixcut

#endif  // MIXCUT_HULL_HPP_
