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

#ifndef MIXCUT_AGGREGATED_HPP_
#define MIXCUT_AGGREGATED_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/instance.hpp"
#include "mixcut/vrep.hpp"

namespace mixcut {

// For each column j, the elements of theta that are at least every later
// element of theta in column j, in theta order.
std::vector<Sequence> decompose(const MixingInstance& instance, const Sequence& theta);

Rational l_theta(const MixingInstance& instance, const Sequence& theta);

// Requires l = 0 (LowerBoundsNotReduced).
LinearCut aggregated_cut(const MixingInstance& instance, const Sequence& theta);

bool dominates_linking(const MixingInstance& instance, const Sequence& theta);

// Valid for conv of the mixing set: checked at every extreme point and ray.
bool check_validity(const MixingInstance& instance, const LinearCut& cut);

enum class AggregatedMode { kAuto, kGreedy, kExhaustive };

struct AggregatedSeparation {
  // Empty when the cut is the linking inequality.
  Sequence theta;
  LinearCut cut;
  Rational violation;
  bool greedy = false;
};

// kAuto uses the greedy route when g is submodular and the exhaustive
// search over sequences inside {i : z_i < 1} otherwise. kGreedy requires a
// submodular g (PreconditionFailed). Throws EpsilonViolated if sum y < eps.
std::optional<AggregatedSeparation> separate_aggregated(
    const MixingInstance& instance, const Point& point,
    AggregatedMode mode = AggregatedMode::kAuto, int theta_max = -1);

// Visits every sequence of distinct elements of `ground` with length in
// [1, max_len], in lexicographic order.
void for_each_sequence(const std::vector<int>& ground, int max_len,
                       const std::function<void(const Sequence&)>& visit);

}  // namespace mixcut

#endif  // MIXCUT_AGGREGATED_HPP_
