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

#ifndef MIXCUT_MIXING_HPP_
#define MIXCUT_MIXING_HPP_

#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/instance.hpp"
#include "mixcut/submodular.hpp"

namespace mixcut {

// f_j(S) = max{l_j, max_{i in S} w_ij}, with S the scenarios whose
// complemented binary is 1.
SetFunctionOracle column_oracle(const MixingInstance& instance, int j);

// g(S) = max{eps + sum_j l_j, sum_j f_j(S)}.
SetFunctionOracle linking_oracle(const MixingInstance& instance);

// sum_j y_j >= eps + sum_j l_j.
LinearCut linking_cut(const MixingInstance& instance);

// Throws DimensionMismatch on wrong lengths and DomainError if z leaves [0,1].
void check_point(const MixingInstance& instance, const Point& point);

// W -> (W - l)_+, l -> 0. The shift is the old l.
struct ReducedInstance {
  MixingInstance instance;
  RationalVector shift;
};
ReducedInstance reduce_lower_bounds(const MixingInstance& instance);

// Maps a cut on the reduced instance back to the original y.
LinearCut lift_cut(const LinearCut& reduced, const RationalVector& shift);
// Maps a cut on the original y to the reduced one.
LinearCut lower_cut(const LinearCut& original, const RationalVector& shift);

// Tightest l_j implied by the chance constraint with risk in (0,1).
// Throws RiskOutOfRange, ValidationError if probabilities are absent.
RationalVector quantile_lower_bounds(const MixingInstance& instance,
                                     const Rational& risk);

struct MixingSequence {
  int column = 0;
  Sequence indices;
};

// Throws InvalidSequence.
void validate_mixing_sequence(const MixingInstance& instance,
                              const MixingSequence& seq);

LinearCut mixing_cut(const MixingInstance& instance, const MixingSequence& seq);

struct MixingSeparation {
  MixingSequence sequence;
  LinearCut cut;
  Rational violation;
};

// At most one cut per column, most violated first.
std::vector<MixingSeparation> separate_mixing(const MixingInstance& instance,
                                              const Point& point);

// Every distinct Mix (or Mix*) cut of column j. At most 20 candidate rows.
std::vector<LinearCut> enumerate_mixing_cuts(const MixingInstance& instance,
                                             int j, bool star_only);

}  // namespace mixcut

#endif  // MIXCUT_MIXING_HPP_
