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

#ifndef MIXCUT_COUNTEREXAMPLE_HPP_
#define MIXCUT_COUNTEREXAMPLE_HPP_

#include <string>
#include <vector>

#include "mixcut/instance.hpp"

namespace mixcut {

enum class WitnessReason { kC2, kC1, kLW };

std::string reason_name(WitnessReason reason);

// A point of the cut polyhedron outside the hull (original coordinates).
struct Witness {
  WitnessReason reason = WitnessReason::kC2;
  // U for kC2, {p, q} otherwise (0-based).
  std::vector<int> support;
  Point point;
  // y column that absorbed the remainder (0-based).
  int slack = 0;
};

// Greedy deletion from I_bar. Throws PreconditionFailed if C2 holds.
std::vector<int> find_minimal_u(const MixingInstance& instance);

// `slack` is the y column that absorbs the remainder of the aggregate.
// U must be a minimal subset of I_bar with sum_j max_U w_j > eps.
Witness witness_c2(const MixingInstance& instance, const std::vector<int>& u, int slack);
// p outside I_bar, q inside, w_qj > w_pj for some j.
Witness witness_c1(const MixingInstance& instance, int p, int q, int slack);
// p != q outside I_bar attaining L_W(eps) < eps.
Witness witness_lw(const MixingInstance& instance, int p, int q, int slack);

// Picks the branch from the diagnosis: C2, then C1, then L_W. A negative
// slack means the last column. Throws PreconditionFailed when the cut
// family is sufficient.
Witness find_witness(const MixingInstance& instance, int slack = -1);

// Every witness of the active branch: all admissible supports times all
// slack columns, find_witness's choice first. With zero entries in W the
// default point can fall inside the hull while another candidate does not.
// C2 supports are enumerated over subsets of I_bar (|I_bar| <= 16).
std::vector<Witness> witness_candidates(const MixingInstance& instance);

}  // namespace mixcut

#endif  // MIXCUT_COUNTEREXAMPLE_HPP_
