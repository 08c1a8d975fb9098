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

#ifndef MIXCUT_SUBMODULAR_HPP_
#define MIXCUT_SUBMODULAR_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/rational.hpp"

namespace mixcut {

// Characteristic vector of a subset of {0, ..., n-1}.
using Subset = std::vector<bool>;

Subset subset_from_mask(int n, std::uint64_t mask);

// Pure set function on a finite ground set. Copies share one memo table,
// which is guarded by a mutex so an oracle can be used from several threads.
class SetFunctionOracle {
 public:
  using Fn = std::function<Rational(const Subset&)>;

  SetFunctionOracle(int ground_size, Fn fn);

  int ground_size() const { return n_; }
  // Throws DimensionMismatch if s has the wrong size.
  Rational operator()(const Subset& s) const;
  Rational empty_value() const;

 private:
  struct State;
  int n_;
  std::shared_ptr<State> state_;
};

constexpr int kSubmodularityBound = 16;

// f(S+i) - f(S) < f(S+i+j) - f(S+j): U = S+i and V = S+j witness
// f(U) + f(V) < f(U | V) + f(U & V).
struct SubmodularityViolation {
  Subset base;
  int i = 0;
  int j = 0;
  Rational gain_alone;
  Rational gain_with_j;
};

// Exhaustive local test. Throws GroundSetTooLarge above `bound`.
std::optional<SubmodularityViolation> find_submodularity_violation(
    const SetFunctionOracle& f, int bound = kSubmodularityBound);
bool is_submodular(const SetFunctionOracle& f, int bound = kSubmodularityBound);

// Greedy vertex of the extended polymatroid of f - f(empty).
struct PolymatroidVertex {
  RationalVector pi;
  // order[t] is the element added at step t.
  std::vector<int> order;
  Rational empty_value;

  // pi . z + f(empty)
  Rational value(const RationalVector& z) const;
};

// Objective sorted descending, ties by ascending index.
PolymatroidVertex greedy_vertex(const SetFunctionOracle& f,
                                const RationalVector& objective);

// Cut y - pi . z >= f(empty) if violated at (y_bar, z_bar). The point is in
// the oracle's own coordinates. Throws DomainError if z_bar leaves [0,1]^n.
std::optional<LinearCut> separate_polymatroid(const SetFunctionOracle& f,
                                              const Rational& y_bar,
                                              const RationalVector& z_bar);

// sum_r weights[r] * fs[r]. Throws DimensionMismatch.
SetFunctionOracle weighted_combination(const std::vector<SetFunctionOracle>& fs,
                                       const RationalVector& weights);

}  // namespace mixcut

#endif  // MIXCUT_SUBMODULAR_HPP_
