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

#include <gtest/gtest.h>

#include <set>

#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/mixing.hpp"
#include "test_util.hpp"

namespace mixcut {
namespace {

using testing::R;
using testing::RV;

std::string key(const LinearCut& c) {
  LinearCut k = canonicalize(c);
  k.kind = CutKind::kPolymatroid;
  return format_cut(k);
}

TEST(ReductionTest, ClampsAtLowerBound) {
  MixingInstance inst = make_instance({RV({6, 4})}, RV({8, 1}), 0);
  ReducedInstance red = reduce_lower_bounds(inst);
  EXPECT_EQ(red.instance.weights[0], RV({0, 3}));
  EXPECT_EQ(red.instance.lower, RV({0, 0}));
  EXPECT_EQ(red.shift, RV({8, 1}));
}

TEST(ReductionTest, LiftAndLowerAreInverse) {
  LinearCut c = testing::make_cut(RV({1, 2}), 2, {{1, 3}}, 5);
  LinearCut lifted = lift_cut(c, RV({8, 1}));
  EXPECT_EQ(lifted.gamma, R(15));
  EXPECT_EQ(lower_cut(lifted, RV({8, 1})).gamma, R(5));
}

// (y, z) in conv(M(W, l, eps)) iff (y - l, z) in conv(M((W - l)_+, 0, eps)).
TEST(ReductionTest, PreservesHullMembership) {
  Rng rng(8);
  for (int t = 0; t < 25; ++t) {
    int n = static_cast<int>(rng.range(1, 4)), k = static_cast<int>(rng.range(1, 2));
    MixingInstance inst = testing::random_instance(rng, n, k, 10, 1);
    for (auto& l : inst.lower) l = rng.range(0, 8);
    ReducedInstance red = reduce_lower_bounds(inst);
    HullOracle original(v_representation(inst).complemented());
    HullOracle reduced(v_representation(red.instance).complemented());
    for (int s = 0; s < 8; ++s) {
      Point p;
      for (int j = 0; j < k; ++j) p.y.push_back(inst.lower[j] + Rational(rng.range(-2, 12), 2));
      for (int i = 0; i < n; ++i) p.z.push_back(rng.unit_fraction(3));
      Point q = p;
      for (int j = 0; j < k; ++j) q.y[j] -= inst.lower[j];
      EXPECT_EQ(original.query(p).inside, reduced.query(q).inside);
    }
  }
}

TEST(QuantileTest, ExampleColumns) {
  MixingInstance inst = testing::example1();
  inst.probabilities = RationalVector(5, R(1, 5));
  EXPECT_EQ(quantile_lower_bounds(inst, R(1, 5)), RV({8, 3}));
  EXPECT_EQ(quantile_lower_bounds(inst, R(1, 10)), RV({13, 4}));
  EXPECT_EQ(quantile_lower_bounds(inst, R(9, 10)), RV({1, 1}));
}

TEST(QuantileTest, Errors) {
  MixingInstance inst = testing::example1();
  EXPECT_THROW(quantile_lower_bounds(inst, R(1, 5)), ValidationError);
  inst.probabilities = RationalVector(5, R(1, 5));
  EXPECT_THROW(quantile_lower_bounds(inst, R(0)), RiskOutOfRange);
  EXPECT_THROW(quantile_lower_bounds(inst, R(1)), RiskOutOfRange);
}

TEST(QuantileTest, MatchesBruteForce) {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    int n = static_cast<int>(rng.range(1, 8));
    MixingInstance inst = testing::random_instance(rng, n, 2, 6, 1);
    RationalVector p(n);
    Rational total = 0;
    for (auto& v : p) {
      v = rng.range(0, 5);
      total += v;
    }
    if (total == 0) {
      p[0] = 1;
      total = 1;
    }
    for (auto& v : p) v /= total;
    inst.probabilities = p;
    Rational risk(rng.range(1, 9), 10);
    EXPECT_EQ(quantile_lower_bounds(inst, risk), testing::brute_quantile(inst, risk));
  }
}

TEST(MixingCutTest, ExampleFacets) {
  MixingInstance inst = testing::example1();
  LinearCut c1 = mixing_cut(inst, {0, {2, 0, 1, 4, 3}});
  EXPECT_TRUE(same_inequality(
      c1, testing::make_cut(RV({1, 0}), 5, {{1, 2}, {2, 2}, {3, 5}, {4, 1}, {5, 3}}, 13)));
  EXPECT_EQ(c1.kind, CutKind::kMixStar);
  LinearCut c2 = mixing_cut(inst, {1, {1, 3, 4}});
  EXPECT_TRUE(same_inequality(c2, testing::make_cut(RV({0, 1}), 5, {{2, 2}, {4, 1}, {5, 1}}, 4)));
  EXPECT_EQ(c2.kind, CutKind::kMixStar);
  EXPECT_EQ(mixing_cut(inst, {0, {0, 1}}).kind, CutKind::kMix);
}

TEST(MixingCutTest, InvalidSequences) {
  MixingInstance inst = testing::example1();
  EXPECT_THROW(mixing_cut(inst, {0, {1, 0}}), InvalidSequence);
  EXPECT_THROW(mixing_cut(inst, {0, {}}), InvalidSequence);
  EXPECT_THROW(mixing_cut(inst, {2, {0}}), InvalidSequence);
  MixingInstance lifted = make_instance(testing::example1_weights(), RV({5, 0}), 7);
  EXPECT_THROW(mixing_cut(lifted, {0, {2, 4}}), InvalidSequence);
  LinearCut with_floor = mixing_cut(lifted, {0, {2, 0}});
  EXPECT_TRUE(same_inequality(with_floor, testing::make_cut(RV({1, 0}), 5, {{3, 5}, {1, 3}}, 13)));
}

TEST(MixingCutTest, EveryMixCutIsValid) {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    int n = static_cast<int>(rng.range(1, 6)), k = static_cast<int>(rng.range(1, 3));
    MixingInstance inst = testing::random_instance(rng, n, k, 8, 2);
    if (rng.coin()) inst.lower[0] = rng.range(0, 6);
    for (int j = 0; j < k; ++j) {
      for (const auto& c : enumerate_mixing_cuts(inst, j, false)) {
        ASSERT_TRUE(testing::brute_valid(inst, c)) << format_cut(c);
      }
    }
  }
}

// Greedy vertices of f_j over all orders give exactly the Mix* cuts.
TEST(MixingCutTest, GreedyVerticesAreStarCuts) {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    int n = static_cast<int>(rng.range(1, 5));
    MixingInstance inst = testing::random_instance(rng, n, 1, 6, 1);
    SetFunctionOracle f = column_oracle(inst, 0);
    std::set<std::string> from_vertices, from_sequences;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      RationalVector objective(n);
      for (int t2 = 0; t2 < n; ++t2) objective[perm[t2]] = n - t2;
      PolymatroidVertex v = greedy_vertex(f, objective);
      LinearCut c;
      c.alpha = {R(1)};
      c.beta = v.pi;
      c.gamma = v.empty_value + std::accumulate(v.pi.begin(), v.pi.end(), Rational(0));
      from_vertices.insert(key(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& c : enumerate_mixing_cuts(inst, 0, true)) from_sequences.insert(key(c));
    if (inst.column_max(0) == 0) from_sequences.insert(key(testing::make_cut(RV({1}), n, {}, 0)));
    EXPECT_EQ(from_vertices, from_sequences);
  }
}

TEST(SeparateMixingTest, ExamplePoints) {
  MixingInstance inst = testing::example1();
  auto cuts = separate_mixing(inst, Point{RV({12, 4}), RV({1, 1, 0, 1, 1})});
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0].sequence.column, 0);
  EXPECT_NE(cuts[0].cut.beta[2], 0);
  EXPECT_EQ(cuts[0].violation, R(1));
  EXPECT_TRUE(separate_mixing(inst, Point{RV({13, 4}), RV({0, 0, 0, 0, 0})}).empty());
  EXPECT_THROW(separate_mixing(inst, Point{RV({13}), RV({0, 0, 0, 0, 0})}), DimensionMismatch);
  EXPECT_THROW(separate_mixing(inst, Point{RV({13, 4}), RV({0, 0, 2, 0, 0})}), DomainError);
}

TEST(SeparateMixingTest, ExactAgainstEnumeratedCuts) {
  Rng rng(14);
  for (int t = 0; t < 60; ++t) {
    int n = static_cast<int>(rng.range(1, 6)), k = static_cast<int>(rng.range(1, 3));
    MixingInstance inst = testing::random_instance(rng, n, k, 8, 2);
    if (rng.coin()) inst.lower[0] = rng.range(0, 5);
    for (int s = 0; s < 10; ++s) {
      Point p;
      for (int j = 0; j < k; ++j) p.y.push_back(Rational(rng.range(0, 20), rng.range(1, 2)));
      for (int i = 0; i < n; ++i) p.z.push_back(rng.unit_fraction(4));
      auto found = separate_mixing(inst, p);
      for (int j = 0; j < k; ++j) {
        Rational worst = 0;
        for (const auto& c : enumerate_mixing_cuts(inst, j, false)) {
          worst = std::max(worst, c.violation(p.y, p.z));
        }
        worst = std::max(worst, inst.lower[j] - p.y[j]);
        const MixingSeparation* hit = nullptr;
        for (const auto& f : found) {
          if (f.sequence.column == j) hit = &f;
        }
        EXPECT_EQ(hit != nullptr, worst > 0);
        if (hit) {
          EXPECT_EQ(hit->violation, worst);
          EXPECT_EQ(hit->cut.violation(p.y, p.z), worst);
        }
      }
    }
  }
}

}  // namespace
}  // namespace mixcut
