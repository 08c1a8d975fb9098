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

#include "mixcut/aggregated.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/mixing.hpp"
#include "mixcut/twosided.hpp"
#include "test_util.hpp"

namespace mixcut {
namespace {

using testing::R;
using testing::RV;

TwoSidedData demo() { return make_two_sided(RV({8, 6, 13, 1, 4}), RV({3, 4, 2, 1, 1}), R(13)); }

TEST(TwoSidedTest, ConversionOfDemo) {
  MixingInstance inst = to_mixing(demo());
  EXPECT_EQ(inst.k(), 2);
  EXPECT_EQ(inst.epsilon, R(13));
  EXPECT_EQ(inst.column(1), RV({16, 17, 15, 14, 14}));
  HullDiagnosis d = diagnose(inst);
  EXPECT_TRUE(d.i_bar.empty());
  EXPECT_TRUE(d.g_submodular);
}

TEST(TwoSidedTest, ConditionViolations) {
  try {
    make_two_sided(RV({8, 1}), RV({3, 2}), R(13));
    FAIL();
  } catch (const ConditionViolated& e) {
    EXPECT_EQ(e.index(), 1);
  }
  try {
    make_two_sided(RV({8, 14}), RV({3, 2}), R(13));
    FAIL();
  } catch (const ConditionViolated& e) {
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(make_two_sided(RV({1}), {R(-1)}, R(2)), ConditionViolated);
  EXPECT_THROW(make_two_sided(RV({1}), RV({1, 1}), R(2)), ValidationError);
  EXPECT_THROW(make_two_sided({}, {}, R(2)), ValidationError);
}

TEST(TwoSidedTest, DocumentRoundTrip) {
  TwoSidedData d = demo();
  TwoSidedData back = parse_two_sided(serialize_two_sided(d));
  EXPECT_EQ(back.w, d.w);
  EXPECT_EQ(back.v, d.v);
  EXPECT_EQ(back.u_a, d.u_a);
  EXPECT_THROW(parse_two_sided(R"({"w": ["1"]})"), ParseError);
  EXPECT_THROW(parse_two_sided(R"({"n": 2, "w": ["1"], "v": ["0"], "u_a": "3"})"), ValidationError);
}

TEST(TwoSidedTest, GeneralizedCutOfDemo) {
  GeneralizedCutPair pair = generalized_cut(demo(), {1, 0, 2});
  EXPECT_TRUE(same_inequality(
      pair.original, testing::make_cut(RV({2, 0}), 5, {{1, 1}, {2, 1}, {3, 15}}, 17)));
  EXPECT_TRUE(same_inequality(
      pair.primed, testing::make_cut(RV({1, 1}), 5, {{1, 1}, {2, 1}, {3, 15}}, 30)));
  EXPECT_EQ(pair.primed.kind, CutKind::kAMixStar);
}

TEST(TwoSidedTest, CutsAgreeAtRandomPoints) {
  Rng rng(81);
  for (int t = 0; t < 60; ++t) {
    int n = static_cast<int>(rng.range(1, 6));
    TwoSidedData data = testing::random_data(rng, n);
    Sequence theta(n);
    std::iota(theta.begin(), theta.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(theta[i], theta[rng.below(i + 1)]);
    theta.resize(rng.range(1, n));
    GeneralizedCutPair pair = generalized_cut(data, theta);
    for (int s = 0; s < 5; ++s) {
      Rational yc = Rational(rng.range(-10, 20), 2), ya = Rational(rng.range(-10, 10), 3);
      RationalVector z(n);
      for (auto& v : z) v = rng.unit_fraction(4);
      RationalVector y{yc + ya, yc - ya + data.u_a};
      EXPECT_EQ(pair.primed.violation(y, z), pair.original.violation({yc, ya}, z));
    }
  }
}

TEST(TwoSidedTest, LinkingFunctionAlwaysSubmodular) {
  Rng rng(82);
  for (int t = 0; t < 60; ++t) {
    int n = static_cast<int>(rng.range(1, 6));
    MixingInstance inst = to_mixing(testing::random_data(rng, n));
    EXPECT_TRUE(testing::brute_submodular(n, [&](std::uint64_t m) { return testing::brute_g(inst, m); }));
  }
}

TEST(TwoSidedTest, BandHoldsAtExtremePoints) {
  TwoSidedHullReport r = hull_with_bounds(demo());
  EXPECT_TRUE(r.band_satisfied);
  EXPECT_TRUE(r.band_vertices_integral);
  EXPECT_EQ(r.band_vertices, 2 * r.extreme_points);
  EXPECT_FALSE(r.description.empty());
}

TEST(TwoSidedTest, ZeroLowerDeviations) {
  TwoSidedData data = make_two_sided(RV({5, 2, 7}), RV({0, 0, 0}), R(7));
  MixingInstance inst = to_mixing(data);
  auto pts = testing::brute_extreme_points(inst);
  std::vector<RationalVector> at_one;
  for (const auto& p : pts) {
    if (p.z == RV({1, 1, 1})) at_one.push_back(p.y);
  }
  EXPECT_EQ(at_one, (std::vector<RationalVector>{RV({7, 0}), RV({0, 7})}));
}

// Points meeting Mix*, generalized', linking and band cuts lie in the
// hull clipped to the band.
TEST(TwoSidedTest, ClippedHullContainsCutFeasiblePoints) {
  Rng rng(83);
  for (int t = 0; t < 15; ++t) {
    int n = static_cast<int>(rng.range(1, 4));
    TwoSidedData data = testing::random_data(rng, n);
    TwoSidedHullReport r = hull_with_bounds(data);
    HullOracle hull(r.clipped);
    for (int s = 0; s < 10; ++s) {
      Point p;
      for (int i = 0; i < n; ++i) p.z.push_back(rng.unit_fraction(3));
      p.y = {Rational(0), Rational(0)};
      // Raise y until every cut holds; raising y never breaks a cut with
      // nonnegative y coefficients.
      for (int round = 0; round < 4; ++round) {
        for (const auto& c : r.description) {
          Rational gap = c.violation(p.y, p.z);
          if (gap <= 0) continue;
          if (c.alpha[0] > 0 && c.alpha[1] > 0) {
            p.y[rng.below(2)] += gap / 2;
          } else if (c.alpha[0] > 0) {
            p.y[0] += gap / c.alpha[0];
          } else {
            p.y[1] += gap / c.alpha[1];
          }
        }
      }
      bool feasible = true;
      for (const auto& c : r.description) feasible = feasible && c.satisfied_by(p.y, p.z);
      if (!feasible) continue;
      EXPECT_TRUE(hull.query(p).inside);
    }
  }
}

}  // namespace
}  // namespace mixcut
