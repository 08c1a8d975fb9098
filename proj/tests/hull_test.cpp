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

#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/mixing.hpp"
#include "mixcut/submodular.hpp"
#include "test_util.hpp"

namespace mixcut {
namespace {

using testing::R;
using testing::RV;

TEST(DiagnoseTest, ExampleOne) {
  HullDiagnosis d = diagnose(testing::example1());
  EXPECT_EQ(d.i_bar, (std::vector<int>{3, 4}));
  EXPECT_TRUE(d.c1_holds);
  EXPECT_TRUE(d.c2_holds);
  EXPECT_TRUE(d.negligible);
  EXPECT_FALSE(d.l_w.infinite);
  EXPECT_EQ(d.l_w.value, R(8));
  EXPECT_TRUE(d.g_submodular);
  EXPECT_TRUE(d.sufficient);
  EXPECT_EQ(d.l_w_pair, std::make_pair(1, 2));
}

TEST(DiagnoseTest, ExampleTwo) {
  HullDiagnosis d = diagnose(testing::example2());
  EXPECT_EQ(d.i_bar, (std::vector<int>{3, 4}));
  EXPECT_TRUE(d.negligible);
  EXPECT_EQ(d.l_w.value, R(8));
  EXPECT_FALSE(d.eps_le_lw);
  EXPECT_FALSE(d.g_submodular);
}

TEST(DiagnoseTest, ExampleThree) {
  HullDiagnosis d = diagnose(testing::example3());
  EXPECT_EQ(d.i_bar, (std::vector<int>{3, 4}));
  EXPECT_FALSE(d.c1_holds);
  EXPECT_TRUE(d.c2_holds);
  EXPECT_EQ(d.c1_pair, std::make_pair(2, 3));
  EXPECT_FALSE(d.negligible);
  EXPECT_FALSE(d.g_submodular);
}

TEST(DiagnoseTest, ExampleFour) {
  HullDiagnosis d = diagnose(testing::example4());
  EXPECT_EQ(d.i_bar, (std::vector<int>{3, 4}));
  EXPECT_TRUE(d.c1_holds);
  EXPECT_FALSE(d.c2_holds);
  EXPECT_FALSE(d.negligible);
  EXPECT_FALSE(d.g_submodular);
}

TEST(DiagnoseTest, EdgeCases) {
  HullDiagnosis all_small = diagnose(make_instance({RV({1, 1}), RV({0, 2})}, {}, 5));
  EXPECT_TRUE(all_small.l_w.infinite);
  EXPECT_EQ(all_small.l_w.str(), "inf");
  EXPECT_TRUE(all_small.g_submodular);
  HullDiagnosis one_big = diagnose(make_instance({RV({4, 4}), RV({0, 1})}, {}, 2));
  EXPECT_EQ(one_big.l_w.value, R(8));
  HullDiagnosis none_small = diagnose(make_instance({RV({4, 4}), RV({3, 5})}, {}, 0));
  EXPECT_TRUE(none_small.i_bar.empty());
  EXPECT_TRUE(none_small.negligible);
  EXPECT_EQ(none_small.l_w.value, R(7));
  EXPECT_THROW(diagnose(make_instance({RV({4})}, RV({1}), 0)), LowerBoundsNotReduced);
}

TEST(DiagnoseTest, AgreesWithBruteForceSubmodularity) {
  Rng rng(61);
  int yes = 0, no = 0;
  for (int t = 0; t < 200; ++t) {
    int n = static_cast<int>(rng.range(1, 6)), k = static_cast<int>(rng.range(1, 3));
    MixingInstance inst = rng.coin(3) ? testing::random_sufficient_instance(rng, n, k)
                                      : testing::random_instance(rng, n, k);
    bool brute = testing::brute_submodular(n, [&](std::uint64_t m) { return testing::brute_g(inst, m); });
    EXPECT_EQ(diagnose(inst).g_submodular, brute);
    (brute ? yes : no)++;
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(DiagnoseTest, FormatsSummary) {
  MixingInstance inst = testing::example1();
  std::string text = format_diagnosis(inst, diagnose(inst));
  EXPECT_NE(text.find("sufficient: yes; L_W(eps)=8; I_bar={4,5}"), std::string::npos);
  MixingInstance inst2 = testing::example2();
  EXPECT_NE(format_diagnosis(inst2, diagnose(inst2)).find("sufficient: no (eps > L_W(eps))"),
            std::string::npos);
}

TEST(VRepresentationTest, MatchesDirectEnumeration) {
  Rng rng(62);
  for (int t = 0; t < 30; ++t) {
    int n = static_cast<int>(rng.range(1, 6)), k = static_cast<int>(rng.range(1, 3));
    MixingInstance inst = testing::random_instance(rng, n, k);
    VRepresentation m = v_representation(inst).complemented();
    auto brute = testing::brute_extreme_points(inst);
    ASSERT_EQ(m.points.size(), brute.size());
    for (std::size_t p = 0; p < brute.size(); ++p) {
      EXPECT_EQ(m.points[p].y, brute[p].y);
      EXPECT_EQ(m.points[p].z, brute[p].z);
    }
    EXPECT_EQ(m.rays.size(), static_cast<std::size_t>(k));
  }
}

TEST(VRepresentationTest, ExampleCount) {
  MixingInstance inst = testing::example1();
  int in_s = 0;
  for (std::uint64_t m = 0; m < 32; ++m) {
    Rational total = 0;
    for (int j = 0; j < 2; ++j) {
      Rational top = 0;
      for (int i = 0; i < 5; ++i) {
        if (testing::has_bit(m, i)) top = std::max(top, inst.w(i, j));
      }
      total += top;
    }
    if (total > 7) ++in_s;
  }
  EXPECT_EQ(v_representation(inst).points.size(), static_cast<std::size_t>(in_s + 2 * (32 - in_s)));
  EXPECT_EQ(v_representation(inst).space, Space::kP);
}

TEST(VRepresentationTest, Bound) {
  RationalMatrix w(21, RV({1}));
  EXPECT_THROW(v_representation(make_instance(w, {}, 0)), GroundSetTooLarge);
}

TEST(MembershipTest, ExtremePointsAndCombinationsInside) {
  Rng rng(63);
  for (int t = 0; t < 20; ++t) {
    int n = static_cast<int>(rng.range(1, 4)), k = static_cast<int>(rng.range(1, 3));
    MixingInstance inst = testing::random_instance(rng, n, k);
    HullOracle hull(v_representation(inst).complemented());
    const auto& pts = hull.vrep().points;
    for (int s = 0; s < 10; ++s) {
      const auto& a = pts[rng.below(pts.size())];
      const auto& b = pts[rng.below(pts.size())];
      Rational lam = rng.unit_fraction(5);
      Point p;
      for (int j = 0; j < k; ++j) p.y.push_back(lam * a.y[j] + (1 - lam) * b.y[j] + rng.range(0, 2));
      for (int i = 0; i < n; ++i) p.z.push_back(lam * a.z[i] + (1 - lam) * b.z[i]);
      MembershipResult r = hull.query(p);
      ASSERT_TRUE(r.inside);
      Rational total = std::accumulate(r.lambda.begin(), r.lambda.end(), Rational(0));
      EXPECT_EQ(total, 1);
      RationalVector y(k, Rational(0)), z(n, Rational(0));
      for (std::size_t q = 0; q < pts.size(); ++q) {
        for (int j = 0; j < k; ++j) y[j] += r.lambda[q] * pts[q].y[j];
        for (int i = 0; i < n; ++i) z[i] += r.lambda[q] * pts[q].z[i];
      }
      for (int j = 0; j < k; ++j) y[j] += r.mu[j];
      EXPECT_EQ(y, p.y);
      EXPECT_EQ(z, p.z);
    }
  }
}

TEST(MembershipTest, ExampleTwoWitnessOutside) {
  MixingInstance inst = testing::example2();
  VRepresentation m = v_representation(inst).complemented();
  Point p{{R(13, 2), R(6)}, {R(1), R(1, 2), R(1, 2), R(1), R(1)}};
  MembershipResult r = membership(m, p);
  EXPECT_FALSE(r.inside);
  ASSERT_TRUE(r.separator.has_value());
  EXPECT_TRUE(cut_valid_on(m, *r.separator));
  EXPECT_FALSE(r.separator->satisfied_by(p.y, p.z));
  EXPECT_THROW(membership(m, Point{RV({1}), RV({1, 1, 1, 1, 1})}), DimensionMismatch);
}

TEST(SufficiencyTest, ExampleOneSamplesInside) {
  SufficiencyReport r = check_sufficiency(testing::example1(), {7, 200});
  EXPECT_TRUE(r.diagnosis.sufficient);
  EXPECT_EQ(r.samples_checked, 200);
  EXPECT_EQ(r.samples_outside, 0);
  EXPECT_TRUE(r.passed);
}

TEST(SufficiencyTest, InsufficientExamplesCertified) {
  for (const auto& inst : {testing::example2(), testing::example3(), testing::example4()}) {
    SufficiencyReport r = check_sufficiency(inst);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(r.witness_satisfies_cuts);
    EXPECT_TRUE(r.witness_outside);
    EXPECT_TRUE(r.passed);
    EXPECT_NE(sufficiency_json(inst, r).find("\"passed\": true"), std::string::npos);
  }
}

TEST(SufficiencyTest, FamilyContainsPaperCuts) {
  auto cuts = sufficient_cut_family(testing::example1());
  auto has = [&](const LinearCut& want) {
    for (const auto& c : cuts) {
      if (same_inequality(c, want)) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(testing::make_cut(RV({1, 1}), 5, {{1, 4}, {2, 1}, {3, 5}}, 17)));
  EXPECT_TRUE(has(testing::make_cut(RV({0, 1}), 5, {{2, 2}, {4, 1}, {5, 1}}, 4)));
  EXPECT_FALSE(has(testing::make_cut(RV({1, 1}), 5, {{4, 1}}, 17)));
}

}  // namespace
}  // namespace mixcut
