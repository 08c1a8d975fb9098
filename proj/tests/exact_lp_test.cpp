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
#include "mixcut/exact_lp.hpp"
#include "mixcut/sampling.hpp"
#include "test_util.hpp"

namespace mixcut {
namespace {

using testing::R;
using testing::RV;

RationalVector times(const RationalMatrix& a, const RationalVector& x) {
  RationalVector out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

// Either certificate is checked on its own terms.
void expect_certified(const RationalMatrix& a, const RationalVector& b,
                      const FeasibilityResult& r) {
  if (r.feasible) {
    for (const auto& v : r.x) EXPECT_GE(v, 0);
    EXPECT_EQ(times(a, r.x), b);
  } else {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
      Rational s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += r.farkas[i] * a[i][c];
      EXPECT_GE(s, 0);
    }
    EXPECT_LT(dot(r.farkas, b), 0);
  }
}

TEST(ExactLpTest, SimplexOnTheSimplex) {
  RationalMatrix a = {RV({1, 1})};
  auto r = solve_feasibility(a, RV({1}));
  EXPECT_TRUE(r.feasible);
  expect_certified(a, RV({1}), r);
}

TEST(ExactLpTest, InfeasibleGivesFarkasVector) {
  RationalMatrix a = {RV({1, 1})};
  auto r = solve_feasibility(a, RV({-1}));
  EXPECT_FALSE(r.feasible);
  expect_certified(a, RV({-1}), r);
}

TEST(ExactLpTest, ConflictingRows) {
  RationalMatrix a = {RV({1, 0}), RV({1, 0})};
  RationalVector b = {R(1, 2), R(1, 3)};
  auto r = solve_feasibility(a, b);
  EXPECT_FALSE(r.feasible);
  expect_certified(a, b, r);
}

TEST(ExactLpTest, DegenerateSystem) {
  RationalMatrix a = {RV({1, -1, 0, 0}), RV({0, 1, -1, 0}), RV({0, 0, 1, -1}), RV({1, 1, 1, 1})};
  RationalVector b = RV({0, 0, 0, 4});
  auto r = solve_feasibility(a, b);
  EXPECT_TRUE(r.feasible);
  expect_certified(a, b, r);
}

TEST(ExactLpTest, DimensionMismatch) {
  EXPECT_THROW(solve_feasibility({RV({1, 1})}, RV({1, 2})), DimensionMismatch);
  EXPECT_THROW(solve_feasibility({RV({1, 1}), RV({1})}, RV({1, 2})), DimensionMismatch);
}

TEST(ExactLpTest, RandomSystemsAreCertified) {
  Rng rng(55);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 400; ++t) {
    int m = static_cast<int>(rng.range(1, 5)), cols = static_cast<int>(rng.range(1, 8));
    RationalMatrix a(m, RationalVector(cols));
    for (auto& row : a) {
      for (auto& v : row) v = Rational(rng.range(-4, 4), rng.range(1, 3));
    }
    RationalVector b(m);
    if (rng.coin()) {
      RationalVector x(cols);
      for (auto& v : x) v = rng.coin(3) ? Rational(0) : Rational(rng.range(0, 5), rng.range(1, 3));
      b = times(a, x);
    } else {
      for (auto& v : b) v = rng.range(-6, 6);
    }
    auto r = solve_feasibility(a, b);
    (r.feasible ? feasible : infeasible)++;
    expect_certified(a, b, r);
  }
  EXPECT_GT(feasible, 0);
  EXPECT_GT(infeasible, 0);
}

}  // namespace
}  // namespace mixcut
