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

#include "mixcut/vrep.hpp"

#include "mixcut/errors.hpp"

namespace mixcut {

VRepresentation VRepresentation::complemented() const {
  VRepresentation out = *this;
  out.space = space == Space::kP ? Space::kM : Space::kP;
  for (auto& p : out.points) {
    for (auto& v : p.z) v = 1 - v;
  }
  return out;
}

void for_each_extreme_point(
    const MixingInstance& instance,
    const std::function<void(const RationalVector&, std::uint64_t, int)>& visit) {
  const int n = instance.n(), k = instance.k();
  if (n > kVRepresentationBound) {
    throw GroundSetTooLarge("V-representation limited to n <= 20");
  }
  Rational floor = instance.epsilon;
  for (const auto& l : instance.lower) floor += l;
  RationalVector y(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational total = 0;
    for (int j = 0; j < k; ++j) {
      y[j] = instance.lower[j];
      for (int i = 0; i < n; ++i) {
        if ((mask >> i & 1) && instance.w(i, j) > y[j]) y[j] = instance.w(i, j);
      }
      total += y[j];
    }
    if (total > floor) {
      visit(y, mask, -1);
      continue;
    }
    for (int d = 0; d < k; ++d) {
      RationalVector shifted = y;
      shifted[d] += floor - total;
      visit(shifted, mask, d);
    }
  }
}

VRepresentation v_representation(const MixingInstance& instance) {
  VRepresentation out;
  out.space = Space::kP;
  out.n = instance.n();
  out.k = instance.k();
  for_each_extreme_point(instance, [&](const RationalVector& y, std::uint64_t mask, int) {
    VPoint p{y, RationalVector(out.n)};
    for (int i = 0; i < out.n; ++i) p.z[i] = (mask >> i & 1) ? 1 : 0;
    out.points.push_back(std::move(p));
  });
  for (int j = 0; j < out.k; ++j) {
    RationalVector e(out.k, Rational(0));
    e[j] = 1;
    out.rays.push_back(std::move(e));
  }
  return out;
}

bool cut_valid_on(const VRepresentation& vrep, const LinearCut& cut) {
  for (const auto& r : vrep.rays) {
    if (dot(cut.alpha, r) < 0) return false;
  }
  for (const auto& p : vrep.points) {
    if (!cut.satisfied_by(p.y, p.z)) return false;
  }
  return true;
}

}  // namespace mixcut
