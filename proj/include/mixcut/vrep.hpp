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

#ifndef MIXCUT_VREP_HPP_
#define MIXCUT_VREP_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "mixcut/cut.hpp"
#include "mixcut/instance.hpp"

namespace mixcut {

// P: z complemented (z_i = 1 means scenario i is enforced).
// M: the original coordinates.
enum class Space { kP, kM };

constexpr int kVRepresentationBound = 20;

struct VPoint {
  RationalVector y;
  RationalVector z;
};

// conv(points) + cone(rays); rays move y only.
struct VRepresentation {
  Space space = Space::kP;
  int n = 0;
  int k = 0;
  std::vector<VPoint> points;
  std::vector<RationalVector> rays;

  // Same set in the other space (z -> 1 - z).
  VRepresentation complemented() const;
};

// Extreme points of the mixing set: A(z) for z in S(eps), B(z, d) otherwise,
// plus the k unit rays. Throws GroundSetTooLarge for n > 20.
VRepresentation v_representation(const MixingInstance& instance);

// Visits the same points without storing them. `mask` is the P-space z.
// `deficit_coord` is -1 for A(z) points.
void for_each_extreme_point(
    const MixingInstance& instance,
    const std::function<void(const RationalVector& y, std::uint64_t mask,
                             int deficit_coord)>& visit);

// min over the hull of cut.lhs - cut.gamma >= 0.
bool cut_valid_on(const VRepresentation& vrep, const LinearCut& cut);

}  // namespace mixcut

#endif  // MIXCUT_VREP_HPP_
