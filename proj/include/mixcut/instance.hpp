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

#ifndef MIXCUT_INSTANCE_HPP_
#define MIXCUT_INSTANCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mixcut/rational.hpp"

namespace mixcut {

// Scenario data for M(W, l, eps): n scenarios (rows), k coordinates (columns).
struct MixingInstance {
  RationalMatrix weights;
  RationalVector lower;
  Rational epsilon = 0;
  std::optional<RationalVector> probabilities;

  int n() const { return static_cast<int>(weights.size()); }
  int k() const { return lower.empty() ? 0 : static_cast<int>(lower.size()); }
  const Rational& w(int i, int j) const { return weights[i][j]; }

  bool lower_is_zero() const;
  RationalVector column(int j) const;
  Rational column_max(int j) const;
  Rational row_sum(int i) const;

  // Throws ValidationError.
  void validate() const;
};

// Builds and validates. An empty lower vector means l = 0.
MixingInstance make_instance(RationalMatrix weights, RationalVector lower = {},
                             Rational epsilon = 0,
                             std::optional<RationalVector> probabilities = {});

// (y, z) in the original (M-space) coordinates.
struct Point {
  RationalVector y;
  RationalVector z;
};

// Ordered scenario sequence, 0-based, distinct.
using Sequence = std::vector<int>;

// Throws InvalidSequence on empty, repeated or out-of-range entries.
void validate_sequence(const Sequence& theta, int n);

// 0-based indices from a "1,3,2" style list of 1-based indices.
Sequence parse_sequence(const std::string& text);
std::string format_sequence(const Sequence& theta);

// Instance documents: {"n", "k", "W", "lower", "epsilon", "probabilities"}.
// Throws ParseError on malformed text, ValidationError on bad data.
MixingInstance parse_instance(const std::string& json_text);
MixingInstance load_instance(const std::string& path);
std::string serialize_instance(const MixingInstance& instance);

// Point documents: {"y": [...], "z": [...]}.
Point parse_point(const std::string& json_text);
Point load_point(const std::string& path);
std::string serialize_point(const Point& point);

std::string read_file(const std::string& path);

}  // namespace mixcut

#endif  // MIXCUT_INSTANCE_HPP_
