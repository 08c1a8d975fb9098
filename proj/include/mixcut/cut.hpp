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

#ifndef MIXCUT_CUT_HPP_
#define MIXCUT_CUT_HPP_

#include <string>

#include "mixcut/rational.hpp"

namespace mixcut {

enum class CutKind {
  kMix,
  kMixStar,
  kAMix,
  kAMixStar,
  kLinking,
  kBoundLower,
  kBoundUpper,
  kPolymatroid,
  kSeparator,
};

std::string kind_name(CutKind kind);

// alpha . y + beta . z >= gamma.
struct LinearCut {
  RationalVector alpha;
  RationalVector beta;
  Rational gamma = 0;
  CutKind kind = CutKind::kPolymatroid;

  Rational lhs(const RationalVector& y, const RationalVector& z) const;
  // gamma - lhs; positive means violated.
  Rational violation(const RationalVector& y, const RationalVector& z) const;
  bool satisfied_by(const RationalVector& y, const RationalVector& z) const {
    return violation(y, z) <= 0;
  }
};

// Positive rescaling to coprime integers. The direction is never flipped.
// Throws AllZeroCut.
LinearCut canonicalize(const LinearCut& cut);

// Same half-space (positive multiples), ignoring kind.
bool same_inequality(const LinearCut& a, const LinearCut& b);

// "a1 ... ak | b1 ... bn | >= g | kind"
std::string format_cut(const LinearCut& cut);

}  // namespace mixcut

#endif  // MIXCUT_CUT_HPP_
