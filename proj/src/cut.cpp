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

#include "mixcut/cut.hpp"

#include "mixcut/errors.hpp"

namespace mixcut {

std::string kind_name(CutKind kind) {
  switch (kind) {
    case CutKind::kMix:
      return "Mix";
    case CutKind::kMixStar:
      return "Mix*";
    case CutKind::kAMix:
      return "AMix";
    case CutKind::kAMixStar:
      return "AMix*";
    case CutKind::kLinking:
      return "Linking";
    case CutKind::kBoundLower:
      return "BoundLower";
    case CutKind::kBoundUpper:
      return "BoundUpper";
    case CutKind::kPolymatroid:
      return "Polymatroid";
    case CutKind::kSeparator:
      return "Separator";
  }
  return "?";
}

Rational LinearCut::lhs(const RationalVector& y, const RationalVector& z) const {
  if (y.size() != alpha.size() || z.size() != beta.size()) {
    throw DimensionMismatch("cut/point dimension mismatch");
  }
  return dot(alpha, y) + dot(beta, z);
}

Rational LinearCut::violation(const RationalVector& y,
                              const RationalVector& z) const {
  return gamma - lhs(y, z);
}

LinearCut canonicalize(const LinearCut& cut) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  auto visit = [&](const Rational& r) {
    if (r == 0) return;
    den_lcm = lcm(den_lcm, denominator_of(r));
    num_gcd = gcd(num_gcd, abs(numerator_of(r)));
  };
  for (const auto& a : cut.alpha) visit(a);
  for (const auto& b : cut.beta) visit(b);
  visit(cut.gamma);
  if (num_gcd == 0) throw AllZeroCut("cut has no nonzero entry");

  // Every entry is (num/den); scaling by lcm/gcd makes them coprime integers.
  Rational scale(den_lcm, num_gcd);
  LinearCut out = cut;
  for (auto& a : out.alpha) a *= scale;
  for (auto& b : out.beta) b *= scale;
  out.gamma *= scale;
  return out;
}

bool same_inequality(const LinearCut& a, const LinearCut& b) {
  if (a.alpha.size() != b.alpha.size() || a.beta.size() != b.beta.size()) {
    return false;
  }
  LinearCut ca = canonicalize(a), cb = canonicalize(b);
  return ca.alpha == cb.alpha && ca.beta == cb.beta && ca.gamma == cb.gamma;
}

std::string format_cut(const LinearCut& cut) {
  std::string out;
  for (std::size_t j = 0; j < cut.alpha.size(); ++j) {
    if (j) out += ' ';
    out += to_string(cut.alpha[j]);
  }
  out += " |";
  for (const auto& b : cut.beta) out += ' ' + to_string(b);
  out += " | >= " + to_string(cut.gamma) + " | " + kind_name(cut.kind);
  return out;
}

}  // namespace mixcut
