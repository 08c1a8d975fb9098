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

#include "mixcut/mixing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mixcut/errors.hpp"

namespace mixcut {

SetFunctionOracle column_oracle(const MixingInstance& instance, int j) {
  RationalVector col = instance.column(j);
  Rational floor = instance.lower[j];
  return SetFunctionOracle(instance.n(), [col, floor](const Subset& s) {
    Rational m = floor;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (s[i] && col[i] > m) m = col[i];
    }
    return m;
  });
}

SetFunctionOracle linking_oracle(const MixingInstance& instance) {
  MixingInstance inst = instance;
  Rational floor = instance.epsilon;
  for (const auto& l : instance.lower) floor += l;
  return SetFunctionOracle(instance.n(), [inst, floor](const Subset& s) {
    Rational total = 0;
    for (int j = 0; j < inst.k(); ++j) {
      Rational m = inst.lower[j];
      for (int i = 0; i < inst.n(); ++i) {
        if (s[i] && inst.w(i, j) > m) m = inst.w(i, j);
      }
      total += m;
    }
    return std::max(total, floor);
  });
}

LinearCut linking_cut(const MixingInstance& instance) {
  LinearCut cut;
  cut.alpha.assign(instance.k(), Rational(1));
  cut.beta.assign(instance.n(), Rational(0));
  cut.gamma = instance.epsilon;
  for (const auto& l : instance.lower) cut.gamma += l;
  cut.kind = CutKind::kLinking;
  return cut;
}

void check_point(const MixingInstance& instance, const Point& point) {
  if (static_cast<int>(point.y.size()) != instance.k() ||
      static_cast<int>(point.z.size()) != instance.n()) {
    throw DimensionMismatch("point has y of length " + std::to_string(point.y.size()) +
                            " and z of length " + std::to_string(point.z.size()) +
                            ", expected " + std::to_string(instance.k()) + " and " +
                            std::to_string(instance.n()));
  }
  for (const auto& v : point.z) {
    if (v < 0 || v > 1) throw DomainError("z entry " + to_string(v) + " outside [0,1]");
  }
}

ReducedInstance reduce_lower_bounds(const MixingInstance& instance) {
  ReducedInstance out{instance, instance.lower};
  for (auto& row : out.instance.weights) {
    for (int j = 0; j < instance.k(); ++j) {
      row[j] = positive_part(row[j] - instance.lower[j]);
    }
  }
  out.instance.lower.assign(instance.k(), Rational(0));
  return out;
}

LinearCut lift_cut(const LinearCut& reduced, const RationalVector& shift) {
  LinearCut out = reduced;
  out.gamma += dot(reduced.alpha, shift);
  return out;
}

LinearCut lower_cut(const LinearCut& original, const RationalVector& shift) {
  LinearCut out = original;
  out.gamma -= dot(original.alpha, shift);
  return out;
}

RationalVector quantile_lower_bounds(const MixingInstance& instance,
                                     const Rational& risk) {
  if (risk <= 0 || risk >= 1) {
    throw RiskOutOfRange("risk " + to_string(risk) + " outside (0,1)");
  }
  if (!instance.probabilities) {
    throw ValidationError("instance has no probabilities");
  }
  const auto& p = *instance.probabilities;
  RationalVector out(instance.k());
  for (int j = 0; j < instance.k(); ++j) {
    std::vector<int> order(instance.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return instance.w(a, j) > instance.w(b, j);
    });
    Rational mass = 0;
    out[j] = 0;
    for (int i : order) {
      mass += p[i];
      if (mass > risk) {
        out[j] = instance.w(i, j);
        break;
      }
    }
  }
  return out;
}

void validate_mixing_sequence(const MixingInstance& instance,
                              const MixingSequence& seq) {
  if (seq.column < 0 || seq.column >= instance.k()) {
    throw InvalidSequence("column " + std::to_string(seq.column + 1) + " out of range");
  }
  validate_sequence(seq.indices, instance.n());
  const int j = seq.column;
  for (std::size_t s = 0; s < seq.indices.size(); ++s) {
    const Rational& v = instance.w(seq.indices[s], j);
    if (v < instance.lower[j]) {
      throw InvalidSequence("value below the lower bound at position " +
                            std::to_string(s + 1));
    }
    if (s > 0 && v > instance.w(seq.indices[s - 1], j)) {
      throw InvalidSequence("values increase at position " + std::to_string(s + 1));
    }
  }
}

LinearCut mixing_cut(const MixingInstance& instance, const MixingSequence& seq) {
  validate_mixing_sequence(instance, seq);
  const int j = seq.column;
  LinearCut cut;
  cut.alpha.assign(instance.k(), Rational(0));
  cut.alpha[j] = 1;
  cut.beta.assign(instance.n(), Rational(0));
  const auto& idx = seq.indices;
  for (std::size_t s = 0; s < idx.size(); ++s) {
    Rational next = s + 1 < idx.size() ? instance.w(idx[s + 1], j) : instance.lower[j];
    cut.beta[idx[s]] += instance.w(idx[s], j) - next;
  }
  cut.gamma = instance.w(idx.front(), j);
  bool trivial = std::all_of(cut.beta.begin(), cut.beta.end(),
                             [](const Rational& b) { return b == 0; });
  if (trivial) {
    cut.kind = CutKind::kBoundLower;
  } else if (cut.gamma == instance.column_max(j)) {
    cut.kind = CutKind::kMixStar;
  } else {
    cut.kind = CutKind::kMix;
  }
  return cut;
}

std::vector<MixingSeparation> separate_mixing(const MixingInstance& instance,
                                              const Point& point) {
  check_point(instance, point);
  const int n = instance.n();
  RationalVector complement(n);
  for (int i = 0; i < n; ++i) complement[i] = 1 - point.z[i];

  std::vector<MixingSeparation> out;
  for (int j = 0; j < instance.k(); ++j) {
    PolymatroidVertex v = greedy_vertex(column_oracle(instance, j), complement);
    Rational violation = v.value(complement) - point.y[j];
    if (violation <= 0) continue;

    // Elements with positive gain, largest value first, give the sequence.
    MixingSequence seq{j, {}};
    for (int i : v.order) {
      if (v.pi[i] > 0) seq.indices.push_back(i);
    }
    std::stable_sort(seq.indices.begin(), seq.indices.end(), [&](int a, int b) {
      return instance.w(a, j) > instance.w(b, j);
    });
    LinearCut cut;
    if (seq.indices.empty()) {
      cut.alpha.assign(instance.k(), Rational(0));
      cut.alpha[j] = 1;
      cut.beta.assign(n, Rational(0));
      cut.gamma = instance.lower[j];
      cut.kind = CutKind::kBoundLower;
    } else {
      cut = mixing_cut(instance, seq);
      LinearCut direct;
      direct.alpha = cut.alpha;
      direct.beta = v.pi;
      direct.gamma = v.empty_value + std::accumulate(v.pi.begin(), v.pi.end(), Rational(0));
      if (!same_inequality(cut, direct)) {
        throw InternalInvariant("greedy vertex differs from its mixing cut");
      }
    }
    out.push_back({seq, cut, violation});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.violation > b.violation;
  });
  return out;
}

std::vector<LinearCut> enumerate_mixing_cuts(const MixingInstance& instance,
                                             int j, bool star_only) {
  std::vector<int> candidates;
  for (int i = 0; i < instance.n(); ++i) {
    if (instance.w(i, j) > instance.lower[j]) candidates.push_back(i);
  }
  std::vector<LinearCut> out;
  if (candidates.empty()) {
    for (int i = 0; i < instance.n(); ++i) {
      if (instance.w(i, j) == instance.lower[j]) {
        out.push_back(mixing_cut(instance, MixingSequence{j, {i}}));
        break;
      }
    }
    return out;
  }
  if (candidates.size() > 20) {
    throw GroundSetTooLarge("too many candidate rows for enumeration");
  }
  const Rational top = instance.column_max(j);
  const std::uint64_t full = std::uint64_t{1} << candidates.size();
  for (std::uint64_t m = 1; m < full; ++m) {
    MixingSequence seq{j, {}};
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (m >> c & 1) seq.indices.push_back(candidates[c]);
    }
    std::stable_sort(seq.indices.begin(), seq.indices.end(), [&](int a, int b) {
      return instance.w(a, j) > instance.w(b, j);
    });
    bool distinct = true;
    for (std::size_t s = 1; s < seq.indices.size(); ++s) {
      if (instance.w(seq.indices[s], j) == instance.w(seq.indices[s - 1], j)) {
        distinct = false;
        break;
      }
    }
    if (!distinct) continue;
    if (star_only && instance.w(seq.indices.front(), j) != top) continue;
    out.push_back(mixing_cut(instance, seq));
  }
  return out;
}

}  // namespace mixcut
