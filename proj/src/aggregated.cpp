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

#include "mixcut/aggregated.hpp"

#include <algorithm>
#include <numeric>

#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/mixing.hpp"
#include "mixcut/submodular.hpp"

namespace mixcut {
namespace {

constexpr double kSequenceLimit = 2e7;

// later[t][j]: max of column j over theta[t+1..], 0 when t is last.
RationalMatrix suffix_max(const MixingInstance& instance, const Sequence& theta) {
  const int len = static_cast<int>(theta.size());
  RationalMatrix later(len, RationalVector(instance.k(), Rational(0)));
  for (int t = len - 2; t >= 0; --t) {
    for (int j = 0; j < instance.k(); ++j) {
      later[t][j] = std::max(later[t + 1][j], instance.w(theta[t + 1], j));
    }
  }
  return later;
}

double sequence_count(int m, int max_len) {
  double total = 0, term = 1;
  for (int len = 1; len <= max_len; ++len) {
    term *= m - len + 1;
    total += term;
  }
  return total;
}

}  // namespace

std::vector<Sequence> decompose(const MixingInstance& instance, const Sequence& theta) {
  validate_sequence(theta, instance.n());
  std::vector<Sequence> out(instance.k());
  for (int j = 0; j < instance.k(); ++j) {
    Rational running = 0;
    for (int t = static_cast<int>(theta.size()) - 1; t >= 0; --t) {
      const Rational& v = instance.w(theta[t], j);
      if (v >= running) {
        out[j].push_back(theta[t]);
        running = v;
      }
    }
    std::reverse(out[j].begin(), out[j].end());
  }
  return out;
}

Rational l_theta(const MixingInstance& instance, const Sequence& theta) {
  validate_sequence(theta, instance.n());
  RationalMatrix later = suffix_max(instance, theta);
  const int len = static_cast<int>(theta.size());
  Rational best = instance.row_sum(theta.back());
  for (int t = 0; t + 1 < len; ++t) {
    Rational s = 0;
    for (int j = 0; j < instance.k(); ++j) {
      s += std::min(instance.w(theta[t], j), later[t][j]);
    }
    best = std::min(best, s);
  }
  return best;
}

LinearCut aggregated_cut(const MixingInstance& instance, const Sequence& theta) {
  if (!instance.lower_is_zero()) {
    throw LowerBoundsNotReduced("aggregated cuts need l = 0; reduce the instance first");
  }
  std::vector<Sequence> parts = decompose(instance, theta);
  const Rational l = l_theta(instance, theta);
  const Rational drop = std::min(instance.epsilon, l);

  LinearCut cut;
  cut.alpha.assign(instance.k(), Rational(1));
  cut.beta.assign(instance.n(), Rational(0));
  cut.gamma = 0;
  bool heads_at_max = true;
  for (int j = 0; j < instance.k(); ++j) {
    const Sequence& s = parts[j];
    for (std::size_t t = 0; t < s.size(); ++t) {
      Rational next = t + 1 < s.size() ? instance.w(s[t + 1], j) : Rational(0);
      cut.beta[s[t]] += instance.w(s[t], j) - next;
    }
    cut.gamma += instance.w(s.front(), j);
    if (instance.w(s.front(), j) != instance.column_max(j)) heads_at_max = false;
  }
  cut.beta[theta.back()] -= drop;
  cut.kind = heads_at_max && instance.epsilon <= l ? CutKind::kAMixStar : CutKind::kAMix;
  return cut;
}

bool dominates_linking(const MixingInstance& instance, const Sequence& theta) {
  return instance.epsilon <= l_theta(instance, theta);
}

bool check_validity(const MixingInstance& instance, const LinearCut& cut) {
  if (static_cast<int>(cut.alpha.size()) != instance.k() ||
      static_cast<int>(cut.beta.size()) != instance.n()) {
    throw DimensionMismatch("cut dimension differs from the instance");
  }
  for (const auto& a : cut.alpha) {
    if (a < 0) return false;
  }
  const Rational beta_total = std::accumulate(cut.beta.begin(), cut.beta.end(), Rational(0));
  bool valid = true;
  for_each_extreme_point(instance, [&](const RationalVector& y, std::uint64_t mask, int) {
    if (!valid) return;
    // M-space z is 1 - mask.
    Rational lhs = dot(cut.alpha, y) + beta_total;
    for (int i = 0; i < instance.n(); ++i) {
      if (mask >> i & 1) lhs -= cut.beta[i];
    }
    if (lhs < cut.gamma) valid = false;
  });
  return valid;
}

void for_each_sequence(const std::vector<int>& ground, int max_len,
                       const std::function<void(const Sequence&)>& visit) {
  const int m = static_cast<int>(ground.size());
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> used(m, false);
  Sequence current;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      used[c] = true;
      current.push_back(sorted[c]);
      visit(current);
      extend();
      current.pop_back();
      used[c] = false;
    }
  };
  extend();
}

std::optional<AggregatedSeparation> separate_aggregated(const MixingInstance& instance,
                                                        const Point& point,
                                                        AggregatedMode mode,
                                                        int theta_max) {
  if (!instance.lower_is_zero()) {
    throw LowerBoundsNotReduced("aggregated cuts need l = 0; reduce the instance first");
  }
  check_point(instance, point);
  const Rational y_total = std::accumulate(point.y.begin(), point.y.end(), Rational(0));
  if (y_total < instance.epsilon) {
    throw EpsilonViolated("sum of y is " + to_string(y_total) + " < eps = " +
                          to_string(instance.epsilon));
  }
  const int n = instance.n();
  if (mode != AggregatedMode::kExhaustive) {
    const bool submodular = diagnose(instance).g_submodular;
    if (mode == AggregatedMode::kGreedy && !submodular) {
      throw PreconditionFailed("greedy separation needs a submodular g");
    }
    mode = submodular ? AggregatedMode::kGreedy : AggregatedMode::kExhaustive;
  }

  if (mode == AggregatedMode::kGreedy) {
    RationalVector complement(n);
    for (int i = 0; i < n; ++i) complement[i] = 1 - point.z[i];
    PolymatroidVertex v = greedy_vertex(linking_oracle(instance), complement);
    Rational violation = v.value(complement) - y_total;
    if (violation <= 0) return std::nullopt;

    AggregatedSeparation out;
    out.greedy = true;
    out.violation = violation;
    for (auto it = v.order.rbegin(); it != v.order.rend(); ++it) {
      if (v.pi[*it] > 0) out.theta.push_back(*it);
    }
    LinearCut direct;
    direct.alpha.assign(instance.k(), Rational(1));
    direct.beta = v.pi;
    direct.gamma = v.empty_value + std::accumulate(v.pi.begin(), v.pi.end(), Rational(0));
    if (out.theta.empty()) {
      out.cut = linking_cut(instance);
    } else {
      out.cut = aggregated_cut(instance, out.theta);
    }
    if (!same_inequality(out.cut, direct)) {
      throw InternalInvariant("greedy vertex of g is not an aggregated cut; is g submodular?");
    }
    return out;
  }

  std::vector<int> ground;
  for (int i = 0; i < n; ++i) {
    if (point.z[i] < 1) ground.push_back(i);
  }
  const int max_len = theta_max < 0 ? static_cast<int>(ground.size())
                                    : std::min<int>(theta_max, ground.size());
  if (sequence_count(static_cast<int>(ground.size()), max_len) > kSequenceLimit) {
    throw GroundSetTooLarge("too many sequences for exhaustive separation; set theta_max");
  }
  std::optional<AggregatedSeparation> best;
  for_each_sequence(ground, max_len, [&](const Sequence& theta) {
    LinearCut cut = aggregated_cut(instance, theta);
    Rational violation = cut.violation(point.y, point.z);
    if (violation > 0 && (!best || violation > best->violation)) {
      best = AggregatedSeparation{theta, cut, violation, false};
    }
  });
  return best;
}

}  // namespace mixcut
