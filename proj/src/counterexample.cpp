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

#include "mixcut/counterexample.hpp"

#include <algorithm>
#include <cstdint>

#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"

namespace mixcut {
namespace {

Rational max_sum(const MixingInstance& instance, const std::vector<int>& rows) {
  Rational total = 0;
  for (int j = 0; j < instance.k(); ++j) {
    Rational m = 0;
    for (int i : rows) m = std::max(m, instance.w(i, j));
    total += m;
  }
  return total;
}

bool in_i_bar(const MixingInstance& instance, int i) {
  return instance.row_sum(i) <= instance.epsilon;
}

void check_index(const MixingInstance& instance, int i) {
  if (i < 0 || i >= instance.n()) {
    throw PreconditionFailed("index " + std::to_string(i + 1) + " out of range");
  }
}

void check_reduced(const MixingInstance& instance) {
  if (!instance.lower_is_zero()) {
    throw LowerBoundsNotReduced("witnesses need l = 0; reduce the instance first");
  }
}

void check_slack(const MixingInstance& instance, int slack) {
  if (slack < 0 || slack >= instance.k()) {
    throw PreconditionFailed("slack column " + std::to_string(slack + 1) + " out of range");
  }
}

// z = 1 except `value` on `rows`; y_j = scale * max_rows w_j, column
// `slack` takes `extra`.
Point build(const MixingInstance& instance, const std::vector<int>& rows,
            const Rational& value, const Rational& scale, const Rational& extra, int slack) {
  Point pt;
  pt.z.assign(instance.n(), Rational(1));
  for (int i : rows) pt.z[i] = value;
  pt.y.resize(instance.k());
  for (int j = 0; j < instance.k(); ++j) {
    Rational m = 0;
    for (int i : rows) m = std::max(m, instance.w(i, j));
    pt.y[j] = scale * m;
  }
  pt.y[slack] += extra;
  return pt;
}

}  // namespace

std::string reason_name(WitnessReason reason) {
  switch (reason) {
    case WitnessReason::kC2:
      return "C2";
    case WitnessReason::kC1:
      return "C1";
    case WitnessReason::kLW:
      return "L_W";
  }
  return "?";
}

std::vector<int> find_minimal_u(const MixingInstance& instance) {
  check_reduced(instance);
  std::vector<int> u;
  for (int i = 0; i < instance.n(); ++i) {
    if (in_i_bar(instance, i)) u.push_back(i);
  }
  if (max_sum(instance, u) <= instance.epsilon) {
    throw PreconditionFailed("C2 holds; no subset of I_bar exceeds eps");
  }
  // One pass suffices: max_sum is monotone, so a failed removal stays failed.
  for (std::size_t t = 0; t < u.size();) {
    std::vector<int> smaller = u;
    smaller.erase(smaller.begin() + t);
    if (max_sum(instance, smaller) > instance.epsilon) {
      u = smaller;
    } else {
      ++t;
    }
  }
  return u;
}

Witness witness_c2(const MixingInstance& instance, const std::vector<int>& u, int slack) {
  check_reduced(instance);
  check_slack(instance, slack);
  if (u.size() < 2) throw PreconditionFailed("U needs at least two elements");
  for (int i : u) {
    check_index(instance, i);
    if (!in_i_bar(instance, i)) {
      throw PreconditionFailed("U element " + std::to_string(i + 1) + " is not in I_bar");
    }
  }
  const Rational total = max_sum(instance, u);
  if (total <= instance.epsilon) throw PreconditionFailed("U does not exceed eps");
  for (std::size_t t = 0; t < u.size(); ++t) {
    std::vector<int> smaller = u;
    smaller.erase(smaller.begin() + t);
    if (max_sum(instance, smaller) > instance.epsilon) {
      throw PreconditionFailed("U is not minimal");
    }
  }
  const Rational m = static_cast<long>(u.size());
  const Rational scale = (m - 1) / m;
  Witness w{WitnessReason::kC2, u,
            build(instance, u, 1 / m, scale, instance.epsilon - scale * total, slack), slack};
  std::sort(w.support.begin(), w.support.end());
  return w;
}

Witness witness_c1(const MixingInstance& instance, int p, int q, int slack) {
  check_reduced(instance);
  check_slack(instance, slack);
  check_index(instance, p);
  check_index(instance, q);
  if (in_i_bar(instance, p)) throw PreconditionFailed("p lies in I_bar");
  if (!in_i_bar(instance, q)) throw PreconditionFailed("q lies outside I_bar");
  bool above = false;
  for (int j = 0; j < instance.k(); ++j) above = above || instance.w(q, j) > instance.w(p, j);
  if (!above) throw PreconditionFailed("q does not exceed p in any column");
  const Rational half(1, 2);
  const Rational extra =
      half * (instance.epsilon + instance.row_sum(p) - max_sum(instance, {p, q}));
  return Witness{WitnessReason::kC1, {p, q}, build(instance, {p, q}, half, half, extra, slack), slack};
}

Witness witness_lw(const MixingInstance& instance, int p, int q, int slack) {
  check_reduced(instance);
  check_slack(instance, slack);
  check_index(instance, p);
  check_index(instance, q);
  if (p == q) throw PreconditionFailed("p and q must differ");
  if (in_i_bar(instance, p) || in_i_bar(instance, q)) {
    throw PreconditionFailed("p and q must lie outside I_bar");
  }
  HullDiagnosis d = diagnose(instance);
  Rational pair_min = 0;
  for (int j = 0; j < instance.k(); ++j) {
    pair_min += std::min(instance.w(p, j), instance.w(q, j));
  }
  if (d.l_w.infinite || pair_min != d.l_w.value) {
    throw PreconditionFailed("(p, q) does not attain L_W(eps)");
  }
  if (instance.epsilon <= pair_min) throw PreconditionFailed("eps <= L_W(eps)");
  const Rational half(1, 2);
  return Witness{WitnessReason::kLW, {p, q}, build(instance, {p, q}, half, half, half * pair_min, slack), slack};
}

Witness find_witness(const MixingInstance& instance, int slack) {
  HullDiagnosis d = diagnose(instance);
  if (d.sufficient) throw PreconditionFailed("the cut family is sufficient; no witness exists");
  if (slack < 0) slack = instance.k() - 1;
  if (!d.negligible && !d.c2_holds) return witness_c2(instance, find_minimal_u(instance), slack);
  if (!d.negligible) return witness_c1(instance, d.c1_pair->first, d.c1_pair->second, slack);
  return witness_lw(instance, d.l_w_pair->first, d.l_w_pair->second, slack);
}

std::vector<Witness> witness_candidates(const MixingInstance& instance) {
  HullDiagnosis d = diagnose(instance);
  if (d.sufficient) throw PreconditionFailed("the cut family is sufficient; no witness exists");
  const int n = instance.n(), k = instance.k();
  std::vector<std::vector<int>> supports;
  if (!d.negligible && !d.c2_holds) {
    std::vector<int> i_bar;
    for (int i = 0; i < n; ++i) {
      if (in_i_bar(instance, i)) i_bar.push_back(i);
    }
    if (i_bar.size() > 16) throw GroundSetTooLarge("I_bar has more than 16 elements");
    supports.push_back(find_minimal_u(instance));
    for (std::uint32_t mask = 1; mask < (1u << i_bar.size()); ++mask) {
      std::vector<int> u;
      for (std::size_t t = 0; t < i_bar.size(); ++t) {
        if (mask >> t & 1u) u.push_back(i_bar[t]);
      }
      if (u.size() < 2 || max_sum(instance, u) <= instance.epsilon) continue;
      bool minimal = true;
      for (std::size_t t = 0; t < u.size() && minimal; ++t) {
        std::vector<int> smaller = u;
        smaller.erase(smaller.begin() + t);
        minimal = max_sum(instance, smaller) <= instance.epsilon;
      }
      if (minimal && u != supports.front()) supports.push_back(u);
    }
  } else if (!d.negligible) {
    supports.push_back({d.c1_pair->first, d.c1_pair->second});
    for (int p = 0; p < n; ++p) {
      if (in_i_bar(instance, p)) continue;
      for (int q = 0; q < n; ++q) {
        if (!in_i_bar(instance, q)) continue;
        bool above = false;
        for (int j = 0; j < k; ++j) above = above || instance.w(q, j) > instance.w(p, j);
        if (above && std::vector<int>{p, q} != supports.front()) supports.push_back({p, q});
      }
    }
  } else {
    supports.push_back({d.l_w_pair->first, d.l_w_pair->second});
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (in_i_bar(instance, p) || in_i_bar(instance, q)) continue;
        Rational pair_min = 0;
        for (int j = 0; j < k; ++j) pair_min += std::min(instance.w(p, j), instance.w(q, j));
        if (pair_min == d.l_w.value && std::vector<int>{p, q} != supports.front()) {
          supports.push_back({p, q});
        }
      }
    }
  }
  std::vector<Witness> out;
  for (const auto& support : supports) {
    for (int t = 0; t < k; ++t) {
      const int slack = (k - 1 + t) % k;
      if (!d.negligible && !d.c2_holds) {
        out.push_back(witness_c2(instance, support, slack));
      } else if (!d.negligible) {
        out.push_back(witness_c1(instance, support[0], support[1], slack));
      } else {
        out.push_back(witness_lw(instance, support[0], support[1], slack));
      }
    }
  }
  return out;
}

}  // namespace mixcut
