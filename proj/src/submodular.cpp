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

#include "mixcut/submodular.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "mixcut/errors.hpp"

namespace mixcut {
namespace {

constexpr std::size_t kMemoLimit = 1u << 20;

void check_unit_box(const RationalVector& z) {
  for (const auto& v : z) {
    if (v < 0 || v > 1) throw DomainError("z entry " + to_string(v) + " outside [0,1]");
  }
}

}  // namespace

Subset subset_from_mask(int n, std::uint64_t mask) {
  Subset s(n, false);
  for (int i = 0; i < n && i < 64; ++i) s[i] = (mask >> i) & 1u;
  return s;
}

struct SetFunctionOracle::State {
  int n;
  Fn fn;
  std::mutex mu;
  std::unordered_map<Subset, Rational> memo;
};

SetFunctionOracle::SetFunctionOracle(int ground_size, Fn fn)
    : n_(ground_size), state_(std::make_shared<State>()) {
  state_->n = ground_size;
  state_->fn = std::move(fn);
}

Rational SetFunctionOracle::operator()(const Subset& s) const {
  if (static_cast<int>(s.size()) != state_->n) {
    throw DimensionMismatch("subset size differs from ground set size");
  }
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(s);
    if (it != state_->memo.end()) return it->second;
  }
  Rational v = state_->fn(s);
  std::lock_guard<std::mutex> lock(state_->mu);
  if (state_->memo.size() >= kMemoLimit) state_->memo.clear();
  state_->memo.emplace(s, v);
  return v;
}

Rational SetFunctionOracle::empty_value() const {
  return (*this)(Subset(state_->n, false));
}

std::optional<SubmodularityViolation> find_submodularity_violation(
    const SetFunctionOracle& f, int bound) {
  const int n = f.ground_size();
  if (n > bound) {
    throw GroundSetTooLarge("ground set of size " + std::to_string(n) +
                            " exceeds " + std::to_string(bound));
  }
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<Rational> value(full);
  for (std::uint64_t m = 0; m < full; ++m) value[m] = f(subset_from_mask(n, m));
  for (std::uint64_t m = 0; m < full; ++m) {
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) continue;
      for (int j = i + 1; j < n; ++j) {
        if (m >> j & 1) continue;
        std::uint64_t mi = m | (std::uint64_t{1} << i);
        std::uint64_t mj = m | (std::uint64_t{1} << j);
        Rational alone = value[mi] - value[m];
        Rational with_j = value[mi | mj] - value[mj];
        if (alone < with_j) {
          return SubmodularityViolation{subset_from_mask(n, m), i, j, alone, with_j};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_submodular(const SetFunctionOracle& f, int bound) {
  return !find_submodularity_violation(f, bound).has_value();
}

Rational PolymatroidVertex::value(const RationalVector& z) const {
  return dot(pi, z) + empty_value;
}

PolymatroidVertex greedy_vertex(const SetFunctionOracle& f,
                                const RationalVector& objective) {
  const int n = f.ground_size();
  if (static_cast<int>(objective.size()) != n) {
    throw DimensionMismatch("objective length differs from ground set size");
  }
  PolymatroidVertex v;
  v.order.resize(n);
  std::iota(v.order.begin(), v.order.end(), 0);
  std::stable_sort(v.order.begin(), v.order.end(),
                   [&](int a, int b) { return objective[a] > objective[b]; });
  v.pi.assign(n, Rational(0));
  Subset prefix(n, false);
  v.empty_value = f(prefix);
  Rational previous = v.empty_value;
  for (int t = 0; t < n; ++t) {
    prefix[v.order[t]] = true;
    Rational current = f(prefix);
    v.pi[v.order[t]] = current - previous;
    previous = current;
  }
  return v;
}

std::optional<LinearCut> separate_polymatroid(const SetFunctionOracle& f,
                                              const Rational& y_bar,
                                              const RationalVector& z_bar) {
  if (static_cast<int>(z_bar.size()) != f.ground_size()) {
    throw DimensionMismatch("z length differs from ground set size");
  }
  check_unit_box(z_bar);
  PolymatroidVertex v = greedy_vertex(f, z_bar);
  if (y_bar >= v.value(z_bar)) return std::nullopt;
  LinearCut cut;
  cut.alpha = {Rational(1)};
  cut.beta.reserve(v.pi.size());
  for (const auto& p : v.pi) cut.beta.push_back(-p);
  cut.gamma = v.empty_value;
  cut.kind = CutKind::kPolymatroid;
  return cut;
}

SetFunctionOracle weighted_combination(const std::vector<SetFunctionOracle>& fs,
                                       const RationalVector& weights) {
  if (fs.size() != weights.size()) {
    throw DimensionMismatch("number of weights differs from number of oracles");
  }
  if (fs.empty()) throw DimensionMismatch("no oracles to combine");
  const int n = fs.front().ground_size();
  for (const auto& f : fs) {
    if (f.ground_size() != n) throw DimensionMismatch("oracles differ in ground size");
  }
  return SetFunctionOracle(n, [fs, weights](const Subset& s) {
    Rational total = 0;
    for (std::size_t r = 0; r < fs.size(); ++r) {
      if (weights[r] != 0) total += weights[r] * fs[r](s);
    }
    return total;
  });
}

}  // namespace mixcut
