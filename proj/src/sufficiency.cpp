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

#include <algorithm>

#include <json.hpp>

#include "mixcut/aggregated.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/mixing.hpp"
#include "mixcut/sampling.hpp"

namespace mixcut {
namespace {

constexpr int kSufficiencyBound = 8;

// Largest right-hand side the cuts with alpha = e_j (or all ones) impose at z.
Rational required(const std::vector<const LinearCut*>& cuts, const RationalVector& z,
                  Rational floor) {
  for (const LinearCut* c : cuts) floor = std::max(floor, c->gamma - dot(c->beta, z));
  return floor;
}

bool satisfies_all(const std::vector<LinearCut>& cuts, const Point& pt) {
  for (const auto& y : pt.y) {
    if (y < 0) return false;
  }
  for (const auto& z : pt.z) {
    if (z < 0 || z > 1) return false;
  }
  for (const auto& c : cuts) {
    if (!c.satisfied_by(pt.y, pt.z)) return false;
  }
  return true;
}

Rational grid_value(Rng& rng) {
  static const Rational kGrid[] = {Rational(0),    Rational(1),    Rational(1, 2),
                                   Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                   Rational(3, 4)};
  if (rng.coin(4)) return rng.unit_fraction(6);
  return kGrid[rng.below(7)];
}

nlohmann::json point_json(const Point& p) {
  nlohmann::json y = nlohmann::json::array(), z = nlohmann::json::array();
  for (const auto& v : p.y) y.push_back(to_string(v));
  for (const auto& v : p.z) z.push_back(to_string(v));
  return {{"y", y}, {"z", z}};
}

}  // namespace

std::vector<LinearCut> sufficient_cut_family(const MixingInstance& instance) {
  std::vector<LinearCut> cuts;
  for (int j = 0; j < instance.k(); ++j) {
    for (auto& c : enumerate_mixing_cuts(instance, j, true)) cuts.push_back(std::move(c));
  }
  HullDiagnosis d = diagnose(instance);
  std::vector<int> ground;
  for (int i = 0; i < instance.n(); ++i) {
    if (!std::binary_search(d.i_bar.begin(), d.i_bar.end(), i)) ground.push_back(i);
  }
  for_each_sequence(ground, static_cast<int>(ground.size()), [&](const Sequence& theta) {
    LinearCut c = aggregated_cut(instance, theta);
    if (c.kind == CutKind::kAMixStar) cuts.push_back(std::move(c));
  });
  cuts.push_back(linking_cut(instance));
  return cuts;
}

std::vector<LinearCut> full_cut_family(const MixingInstance& instance) {
  if (instance.n() > kSufficiencyBound) {
    throw GroundSetTooLarge("full cut family limited to n <= 8");
  }
  std::vector<LinearCut> cuts;
  for (int j = 0; j < instance.k(); ++j) {
    for (auto& c : enumerate_mixing_cuts(instance, j, false)) cuts.push_back(std::move(c));
  }
  std::vector<int> ground(instance.n());
  for (int i = 0; i < instance.n(); ++i) ground[i] = i;
  for_each_sequence(ground, instance.n(), [&](const Sequence& theta) {
    cuts.push_back(aggregated_cut(instance, theta));
  });
  cuts.push_back(linking_cut(instance));
  return cuts;
}

WitnessSearch search_witness(const MixingInstance& instance, const HullOracle& hull,
                             const std::vector<LinearCut>& cuts, int grid_denominator) {
  const int n = instance.n(), k = instance.k();
  std::vector<std::vector<const LinearCut*>> per_column(k);
  std::vector<const LinearCut*> aggregate;
  for (const auto& c : cuts) {
    int nonzero = 0, column = -1;
    for (int j = 0; j < k; ++j) {
      if (c.alpha[j] != 0) {
        ++nonzero;
        column = j;
      }
    }
    bool ones = true;
    for (const auto& a : c.alpha) ones = ones && a == 1;
    if (nonzero == 1 && c.alpha[column] == 1) {
      per_column[column].push_back(&c);
    } else if (ones) {
      aggregate.push_back(&c);
    } else {
      throw PreconditionFailed("cut with alpha outside {e_j, 1}: " + format_cut(c));
    }
  }

  WitnessSearch out;
  auto accept = [&](const Witness& w) {
    ++out.candidates_tried;
    MembershipResult m = hull.query(w.point);
    if (m.inside) return false;
    out.witness = w;
    out.membership = std::move(m);
    return true;
  };

  std::vector<Witness> candidates = witness_candidates(instance);
  for (const auto& w : candidates) {
    if (accept(w)) return out;
  }

  std::vector<Rational> grid;
  for (int d = 1; d <= grid_denominator; ++d) {
    for (int a = 0; a <= d; ++a) grid.emplace_back(Rational(a, d));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::vector<int>> supports;
  for (const auto& w : candidates) {
    if (std::find(supports.begin(), supports.end(), w.support) == supports.end()) {
      supports.push_back(w.support);
    }
  }
  constexpr std::size_t kGridLimit = 1 << 14;
  for (const auto& support : supports) {
    const std::size_t s = support.size();
    std::size_t total = 1;
    bool full = true;
    for (std::size_t t = 0; t < s && full; ++t) {
      total *= grid.size();
      full = total <= kGridLimit;
    }
    // Too many combinations: walk the diagonal only.
    const std::size_t count = full ? total : grid.size();
    for (std::size_t code = 0; code < count; ++code) {
      RationalVector z(n, Rational(1));
      std::size_t rest = code;
      for (std::size_t t = 0; t < s; ++t) {
        z[support[t]] = grid[full ? rest % grid.size() : code];
        if (full) rest /= grid.size();
      }
      RationalVector a(k);
      Rational lower_sum = 0;
      for (int j = 0; j < k; ++j) {
        a[j] = required(per_column[j], z, Rational(0));
        lower_sum += a[j];
      }
      const Rational b = required(aggregate, z, lower_sum);
      for (int t = 0; t < k; ++t) {
        Witness w{candidates.front().reason, support, Point{a, z}, t};
        w.point.y[t] += b - lower_sum;
        if (accept(w)) {
          out.from_grid = true;
          return out;
        }
        if (b == lower_sum) break;
      }
    }
  }
  out.membership = hull.query(candidates.front().point);
  return out;
}

SufficiencyReport check_sufficiency(const MixingInstance& instance,
                                    const SufficiencyOptions& options) {
  if (instance.n() > kSufficiencyBound) {
    throw GroundSetTooLarge("sufficiency check limited to n <= 8");
  }
  SufficiencyReport report;
  report.diagnosis = diagnose(instance);
  HullOracle hull(v_representation(instance).complemented());

  if (!report.diagnosis.sufficient) {
    std::vector<LinearCut> cuts = full_cut_family(instance);
    report.cuts_in_family = static_cast<int>(cuts.size());
    WitnessSearch found = search_witness(instance, hull, cuts);
    report.candidates_tried = found.candidates_tried;
    report.witness_from_grid = found.from_grid;
    Witness w = found.witness ? *found.witness : find_witness(instance);
    const MembershipResult& m = found.membership;
    report.witness_satisfies_cuts = satisfies_all(cuts, w.point);
    report.witness_outside = !m.inside;
    if (m.separator) {
      report.separator = canonicalize(*m.separator);
      report.separator->kind = CutKind::kSeparator;
    }
    const bool certified = report.separator &&
                           cut_valid_on(hull.vrep(), *report.separator) &&
                           !report.separator->satisfied_by(w.point.y, w.point.z);
    report.witness = std::move(w);
    report.passed = report.witness_satisfies_cuts && report.witness_outside && certified;
    return report;
  }

  std::vector<LinearCut> cuts = sufficient_cut_family(instance);
  report.cuts_in_family = static_cast<int>(cuts.size());
  std::vector<std::vector<const LinearCut*>> per_column(instance.k());
  std::vector<const LinearCut*> aggregate;
  for (const auto& c : cuts) {
    if (c.kind == CutKind::kMixStar || c.kind == CutKind::kMix ||
        c.kind == CutKind::kBoundLower) {
      for (int j = 0; j < instance.k(); ++j) {
        if (c.alpha[j] != 0) per_column[j].push_back(&c);
      }
    } else {
      aggregate.push_back(&c);
    }
  }

  Rng rng(options.seed);
  const auto& points = hull.vrep().points;
  const int n = instance.n(), k = instance.k();
  for (int s = 0; s < options.samples; ++s) {
    Point pt;
    if (s % 10 == 9) {
      const auto& a = points[rng.below(points.size())];
      const auto& b = points[rng.below(points.size())];
      pt.y.resize(k);
      pt.z.resize(n);
      for (int j = 0; j < k; ++j) pt.y[j] = (a.y[j] + b.y[j]) / 2;
      for (int i = 0; i < n; ++i) pt.z[i] = (a.z[i] + b.z[i]) / 2;
    } else {
      pt.z.resize(n);
      for (auto& v : pt.z) v = grid_value(rng);
      pt.y.resize(k);
      Rational total = 0;
      for (int j = 0; j < k; ++j) {
        pt.y[j] = required(per_column[j], pt.z, Rational(0));
        total += pt.y[j];
      }
      const Rational deficit = required(aggregate, pt.z, total) - total;
      if (deficit > 0) {
        RationalVector share(k);
        Rational share_total = 0;
        for (auto& v : share) {
          v = rng.range(0, 3);
          share_total += v;
        }
        if (share_total == 0) {
          share.back() = 1;
          share_total = 1;
        }
        for (int j = 0; j < k; ++j) pt.y[j] += deficit * share[j] / share_total;
      }
      if (rng.coin(4)) pt.y[rng.below(k)] += rng.unit_fraction(4);
    }
    if (!satisfies_all(cuts, pt)) {
      throw InternalInvariant("sampled point violates the cut family");
    }
    ++report.samples_checked;
    if (!hull.query(pt).inside) {
      if (!report.first_outside) report.first_outside = pt;
      ++report.samples_outside;
    }
  }
  report.passed = report.samples_outside == 0;
  return report;
}

std::string sufficiency_json(const MixingInstance& instance, const SufficiencyReport& r) {
  nlohmann::json doc = nlohmann::json::parse(diagnosis_json(instance, r.diagnosis));
  nlohmann::json out;
  out["diagnosis"] = doc;
  out["cuts_in_family"] = r.cuts_in_family;
  if (r.diagnosis.sufficient) {
    out["branch"] = "sufficient";
    out["samples_checked"] = r.samples_checked;
    out["samples_outside"] = r.samples_outside;
    if (r.first_outside) out["first_outside"] = point_json(*r.first_outside);
  } else {
    out["branch"] = "witness";
    if (r.witness) {
      std::vector<int> support;
      for (int i : r.witness->support) support.push_back(i + 1);
      out["witness"] = {{"reason", reason_name(r.witness->reason)},
                        {"support", support},
                        {"slack_column", r.witness->slack + 1},
                        {"point", point_json(r.witness->point)}};
    }
    out["candidates_tried"] = r.candidates_tried;
    out["witness_from_grid"] = r.witness_from_grid;
    out["witness_satisfies_cuts"] = r.witness_satisfies_cuts;
    out["witness_outside"] = r.witness_outside;
    if (r.separator) out["separator"] = format_cut(*r.separator);
  }
  out["passed"] = r.passed;
  return out.dump(2) + "\n";
}

}  // namespace mixcut
