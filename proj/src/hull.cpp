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

#include "mixcut/hull.hpp"

#include <json.hpp>

#include "mixcut/errors.hpp"
#include "mixcut/exact_lp.hpp"

namespace mixcut {

bool operator<=(const Rational& a, const ExtendedRational& b) {
  return b.infinite || a <= b.value;
}

HullDiagnosis diagnose(const MixingInstance& instance) {
  if (!instance.lower_is_zero()) {
    throw LowerBoundsNotReduced("diagnosis needs l = 0; reduce the instance first");
  }
  const int n = instance.n(), k = instance.k();
  HullDiagnosis d;
  std::vector<int> outside;
  for (int i = 0; i < n; ++i) {
    (instance.row_sum(i) <= instance.epsilon ? d.i_bar : outside).push_back(i);
  }

  for (int p : outside) {
    for (int q : d.i_bar) {
      for (int j = 0; j < k && !d.c1_pair; ++j) {
        if (instance.w(q, j) > instance.w(p, j)) d.c1_pair = {p, q};
      }
      if (d.c1_pair) break;
    }
    if (d.c1_pair) break;
  }
  d.c1_holds = !d.c1_pair.has_value();

  Rational small_total = 0;
  for (int j = 0; j < k && !d.i_bar.empty(); ++j) {
    Rational m = 0;
    for (int i : d.i_bar) m = std::max(m, instance.w(i, j));
    small_total += m;
  }
  d.c2_holds = small_total <= instance.epsilon;
  d.negligible = d.i_bar.empty() || (d.c1_holds && d.c2_holds);

  if (outside.empty()) {
    d.l_w = ExtendedRational::inf();
  } else if (outside.size() == 1) {
    d.l_w = {false, instance.row_sum(outside[0])};
  } else {
    for (std::size_t a = 0; a < outside.size(); ++a) {
      for (std::size_t b = a + 1; b < outside.size(); ++b) {
        Rational s = 0;
        for (int j = 0; j < k; ++j) {
          s += std::min(instance.w(outside[a], j), instance.w(outside[b], j));
        }
        if (!d.l_w_pair || s < d.l_w.value) {
          d.l_w = {false, s};
          d.l_w_pair = {outside[a], outside[b]};
        }
      }
    }
  }
  d.eps_le_lw = instance.epsilon <= d.l_w;
  d.g_submodular = d.negligible && d.eps_le_lw;
  d.sufficient = d.g_submodular;
  return d;
}

std::string format_index_set(const std::vector<int>& indices) {
  std::string out = "{";
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(indices[t] + 1);
  }
  return out + "}";
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string insufficiency_reason(const HullDiagnosis& d) {
  if (!d.negligible) {
    return !d.c2_holds ? "I_bar not negligible: C2 fails" : "I_bar not negligible: C1 fails";
  }
  return "eps > L_W(eps)";
}

}  // namespace

std::string format_diagnosis(const MixingInstance& instance, const HullDiagnosis& d) {
  std::string out;
  out += "eps=" + to_string(instance.epsilon) + "\n";
  out += "I_bar=" + format_index_set(d.i_bar) + "\n";
  out += "C1: " + std::string(d.c1_holds ? "holds" : "fails");
  if (d.c1_pair) {
    out += " (p=" + std::to_string(d.c1_pair->first + 1) +
           ", q=" + std::to_string(d.c1_pair->second + 1) + ")";
  }
  out += "\n";
  out += "C2: " + std::string(d.c2_holds ? "holds" : "fails") + "\n";
  out += "negligible: " + yes_no(d.negligible) + "\n";
  out += "L_W(eps)=" + d.l_w.str() + "\n";
  out += "g_submodular: " + yes_no(d.g_submodular) + "\n";
  if (d.sufficient) {
    out += "sufficient: yes; L_W(eps)=" + d.l_w.str() + "; I_bar=" +
           format_index_set(d.i_bar) + "\n";
  } else {
    out += "sufficient: no (" + insufficiency_reason(d) + ")\n";
  }
  return out;
}

std::string diagnosis_json(const MixingInstance& instance, const HullDiagnosis& d) {
  nlohmann::json doc;
  std::vector<int> one_based;
  for (int i : d.i_bar) one_based.push_back(i + 1);
  doc["epsilon"] = to_string(instance.epsilon);
  doc["i_bar"] = one_based;
  doc["c1_holds"] = d.c1_holds;
  doc["c2_holds"] = d.c2_holds;
  doc["negligible"] = d.negligible;
  doc["l_w"] = d.l_w.str();
  doc["eps_le_lw"] = d.eps_le_lw;
  doc["g_submodular"] = d.g_submodular;
  doc["sufficient"] = d.sufficient;
  if (d.c1_pair) doc["c1_pair"] = {d.c1_pair->first + 1, d.c1_pair->second + 1};
  if (d.l_w_pair) doc["l_w_pair"] = {d.l_w_pair->first + 1, d.l_w_pair->second + 1};
  return doc.dump(2) + "\n";
}

HullOracle::HullOracle(VRepresentation vrep) : vrep_(std::move(vrep)) {
  const int k = vrep_.k, n = vrep_.n;
  const int rows = k + n + 1;
  const std::size_t cols = vrep_.points.size() + vrep_.rays.size();
  columns_.assign(rows, RationalVector(cols, Rational(0)));
  std::size_t c = 0;
  for (const auto& p : vrep_.points) {
    for (int j = 0; j < k; ++j) columns_[j][c] = p.y[j];
    for (int i = 0; i < n; ++i) columns_[k + i][c] = p.z[i];
    columns_[k + n][c] = 1;
    ++c;
  }
  for (const auto& r : vrep_.rays) {
    for (int j = 0; j < k; ++j) columns_[j][c] = r[j];
    ++c;
  }
}

MembershipResult HullOracle::query(const Point& point) const {
  const int k = vrep_.k, n = vrep_.n;
  if (static_cast<int>(point.y.size()) != k || static_cast<int>(point.z.size()) != n) {
    throw DimensionMismatch("point dimension differs from the V-representation");
  }
  RationalVector b(k + n + 1);
  for (int j = 0; j < k; ++j) b[j] = point.y[j];
  for (int i = 0; i < n; ++i) b[k + i] = point.z[i];
  b[k + n] = 1;

  FeasibilityResult lp = solve_feasibility(columns_, b);
  // Both certificates are rechecked against the columns before use.
  const std::size_t cols = lp.feasible ? lp.x.size() : columns_.front().size();
  if (lp.feasible) {
    for (std::size_t r = 0; r < columns_.size(); ++r) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (lp.x[c] < 0) throw InternalInvariant("negative weight in membership certificate");
        lhs += columns_[r][c] * lp.x[c];
      }
      if (lhs != b[r]) throw InternalInvariant("membership certificate does not reproduce the point");
    }
  } else {
    for (std::size_t c = 0; c < cols; ++c) {
      Rational lhs = 0;
      for (std::size_t r = 0; r < columns_.size(); ++r) lhs += lp.farkas[r] * columns_[r][c];
      if (lhs < 0) throw InternalInvariant("Farkas certificate negative on a generator");
    }
    if (dot(lp.farkas, b) >= 0) throw InternalInvariant("Farkas certificate does not cut the point");
  }
  MembershipResult out;
  out.inside = lp.feasible;
  if (lp.feasible) {
    const std::size_t np = vrep_.points.size();
    out.lambda.assign(lp.x.begin(), lp.x.begin() + np);
    out.mu.assign(lp.x.begin() + np, lp.x.end());
    return out;
  }
  // f . (y, z, 1) >= 0 on points, f . (r, 0, 0) >= 0 on rays, < 0 at query.
  LinearCut sep;
  sep.alpha.assign(lp.farkas.begin(), lp.farkas.begin() + k);
  sep.beta.assign(lp.farkas.begin() + k, lp.farkas.begin() + k + n);
  sep.gamma = -lp.farkas[k + n];
  sep.kind = CutKind::kSeparator;
  out.separator = sep;
  return out;
}

MembershipResult membership(const VRepresentation& vrep, const Point& point) {
  return HullOracle(vrep).query(point);
}

}  // namespace mixcut
