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

#include "mixcut/twosided.hpp"

#include <algorithm>

#include <json.hpp>

#include "mixcut/aggregated.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/mixing.hpp"

namespace mixcut {
namespace {

constexpr int kDescriptionBound = 6;

RationalVector json_vector(const nlohmann::json& v, const char* field) {
  if (!v.is_array()) throw ParseError(std::string("field '") + field + "': expected an array");
  RationalVector out;
  for (const auto& e : v) {
    if (e.is_string()) {
      out.push_back(parse_rational(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      out.push_back(Rational(e.get<long long>()));
    } else {
      throw ParseError(std::string("field '") + field + "': expected number strings");
    }
  }
  return out;
}

// Coefficients of a single-column mixing subsequence, trailing value 0.
void add_sequence(const RationalVector& values, const Sequence& seq, RationalVector& beta) {
  for (std::size_t s = 0; s < seq.size(); ++s) {
    Rational next = s + 1 < seq.size() ? values[seq[s + 1]] : Rational(0);
    beta[seq[s]] += values[seq[s]] - next;
  }
}

Sequence column_subsequence(const RationalVector& values, const Sequence& theta) {
  Sequence out;
  Rational running = 0;
  for (auto it = theta.rbegin(); it != theta.rend(); ++it) {
    if (values[*it] >= running) {
      out.insert(out.begin(), *it);
      running = values[*it];
    }
  }
  return out;
}

}  // namespace

TwoSidedData make_two_sided(RationalVector w, RationalVector v, Rational u_a) {
  if (w.empty()) throw ValidationError("two-sided data has no scenarios");
  if (w.size() != v.size()) throw ValidationError("w and v differ in length");
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (v[i] < 0) {
      throw ConditionViolated("v_" + std::to_string(i + 1) + " < 0", idx);
    }
    if (w[i] < v[i]) {
      throw ConditionViolated("w_" + std::to_string(i + 1) + " < v_" + std::to_string(i + 1), idx);
    }
    if (u_a < w[i]) {
      throw ConditionViolated("u_a < w_" + std::to_string(i + 1), idx);
    }
  }
  return TwoSidedData{std::move(w), std::move(v), std::move(u_a)};
}

TwoSidedData parse_two_sided(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("w") || !doc.contains("v") || !doc.contains("u_a")) {
    throw ParseError("two-sided data needs 'w', 'v' and 'u_a'");
  }
  RationalVector w = json_vector(doc["w"], "w");
  RationalVector v = json_vector(doc["v"], "v");
  const auto& ua = doc["u_a"];
  Rational u_a;
  if (ua.is_string()) {
    u_a = parse_rational(ua.get<std::string>());
  } else if (ua.is_number_integer()) {
    u_a = ua.get<long long>();
  } else {
    throw ParseError("field 'u_a': expected a number string");
  }
  if (doc.contains("n") &&
      (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(w.size()))) {
    throw ValidationError("n does not match the length of w");
  }
  return make_two_sided(std::move(w), std::move(v), std::move(u_a));
}

TwoSidedData load_two_sided(const std::string& path) {
  return parse_two_sided(read_file(path));
}

std::string serialize_two_sided(const TwoSidedData& data) {
  nlohmann::json doc;
  doc["n"] = data.n();
  nlohmann::json w = nlohmann::json::array(), v = nlohmann::json::array();
  for (const auto& x : data.w) w.push_back(to_string(x));
  for (const auto& x : data.v) v.push_back(to_string(x));
  doc["w"] = w;
  doc["v"] = v;
  doc["u_a"] = to_string(data.u_a);
  return doc.dump(2) + "\n";
}

MixingInstance to_mixing(const TwoSidedData& data) {
  RationalMatrix weights(data.n());
  for (int i = 0; i < data.n(); ++i) weights[i] = {data.w[i], data.v[i] + data.u_a};
  MixingInstance inst = make_instance(std::move(weights), {}, data.u_a);

  HullDiagnosis d = diagnose(inst);
  std::vector<int> zero_rows;
  for (int i = 0; i < data.n(); ++i) {
    if (data.w[i] == 0 && data.v[i] == 0) zero_rows.push_back(i);
  }
  if (d.i_bar != zero_rows) throw InternalInvariant("I_bar differs from the zero scenarios");
  if (!(data.u_a <= d.l_w)) throw InternalInvariant("L_W(u_a) < u_a");
  if (!d.g_submodular) throw InternalInvariant("linking function is not submodular");
  return inst;
}

GeneralizedCutPair generalized_cut(const TwoSidedData& data, const Sequence& theta) {
  MixingInstance inst = to_mixing(data);
  GeneralizedCutPair out;
  out.primed = aggregated_cut(inst, theta);
  if (!(data.u_a <= l_theta(inst, theta))) {
    throw InternalInvariant("L_{W,theta} < u_a for a two-sided instance");
  }

  const Sequence red = column_subsequence(data.w, theta);
  const Sequence green = column_subsequence(data.v, theta);
  out.original.alpha = {Rational(2), Rational(0)};
  out.original.beta.assign(data.n(), Rational(0));
  add_sequence(data.w, red, out.original.beta);
  add_sequence(data.v, green, out.original.beta);
  out.original.gamma = data.w[red.front()] + data.v[green.front()];
  out.original.kind = out.primed.kind;

  // y_1 + y_2 = 2 y_c + u_a turns the primed cut into the original one.
  LinearCut substituted;
  substituted.alpha = {out.primed.alpha[0] + out.primed.alpha[1],
                       out.primed.alpha[0] - out.primed.alpha[1]};
  substituted.beta = out.primed.beta;
  substituted.gamma = out.primed.gamma - out.primed.alpha[1] * data.u_a;
  if (!same_inequality(substituted, out.original)) {
    throw InternalInvariant("generalized cut differs from the aggregated cut");
  }
  return out;
}

std::vector<LinearCut> band_cuts(const TwoSidedData& data) {
  LinearCut upper, lower;
  upper.alpha = {Rational(-1), Rational(1)};
  upper.beta.assign(data.n(), Rational(0));
  upper.gamma = -data.u_a;
  upper.kind = CutKind::kBoundUpper;
  lower.alpha = {Rational(1), Rational(-1)};
  lower.beta.assign(data.n(), Rational(0));
  lower.gamma = -data.u_a;
  lower.kind = CutKind::kBoundLower;
  return {upper, lower};
}

TwoSidedHullReport hull_with_bounds(const TwoSidedData& data) {
  if (data.n() > kTwoSidedHullBound) throw GroundSetTooLarge("two-sided hull limited to n <= 16");
  MixingInstance inst = to_mixing(data);
  TwoSidedHullReport report;
  report.diagnosis = diagnose(inst);
  VRepresentation m = v_representation(inst).complemented();
  report.extreme_points = static_cast<int>(m.points.size());

  report.band_satisfied = true;
  report.band_vertices_integral = true;
  report.clipped.space = Space::kM;
  report.clipped.n = m.n;
  report.clipped.k = 2;
  for (const auto& p : m.points) {
    const Rational gap = p.y[0] - p.y[1];
    if (gap > data.u_a || gap < -data.u_a) report.band_satisfied = false;
    report.clipped.points.push_back(p);
    // Moving along e_1 until y_1 - y_2 = u_a, and along e_2 until -u_a.
    VPoint up = p, across = p;
    up.y[0] += data.u_a - gap;
    across.y[1] += data.u_a + gap;
    for (const VPoint* q : {&up, &across}) {
      for (const auto& z : q->z) {
        if (z != 0 && z != 1) report.band_vertices_integral = false;
      }
      report.clipped.points.push_back(*q);
      ++report.band_vertices;
    }
  }
  report.clipped.rays = {{Rational(1), Rational(1)}};

  if (data.n() <= kDescriptionBound) {
    for (int j = 0; j < 2; ++j) {
      for (auto& c : enumerate_mixing_cuts(inst, j, true)) report.description.push_back(c);
    }
    std::vector<int> ground;
    for (int i = 0; i < data.n(); ++i) {
      if (!std::binary_search(report.diagnosis.i_bar.begin(), report.diagnosis.i_bar.end(), i)) {
        ground.push_back(i);
      }
    }
    for_each_sequence(ground, static_cast<int>(ground.size()), [&](const Sequence& theta) {
      LinearCut c = aggregated_cut(inst, theta);
      if (c.kind == CutKind::kAMixStar) report.description.push_back(c);
    });
    report.description.push_back(linking_cut(inst));
    for (auto& c : band_cuts(data)) report.description.push_back(c);
  }
  return report;
}

}  // namespace mixcut
