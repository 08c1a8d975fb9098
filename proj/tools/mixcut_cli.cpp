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

// Command-line front end. Exit codes: 0 ok or sufficient, 1 unreadable or
// malformed instance, 2 validation or precondition failure, 3 insufficient
// (diagnose), 4 verification failed.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixcut/aggregated.hpp"
#include "mixcut/counterexample.hpp"
#include "mixcut/cut.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/instance.hpp"
#include "mixcut/mixing.hpp"
#include "mixcut/twosided.hpp"
#include "mixcut/vrep.hpp"

namespace mixcut {
namespace {

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kInvalid = 2;
constexpr int kInsufficient = 3;
constexpr int kVerifyFailed = 4;

nlohmann::json vector_json(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json point_json(const Point& p) {
  return {{"y", vector_json(p.y)}, {"z", vector_json(p.z)}};
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i + 1);
  return out;
}

int cmd_diagnose(const std::string& path, bool json) {
  MixingInstance inst = reduce_lower_bounds(load_instance(path)).instance;
  HullDiagnosis d = diagnose(inst);
  std::cout << (json ? diagnosis_json(inst, d) : format_diagnosis(inst, d));
  return d.sufficient ? kOk : kInsufficient;
}

int cmd_separate(const std::string& instance_path, const std::string& point_path,
                 const std::string& families) {
  MixingInstance original = load_instance(instance_path);
  Point point;
  try {
    point = load_point(point_path);
  } catch (const ParseError& e) {
    // A point that does not parse is a bad argument, not a bad instance.
    throw ValidationError(e.what());
  }
  check_point(original, point);
  bool mix = false, amix = false;
  std::string rest = families;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string name = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    if (name == "mix") {
      mix = true;
    } else if (name == "amix") {
      amix = true;
    } else {
      throw ValidationError("unknown family '" + name + "'");
    }
  }

  ReducedInstance reduced = reduce_lower_bounds(original);
  Point shifted = point;
  for (int j = 0; j < original.k(); ++j) shifted.y[j] -= reduced.shift[j];

  std::vector<std::pair<Rational, LinearCut>> found;
  if (mix) {
    for (const auto& s : separate_mixing(original, point)) found.emplace_back(s.violation, s.cut);
  }
  if (amix) {
    Rational total = 0;
    for (const auto& y : shifted.y) total += y;
    // The aggregated family assumes the linking constraint holds.
    if (total >= reduced.instance.epsilon) {
      if (auto s = separate_aggregated(reduced.instance, shifted)) {
        found.emplace_back(s->violation, lift_cut(s->cut, reduced.shift));
      }
    } else {
      LinearCut link = lift_cut(linking_cut(reduced.instance), reduced.shift);
      found.emplace_back(link.violation(point.y, point.z), link);
    }
  }
  std::vector<std::pair<Rational, std::string>> lines;
  for (const auto& [violation, cut] : found) {
    LinearCut c = canonicalize(cut);
    c.kind = cut.kind;
    lines.emplace_back(violation, format_cut(c));
  }
  std::stable_sort(lines.begin(), lines.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const auto& a, const auto& b) { return a.second == b.second; }),
              lines.end());
  for (const auto& line : lines) std::cout << line.second << "\n";
  return kOk;
}

int verify_witness(const MixingInstance& inst) {
  if (diagnose(inst).sufficient) {
    throw PreconditionFailed("the cut family is sufficient; no witness exists");
  }
  HullOracle hull(v_representation(inst).complemented());
  std::vector<LinearCut> cuts = full_cut_family(inst);
  WitnessSearch found = search_witness(inst, hull, cuts);
  Witness w = found.witness ? *found.witness : find_witness(inst);

  Rational total = 0;
  bool bounds = true;
  for (const auto& y : w.point.y) {
    total += y;
    bounds = bounds && y >= 0;
  }
  for (const auto& z : w.point.z) bounds = bounds && z >= 0 && z <= 1;
  bool mix_ok = true, amix_ok = true;
  for (const auto& c : cuts) {
    const bool ok = c.satisfied_by(w.point.y, w.point.z);
    if (c.kind == CutKind::kAMix || c.kind == CutKind::kAMixStar) {
      amix_ok = amix_ok && ok;
    } else {
      mix_ok = mix_ok && ok;
    }
  }
  const MembershipResult& m = found.membership;
  bool outside = !m.inside && m.separator && cut_valid_on(hull.vrep(), *m.separator) &&
                 !m.separator->satisfied_by(w.point.y, w.point.z);

  nlohmann::json out;
  out["reason"] = reason_name(w.reason);
  out["support"] = one_based(w.support);
  out["slack_column"] = w.slack + 1;
  out["closed_form"] = found.witness && !found.from_grid && found.candidates_tried == 1;
  out["point"] = point_json(w.point);
  out["assertions"] = {{"linking_and_bounds", bounds && total >= inst.epsilon},
                       {"mixing_cuts", mix_ok},
                       {"aggregated_cuts", amix_ok},
                       {"outside_hull", outside}};
  if (m.separator) {
    LinearCut sep = canonicalize(*m.separator);
    sep.kind = CutKind::kSeparator;
    out["separator"] = format_cut(sep);
  }
  const bool passed = bounds && total >= inst.epsilon && mix_ok && amix_ok && outside;
  out["passed"] = passed;
  std::cout << out.dump(2) << "\n";
  return passed ? kOk : kVerifyFailed;
}

int verify_validity(const MixingInstance& inst) {
  VRepresentation m = v_representation(inst).complemented();
  std::vector<LinearCut> cuts = full_cut_family(inst);
  int invalid = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& c : cuts) {
    if (!cut_valid_on(m, c)) {
      ++invalid;
      bad.push_back(format_cut(c));
    }
  }
  nlohmann::json out;
  out["cuts_checked"] = cuts.size();
  out["points"] = m.points.size();
  out["rays"] = m.rays.size();
  out["invalid"] = invalid;
  if (invalid > 0) out["invalid_cuts"] = bad;
  out["passed"] = invalid == 0;
  std::cout << out.dump(2) << "\n";
  return invalid == 0 ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& path, const std::string& mode, std::uint64_t seed,
               int samples) {
  MixingInstance inst = reduce_lower_bounds(load_instance(path)).instance;
  if (mode == "witness") return verify_witness(inst);
  if (mode == "validity") return verify_validity(inst);
  SufficiencyReport r = check_sufficiency(inst, {seed, samples});
  std::cout << sufficiency_json(inst, r);
  return r.passed ? kOk : kVerifyFailed;
}

int cmd_quantile(const std::string& path, const std::string& risk_text,
                 const std::string& output) {
  MixingInstance inst = load_instance(path);
  Rational risk;
  try {
    risk = parse_rational(risk_text);
  } catch (const ParseError& e) {
    throw ValidationError(std::string("--risk: ") + e.what());
  }
  RationalVector lower = quantile_lower_bounds(inst, risk);
  std::cout << "l =";
  for (const auto& v : lower) std::cout << " " << to_string(v);
  std::cout << "\n";
  if (!output.empty()) {
    inst.lower = lower;
    MixingInstance reduced = reduce_lower_bounds(inst).instance;
    std::ofstream out(output);
    if (!out) throw ValidationError("cannot write " + output);
    out << serialize_instance(reduced);
    std::cout << "wrote " << output << "\n";
  }
  return kOk;
}

int cmd_twosided(const std::string& path, const std::string& theta_text) {
  TwoSidedData data = load_two_sided(path);
  MixingInstance inst = to_mixing(data);
  HullDiagnosis d = diagnose(inst);
  std::cout << format_diagnosis(inst, d);
  TwoSidedHullReport report = hull_with_bounds(data);
  std::cout << "extreme_points: " << report.extreme_points << "\n";
  std::cout << "band_satisfied: " << (report.band_satisfied ? "yes" : "no") << "\n";
  std::cout << "band_vertices: " << report.band_vertices
            << (report.band_vertices_integral ? " (integral z)" : " (fractional z)") << "\n";
  for (const auto& c : band_cuts(data)) std::cout << "band: " << format_cut(canonicalize(c)) << "\n";
  if (!theta_text.empty()) {
    Sequence theta = parse_sequence(theta_text);
    GeneralizedCutPair pair = generalized_cut(data, theta);
    std::cout << "theta: " << format_sequence(theta) << "\n";
    std::cout << "primed: " << format_cut(pair.primed) << "\n";
    std::cout << "original: " << format_cut(pair.original) << "\n";
  }
  return kOk;
}

}  // namespace
}  // namespace mixcut

int main(int argc, char** argv) {
  using namespace mixcut;
  CLI::App app{"Mixing and aggregated mixing cuts for joint mixing sets"};
  app.require_subcommand(1);

  std::string instance_path, point_path, families = "mix,amix", mode = "sufficiency";
  std::string risk, output, data_path, theta;
  bool json = false;
  std::uint64_t seed = 1;
  int samples = 200;

  auto* diag = app.add_subcommand("diagnose", "Sufficiency diagnosis of an instance");
  diag->add_option("instance", instance_path, "Instance file")->required();
  diag->add_flag("--json", json, "Print JSON");

  auto* sep = app.add_subcommand("separate", "Violated cuts at a point");
  sep->add_option("instance", instance_path, "Instance file")->required();
  sep->add_option("point", point_path, "Point file")->required();
  sep->add_option("--families", families, "Comma list of mix, amix");

  auto* ver = app.add_subcommand("verify", "Certified checks");
  ver->add_option("instance", instance_path, "Instance file")->required();
  ver->add_option("--mode", mode, "sufficiency, witness or validity")
      ->check(CLI::IsMember({"sufficiency", "witness", "validity"}));
  ver->add_option("--seed", seed, "Sampling seed");
  ver->add_option("--samples", samples, "Samples per instance")->check(CLI::PositiveNumber);

  auto* qua = app.add_subcommand("quantile", "Quantile lower bounds from probabilities");
  qua->add_option("instance", instance_path, "Instance file with probabilities")->required();
  qua->add_option("--risk", risk, "Risk level in (0,1)")->required();
  qua->add_option("--output", output, "Write the reduced instance here");

  auto* two = app.add_subcommand("twosided", "Two-sided chance constraint pipeline");
  two->add_option("data", data_path, "Two-sided data file")->required();
  two->add_option("--theta", theta, "Sequence, e.g. 2,1,3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*diag) return cmd_diagnose(instance_path, json);
    if (*sep) return cmd_separate(instance_path, point_path, families);
    if (*ver) return cmd_verify(instance_path, mode, seed, samples);
    if (*qua) return cmd_quantile(instance_path, risk, output);
    return cmd_twosided(data_path, theta);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
