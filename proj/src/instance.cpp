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

#include "mixcut/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mixcut/errors.hpp"

namespace mixcut {

using nlohmann::json;

bool MixingInstance::lower_is_zero() const {
  for (const auto& l : lower) {
    if (l != 0) return false;
  }
  return true;
}

RationalVector MixingInstance::column(int j) const {
  RationalVector c;
  c.reserve(weights.size());
  for (const auto& row : weights) c.push_back(row[j]);
  return c;
}

Rational MixingInstance::column_max(int j) const {
  Rational m = 0;
  for (const auto& row : weights) m = std::max(m, row[j]);
  return m;
}

Rational MixingInstance::row_sum(int i) const {
  Rational s = 0;
  for (const auto& v : weights[i]) s += v;
  return s;
}

void MixingInstance::validate() const {
  if (weights.empty()) throw ValidationError("W has no rows");
  if (lower.empty()) throw ValidationError("k must be at least 1");
  const std::size_t cols = lower.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != cols) {
      throw ValidationError("row " + std::to_string(i + 1) + " of W has " +
                            std::to_string(weights[i].size()) +
                            " entries, expected " + std::to_string(cols));
    }
    for (const auto& v : weights[i]) {
      if (v < 0) throw ValidationError("W has a negative entry");
    }
  }
  for (const auto& l : lower) {
    if (l < 0) throw ValidationError("lower bounds must be nonnegative");
  }
  if (epsilon < 0) throw ValidationError("epsilon must be nonnegative");
  if (probabilities) {
    if (probabilities->size() != weights.size()) {
      throw ValidationError("probabilities length differs from n");
    }
    Rational total = 0;
    for (const auto& p : *probabilities) {
      if (p < 0) throw ValidationError("negative probability");
      total += p;
    }
    if (total != 1) throw ValidationError("probabilities do not sum to 1");
  }
}

MixingInstance make_instance(RationalMatrix weights, RationalVector lower,
                             Rational epsilon,
                             std::optional<RationalVector> probabilities) {
  MixingInstance inst;
  if (lower.empty() && !weights.empty()) {
    lower.assign(weights.front().size(), Rational(0));
  }
  inst.weights = std::move(weights);
  inst.lower = std::move(lower);
  inst.epsilon = std::move(epsilon);
  inst.probabilities = std::move(probabilities);
  inst.validate();
  return inst;
}

void validate_sequence(const Sequence& theta, int n) {
  if (theta.empty()) throw InvalidSequence("sequence is empty");
  std::set<int> seen;
  for (int i : theta) {
    if (i < 0 || i >= n) {
      throw InvalidSequence("index " + std::to_string(i + 1) + " out of range");
    }
    if (!seen.insert(i).second) {
      throw InvalidSequence("index " + std::to_string(i + 1) + " repeated");
    }
  }
}

Sequence parse_sequence(const std::string& text) {
  Sequence out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad index '" + item + "'");
      out.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad index '" + item + "'");
    }
  }
  return out;
}

std::string format_sequence(const Sequence& theta) {
  std::string out = "(";
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(theta[t] + 1);
  }
  return out + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Rational json_rational(const json& v, const char* field) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError(std::string("field '") + field +
                   "': expected a number string or an integer");
}

RationalVector json_vector(const json& v, const char* field) {
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + field + "': expected an array");
  }
  RationalVector out;
  for (const auto& e : v) out.push_back(json_rational(e, field));
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace

MixingInstance parse_instance(const std::string& json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  if (!doc.contains("W")) throw ParseError("missing field 'W'");
  const json& w = doc["W"];
  if (!w.is_array()) throw ParseError("field 'W': expected an array of rows");

  RationalMatrix weights;
  for (const auto& row : w) weights.push_back(json_vector(row, "W"));
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) throw ParseError("field 'n': integer expected");
    if (doc["n"].get<long long>() != static_cast<long long>(weights.size())) {
      throw ValidationError("n does not match the number of rows of W");
    }
  }
  long long k = weights.empty() ? 0 : static_cast<long long>(weights[0].size());
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer()) throw ParseError("field 'k': integer expected");
    k = doc["k"].get<long long>();
  }
  if (k < 1) throw ValidationError("k must be at least 1");

  RationalVector lower;
  if (doc.contains("lower")) {
    const json& l = doc["lower"];
    if (l.is_array()) {
      lower = json_vector(l, "lower");
    } else {
      lower.assign(static_cast<std::size_t>(k), json_rational(l, "lower"));
    }
  } else {
    lower.assign(static_cast<std::size_t>(k), Rational(0));
  }
  if (static_cast<long long>(lower.size()) != k) {
    throw ValidationError("lower has the wrong length");
  }
  Rational epsilon = doc.contains("epsilon") ? json_rational(doc["epsilon"], "epsilon")
                                             : Rational(0);
  std::optional<RationalVector> probs;
  if (doc.contains("probabilities") && !doc["probabilities"].is_null()) {
    probs = json_vector(doc["probabilities"], "probabilities");
  }
  return make_instance(std::move(weights), std::move(lower), std::move(epsilon),
                       std::move(probs));
}

MixingInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

std::string serialize_instance(const MixingInstance& instance) {
  json doc;
  doc["n"] = instance.n();
  doc["k"] = instance.k();
  json w = json::array();
  for (const auto& row : instance.weights) w.push_back(to_json(row));
  doc["W"] = w;
  doc["lower"] = to_json(instance.lower);
  doc["epsilon"] = to_string(instance.epsilon);
  if (instance.probabilities) {
    doc["probabilities"] = to_json(*instance.probabilities);
  }
  return doc.dump(2) + "\n";
}

Point parse_point(const std::string& json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("y") || !doc.contains("z")) {
    throw ParseError("point must be an object with 'y' and 'z'");
  }
  return Point{json_vector(doc["y"], "y"), json_vector(doc["z"], "z")};
}

Point load_point(const std::string& path) { return parse_point(read_file(path)); }

std::string serialize_point(const Point& point) {
  json doc;
  doc["y"] = to_json(point.y);
  doc["z"] = to_json(point.z);
  return doc.dump(2) + "\n";
}

}  // namespace mixcut
