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

#include "mixcut/rational.hpp"

#include <cctype>

#include "mixcut/errors.hpp"

namespace mixcut {
namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Boost reads a leading 0 as an octal prefix.
Integer decimal_digits(const std::string& s) {
  auto first = s.find_first_not_of('0');
  return first == std::string::npos ? Integer(0) : Integer(s.substr(first));
}

Integer pow10(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

// Optional sign followed by digits.
Integer parse_integer(const std::string& s, const std::string& whole) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) throw ParseError("malformed number: '" + whole + "'");
  Integer v = decimal_digits(body);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ParseError("empty number");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(text.substr(0, slash), raw);
    std::string den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed number: '" + raw + "'");
    Integer den = decimal_digits(den_text);
    if (den == 0) throw ParseError("zero denominator: '" + raw + "'");
    return Rational(num, den);
  }

  long exponent = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    Integer ev = parse_integer(text.substr(e + 1), raw);
    if (abs(ev) > 10000) throw ParseError("exponent out of range: '" + raw + "'");
    exponent = ev.convert_to<long>();
    text = text.substr(0, e);
  }

  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text = text.substr(1);
  }
  std::string int_part = text, frac_part;
  auto dot_pos = text.find('.');
  if (dot_pos != std::string::npos) {
    int_part = text.substr(0, dot_pos);
    frac_part = text.substr(dot_pos + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("malformed number: '" + raw + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError("malformed number: '" + raw + "'");
  }
  Integer digits = decimal_digits(int_part + frac_part);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rational value = scale >= 0 ? Rational(digits, pow10(scale))
                              : Rational(digits * pow10(-scale));
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace mixcut
