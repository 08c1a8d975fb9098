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

#ifndef MIXCUT_RATIONAL_HPP_
#define MIXCUT_RATIONAL_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mixcut {

// Exact rational, always reduced with positive denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<
    boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Accepts "12", "-3", "7/4", "0.25", "-1.5e2". Throws ParseError.
Rational parse_rational(const std::string& text);

// "a" or "a/b".
std::string to_string(const Rational& r);

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Rational positive_part(const Rational& r) {
  return r > 0 ? r : Rational(0);
}

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace mixcut

#endif  // MIXCUT_RATIONAL_HPP_
