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

#ifndef MIXCUT_ERRORS_HPP_
#define MIXCUT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mixcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MIXCUT_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

MIXCUT_DEFINE_ERROR(ParseError);
MIXCUT_DEFINE_ERROR(ValidationError);
MIXCUT_DEFINE_ERROR(DomainError);
MIXCUT_DEFINE_ERROR(DimensionMismatch);
MIXCUT_DEFINE_ERROR(GroundSetTooLarge);
MIXCUT_DEFINE_ERROR(InvalidSequence);
MIXCUT_DEFINE_ERROR(LowerBoundsNotReduced);
MIXCUT_DEFINE_ERROR(EpsilonViolated);
MIXCUT_DEFINE_ERROR(PreconditionFailed);
MIXCUT_DEFINE_ERROR(RiskOutOfRange);
MIXCUT_DEFINE_ERROR(AllZeroCut);
MIXCUT_DEFINE_ERROR(InternalInvariant);

#undef MIXCUT_DEFINE_ERROR

// Raised by the two-sided conversion; carries the first offending index.
class ConditionViolated : public Error {
 public:
  ConditionViolated(const std::string& what, int index)
      : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace mixcut

#endif  // MIXCUT_ERRORS_HPP_
