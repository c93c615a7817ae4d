/* Copyright 2026 The dumont-grammar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace dumont {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DUMONT_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

DUMONT_DEFINE_ERROR(ParseError);
DUMONT_DEFINE_ERROR(NonInvertibleSubstitution);
DUMONT_DEFINE_ERROR(NonExactDivision);
DUMONT_DEFINE_ERROR(UnknownGrammar);
DUMONT_DEFINE_ERROR(OrderMismatch);
DUMONT_DEFINE_ERROR(UnknownIdentity);
DUMONT_DEFINE_ERROR(SizeTooLarge);
DUMONT_DEFINE_ERROR(UnknownStatistic);
DUMONT_DEFINE_ERROR(MalformedPermutation);
DUMONT_DEFINE_ERROR(MalformedCycles);
DUMONT_DEFINE_ERROR(InvalidClassSet);
DUMONT_DEFINE_ERROR(SlotOutOfRange);
DUMONT_DEFINE_ERROR(MalformedTree);
DUMONT_DEFINE_ERROR(NoSuchLeaf);
DUMONT_DEFINE_ERROR(Incoherent);

#undef DUMONT_DEFINE_ERROR

}  // namespace dumont
