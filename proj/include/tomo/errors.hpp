// Copyright 2026 The tomo Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tomo {

class TomoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TOMO_DEFINE_ERROR(Name)           \
  class Name : public TomoError {         \
   public:                                \
    using TomoError::TomoError;           \
  };

TOMO_DEFINE_ERROR(DimensionError)
TOMO_DEFINE_ERROR(NumericalError)
TOMO_DEFINE_ERROR(DegenerateInputError)
TOMO_DEFINE_ERROR(IncompleteSetError)
TOMO_DEFINE_ERROR(NotMinimalError)
TOMO_DEFINE_ERROR(LabelMismatchError)
TOMO_DEFINE_ERROR(InvalidUnitaryError)
TOMO_DEFINE_ERROR(DegenerateSpectrumError)
TOMO_DEFINE_ERROR(UseDirectBranchError)
TOMO_DEFINE_ERROR(TruncationError)
TOMO_DEFINE_ERROR(ParameterError)
TOMO_DEFINE_ERROR(ParseError)
TOMO_DEFINE_ERROR(UsageError)

#undef TOMO_DEFINE_ERROR

}  // namespace tomo
