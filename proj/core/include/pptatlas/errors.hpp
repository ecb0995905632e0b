// Copyright 2026 The pptatlas Authors
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

namespace pptatlas {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PPTATLAS_DEFINE_ERROR(Name)       \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// Invalid input: the argument did not satisfy an operation's precondition.
PPTATLAS_DEFINE_ERROR(InvalidInput);
PPTATLAS_DEFINE_ERROR(NotAState);
PPTATLAS_DEFINE_ERROR(NotPpt);
PPTATLAS_DEFINE_ERROR(SingularFactor);
PPTATLAS_DEFINE_ERROR(BadArity);
PPTATLAS_DEFINE_ERROR(DegenerateQuadruple);
PPTATLAS_DEFINE_ERROR(DegenerateAngles);
PPTATLAS_DEFINE_ERROR(NotOrthonormal);
PPTATLAS_DEFINE_ERROR(NotRank4);
PPTATLAS_DEFINE_ERROR(InvalidParameter);

// Search failure: a bounded numerical procedure did not converge.
PPTATLAS_DEFINE_ERROR(SearchFailure);

class MaxIterations : public SearchFailure {
 public:
  using SearchFailure::SearchFailure;
};
class MinimizationFailed : public SearchFailure {
 public:
  using SearchFailure::SearchFailure;
};
class BudgetExhausted : public SearchFailure {
 public:
  using SearchFailure::SearchFailure;
};
class DegeneratePencil : public SearchFailure {
 public:
  using SearchFailure::SearchFailure;
};
class DegenerateDraw : public SearchFailure {
 public:
  using SearchFailure::SearchFailure;
};

#undef PPTATLAS_DEFINE_ERROR

}  // namespace pptatlas
