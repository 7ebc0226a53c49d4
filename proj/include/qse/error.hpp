// Copyright 2026 The qse-toolkit Authors
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

namespace qse {

// Failure categories surfaced by the library.  Every throwing operation
// documents which of these it can raise.
enum class ErrorCode {
  InvalidState,            // malformed density input (non-Hermitian, wrong trace, ...)
  NotAState,               // Hermitian but not positive semidefinite / not normalizable
  NotTracePreserving,      // Kraus set does not sum to identity
  NotCompletelyPositive,   // affine map has no valid Kraus form (Choi not PSD)
  DomainError,             // scalar parameter outside its documented range
  ZeroProbabilityOutcome,  // conditioning on an outcome of (near-)zero probability
  ProductStateDegenerate,  // operation undefined for a pure reduced state
  NotANeedle,              // ellipsoid is not a line segment
  NotANeedleState,         // state does not have a rank-2 coefficient matrix
  DecompositionInfeasible, // two-product decomposition failed numerically
  NotXState,               // analytic discord path requires an X-shaped density
  ParseError,              // malformed JSON / config input
  IoError,                 // file could not be read or written
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qse
