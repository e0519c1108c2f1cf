// Copyright 2026 The Starcut Authors
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

#ifndef STARCUT_ERRORS_HPP_
#define STARCUT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace starcut {

enum class ErrorCode {
  kInvalidVertex,
  kInvalidDimension,
  kPositionOutOfRange,
  kSizeOutOfRange,
  kTooLarge,
  kUnsupported,
  kNoCutKnown,
  kROutOfRange,
  kOutOfValidity,
  kInfeasible,
  kMalformedInput,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Precondition and input failures. Search outcomes (no cut, budget exhausted)
// are values, not exceptions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starcut

#endif  // STARCUT_ERRORS_HPP_
