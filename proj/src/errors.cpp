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

#include "starcut/errors.hpp"

namespace starcut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kSizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kNoCutKnown: return "NoCutKnown";
    case ErrorCode::kROutOfRange: return "ROutOfRange";
    case ErrorCode::kOutOfValidity: return "OutOfValidity";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace starcut
