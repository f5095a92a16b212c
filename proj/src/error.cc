// Copyright 2026 The unibid Authors.
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

#include "unibid/error.h"

namespace unibid {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kOffGrid: return "OffGrid";
    case ErrorCode::kTieDetected: return "TieDetected";
    case ErrorCode::kNotMonotoneResult: return "NotMonotoneResult";
    case ErrorCode::kOffsetTooLarge: return "OffsetTooLarge";
    case ErrorCode::kMalformedPath: return "MalformedPath";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kZeroMarginal: return "ZeroMarginal";
    case ErrorCode::kZeroObservationProbability:
      return "ZeroObservationProbability";
    case ErrorCode::kHorizonTooShort: return "HorizonTooShort";
    case ErrorCode::kGridCollision: return "GridCollision";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEmptyTrace: return "EmptyTrace";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

}  // namespace unibid
