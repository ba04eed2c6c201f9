//
// Copyright 2026 The Rainbow DP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "rainbow_dp/core/errors.h"

#include <string>

#include "absl/strings/cord.h"

namespace rainbow_dp {
namespace {

constexpr char kPayloadUrl[] = "type.rainbow_dp/ErrorKind";

constexpr ErrorKind kAllKinds[] = {
    ErrorKind::kInvalidInput,     ErrorKind::kLengthMismatch,
    ErrorKind::kUnconstrainedRegion, ErrorKind::kInvalidBoundary,
    ErrorKind::kMissingRainbow,   ErrorKind::kMissingNode,
    ErrorKind::kEpsilonZero,      ErrorKind::kAlphabetTooLarge,
    ErrorKind::kNonMonotoneWeights,
};

absl::StatusCode CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnconstrainedRegion:
    case ErrorKind::kInvalidBoundary:
    case ErrorKind::kEpsilonZero:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorKind::kMissingRainbow:
    case ErrorKind::kMissingNode:
      return absl::StatusCode::kNotFound;
    case ErrorKind::kAlphabetTooLarge:
      return absl::StatusCode::kOutOfRange;
    default:
      return absl::StatusCode::kInvalidArgument;
  }
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "InvalidInput";
    case ErrorKind::kLengthMismatch:
      return "LengthMismatch";
    case ErrorKind::kUnconstrainedRegion:
      return "UnconstrainedRegion";
    case ErrorKind::kInvalidBoundary:
      return "InvalidBoundary";
    case ErrorKind::kMissingRainbow:
      return "MissingRainbow";
    case ErrorKind::kMissingNode:
      return "MissingNode";
    case ErrorKind::kEpsilonZero:
      return "EpsilonZero";
    case ErrorKind::kAlphabetTooLarge:
      return "AlphabetTooLarge";
    case ErrorKind::kNonMonotoneWeights:
      return "NonMonotoneWeights";
  }
  return "Unknown";
}

absl::Status MakeError(ErrorKind kind, std::string_view message) {
  absl::Status status(CodeFor(kind),
                      std::string(ErrorKindName(kind)) + ": " +
                          std::string(message));
  status.SetPayload(kPayloadUrl, absl::Cord(std::string(ErrorKindName(kind))));
  return status;
}

std::optional<ErrorKind> GetErrorKind(const absl::Status& status) {
  absl::optional<absl::Cord> payload = status.GetPayload(kPayloadUrl);
  if (!payload.has_value()) return std::nullopt;
  for (ErrorKind kind : kAllKinds) {
    if (*payload == std::string(ErrorKindName(kind))) return kind;
  }
  return std::nullopt;
}

}  // namespace rainbow_dp
