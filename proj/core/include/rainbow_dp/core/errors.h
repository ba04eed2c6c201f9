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

#ifndef RAINBOW_DP_CORE_ERRORS_H_
#define RAINBOW_DP_CORE_ERRORS_H_

#include <optional>
#include <string_view>

#include "absl/status/status.h"

namespace rainbow_dp {

// Domain-level failure categories. Carried as a payload on absl::Status so
// callers (the CLI in particular) can branch on them without parsing text.
enum class ErrorKind {
  kInvalidInput,
  kLengthMismatch,
  kUnconstrainedRegion,
  kInvalidBoundary,
  kMissingRainbow,
  kMissingNode,
  kEpsilonZero,
  kAlphabetTooLarge,
  kNonMonotoneWeights,
};

std::string_view ErrorKindName(ErrorKind kind);

// Builds a status with a canonical code chosen per kind and the kind attached
// as payload.
absl::Status MakeError(ErrorKind kind, std::string_view message);

// Returns the kind attached by MakeError, if any.
std::optional<ErrorKind> GetErrorKind(const absl::Status& status);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CORE_ERRORS_H_
