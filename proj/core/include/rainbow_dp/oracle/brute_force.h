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

#ifndef RAINBOW_DP_ORACLE_BRUTE_FORCE_H_
#define RAINBOW_DP_ORACLE_BRUTE_FORCE_H_

#include "absl/status/statusor.h"
#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/simplex_vector.h"

namespace rainbow_dp {

inline constexpr int kMaxBruteForceColors = 20;

// (eps, delta)-closeness by literal enumeration of all 2^q outcome sets.
// Fails with AlphabetTooLarge above kMaxBruteForceColors.
absl::StatusOr<bool> IsCloseBruteForce(const SimplexVector& p,
                                       const SimplexVector& q,
                                       const PrivacyBudget& budget,
                                       double tol = kDefaultTolerance);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_ORACLE_BRUTE_FORCE_H_
