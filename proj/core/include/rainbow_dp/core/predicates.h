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

#ifndef RAINBOW_DP_CORE_PREDICATES_H_
#define RAINBOW_DP_CORE_PREDICATES_H_

#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/simplex_vector.h"

namespace rainbow_dp {

inline constexpr double kDefaultTolerance = 1e-12;

// s_k = p_1 + ... + p_k for k = 1..q. The last entry is pinned to 1.
std::vector<double> PrefixSums(const SimplexVector& p);

// x dominates y (x ⪰ y): every prefix sum of x is at least the matching
// prefix sum of y, up to `tol`. Both vectors must already be in the order
// the comparison is meant for.
absl::StatusOr<bool> Dominates(const SimplexVector& x, const SimplexVector& y,
                               double tol = kDefaultTolerance);

// Lexicographic order on prefix sums: at the first index where they differ
// by more than `tol`, x's prefix is smaller. Equal sequences compare true.
absl::StatusOr<bool> LexPrecedes(const SimplexVector& x,
                                 const SimplexVector& y,
                                 double tol = kDefaultTolerance);

// sup_S P(S) - e^eps Q(S), attained by the set of elements with positive
// margin: sum_v max(0, P(v) - e^eps Q(v)).
absl::StatusOr<double> HockeyStickDivergence(const SimplexVector& p,
                                             const SimplexVector& q,
                                             double exp_epsilon);

// (epsilon, delta)-closeness in both directions.
absl::StatusOr<bool> IsClose(const SimplexVector& p, const SimplexVector& q,
                             const PrivacyBudget& budget,
                             double tol = kDefaultTolerance);

// Total variation distance, (1/2) sum_v |P(v) - Q(v)|.
absl::StatusOr<double> TvDistance(const SimplexVector& p,
                                  const SimplexVector& q);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CORE_PREDICATES_H_
