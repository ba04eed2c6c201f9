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

#include "rainbow_dp/oracle/brute_force.h"

#include <cstdint>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

absl::StatusOr<bool> IsCloseBruteForce(const SimplexVector& p,
                                       const SimplexVector& q,
                                       const PrivacyBudget& budget,
                                       double tol) {
  if (p.size() != q.size()) {
    return MakeError(ErrorKind::kLengthMismatch,
                     absl::StrCat("vectors have lengths ", p.size(), " and ",
                                  q.size()));
  }
  const int n = p.size();
  if (n > kMaxBruteForceColors) {
    return MakeError(ErrorKind::kAlphabetTooLarge,
                     absl::StrCat("subset enumeration limited to ",
                                  kMaxBruteForceColors, " colors, got ", n));
  }
  const double e = budget.exp_epsilon();
  const double limit = budget.delta() + tol;
  const uint32_t subsets = 1u << n;
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    double ps = 0.0;
    double qs = 0.0;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) {
        ps += p[v];
        qs += q[v];
      }
    }
    if (ps - e * qs > limit || qs - e * ps > limit) return false;
  }
  return true;
}

}  // namespace rainbow_dp
