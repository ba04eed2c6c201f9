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

#ifndef RAINBOW_DP_ORACLE_SAMPLING_H_
#define RAINBOW_DP_ORACLE_SAMPLING_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/simplex_vector.h"

namespace rainbow_dp {

struct CloseSamples {
  std::vector<SimplexVector> samples;
  // Set when the budget is (0, 0): only p itself is close, so a single
  // sample is returned regardless of the requested count.
  bool degenerate_budget = false;
};

// Seeded distributions that are (eps, delta)-close to p (preference order).
// samples[0] is p. samples[1] is TStep(p) when that is close to p, and
// otherwise the farthest close point on the segment from p to TStep(p). The
// rest are random. Sample i depends only on (seed, i).
absl::StatusOr<CloseSamples> SampleClose(const SimplexVector& p,
                                         const PrivacyBudget& budget,
                                         int count, uint64_t seed);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_ORACLE_SAMPLING_H_
