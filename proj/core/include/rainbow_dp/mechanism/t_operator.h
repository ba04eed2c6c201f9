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

#ifndef RAINBOW_DP_MECHANISM_T_OPERATOR_H_
#define RAINBOW_DP_MECHANISM_T_OPERATOR_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/color_space.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/simplex_vector.h"

namespace rainbow_dp {

// One application of the optimal line operator to prefix sums:
//   s'_k = min{1, min{e^eps s_k, 1 - e^-eps (1 - s_k)} + delta}.
std::vector<double> TStepPrefix(std::span<const double> prefix,
                                const PrivacyBudget& budget);

// The operator on distributions. `p` is in preference order. The result is
// the dominance-maximal distribution that is (eps, delta)-close to p.
SimplexVector TStep(const SimplexVector& p, const PrivacyBudget& budget);

// `steps` applications of TStep.
SimplexVector IterateTStep(const SimplexVector& p, const PrivacyBudget& budget,
                           int steps);

inline constexpr int64_t kInfiniteTau = std::numeric_limits<int64_t>::max();

// Phase-transition distances of the closed-form trajectory. tau[k] is the
// last distance at which prefix k still grows geometrically away from 0;
// kInfiniteTau marks prefixes pinned at 0 forever.
struct TauProfile {
  double rho = 0.0;
  std::vector<int64_t> tau;
  double epsilon = 0.0;
  double delta = 0.0;

  bool IsInfinite(int k) const { return tau[k] == kInfiniteTau; }
};

// `m` is in preference order. Fails with EpsilonZero when epsilon == 0.
absl::StatusOr<TauProfile> ComputeTauProfile(const SimplexVector& m,
                                             const PrivacyBudget& budget);

// Prefix sums of T^t(m) from the closed form, for real t >= 0. At integer t
// this matches iterating TStep; in between it interpolates. Handles
// epsilon == 0 as s_k + t*delta capped at 1.
std::vector<double> ClosedFormPrefix(const SimplexVector& m,
                                     const PrivacyBudget& budget, double t);

struct TrajectoryRow {
  double t;
  int k;  // 1-based preference rank
  std::string color;
  double p;
  double s;
};

using TrajectoryTable = std::vector<TrajectoryRow>;

// Rows for t = 0, 1/substeps, ..., steps, sorted by (t, k). `colors` names
// the preference ranks of m.
TrajectoryTable BuildTrajectory(const SimplexVector& m,
                                const PrivacyBudget& budget,
                                const ColorSpace& colors, int steps,
                                int substeps);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_MECHANISM_T_OPERATOR_H_
