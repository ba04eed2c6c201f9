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

#ifndef RAINBOW_DP_ORACLE_FALSIFY_H_
#define RAINBOW_DP_ORACLE_FALSIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/core/privacy_budget.h"
#include "rainbow_dp/core/simplex_vector.h"
#include "rainbow_dp/mechanism/t_operator.h"

namespace rainbow_dp {

using StepOperator =
    std::function<SimplexVector(const SimplexVector&, const PrivacyBudget&)>;

struct Counterexample {
  enum class Check {
    // A close sample with a prefix above the operator's output.
    kDominance,
    // A close sample above the analytic per-prefix bound.
    kEnvelope,
  };
  Check check;
  SimplexVector sample;
  int prefix_index;  // 1-based
  double margin;
};

struct FalsificationReport {
  int64_t trials = 0;
  uint64_t seed = 0;
  std::optional<Counterexample> counterexample;
};

// min{1, min{e^eps s_k, 1 - e^-eps (1 - s_k)} + delta}, the largest prefix
// any close distribution can have.
std::vector<double> AnalyticEnvelope(const SimplexVector& p,
                                     const PrivacyBudget& budget);

// Tries to refute that `step(p)` dominates every distribution close to p.
// Draws `trials` samples with SampleClose and stops at the first failure of
// either the dominance check or the envelope bound.
FalsificationReport DominanceFalsify(const SimplexVector& p,
                                     const PrivacyBudget& budget,
                                     int64_t trials, uint64_t seed,
                                     const StepOperator& step = TStep,
                                     double tol = kDefaultTolerance);

// Independent re-check of a reported counterexample.
bool ReverifyCounterexample(const SimplexVector& p, const PrivacyBudget& budget,
                            const Counterexample& counterexample,
                            const StepOperator& step = TStep,
                            double tol = kDefaultTolerance);

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_ORACLE_FALSIFY_H_
