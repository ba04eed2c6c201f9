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

#include "rainbow_dp/oracle/falsify.h"

#include <algorithm>

#include "rainbow_dp/oracle/brute_force.h"
#include "rainbow_dp/oracle/sampling.h"

namespace rainbow_dp {
namespace {

// First prefix where `sample` exceeds `bound` by more than tol.
std::optional<std::pair<int, double>> FirstExcess(
    const std::vector<double>& sample, const std::vector<double>& bound,
    double tol) {
  for (size_t k = 0; k < sample.size(); ++k) {
    const double excess = sample[k] - bound[k];
    if (excess > tol) return std::make_pair(static_cast<int>(k) + 1, excess);
  }
  return std::nullopt;
}

}  // namespace

std::vector<double> AnalyticEnvelope(const SimplexVector& p,
                                     const PrivacyBudget& budget) {
  const double e = budget.exp_epsilon();
  const double delta = budget.delta();
  std::vector<double> s = PrefixSums(p);
  for (double& x : s) {
    x = std::min(1.0, std::min(e * x, 1.0 - (1.0 - x) / e) + delta);
  }
  return s;
}

FalsificationReport DominanceFalsify(const SimplexVector& p,
                                     const PrivacyBudget& budget,
                                     int64_t trials, uint64_t seed,
                                     const StepOperator& step, double tol) {
  FalsificationReport report;
  report.seed = seed;
  absl::StatusOr<CloseSamples> samples =
      SampleClose(p, budget, static_cast<int>(trials), seed);
  if (!samples.ok()) return report;

  const std::vector<double> stepped = PrefixSums(step(p, budget));
  const std::vector<double> envelope = AnalyticEnvelope(p, budget);
  for (const SimplexVector& sample : samples->samples) {
    ++report.trials;
    const std::vector<double> s = PrefixSums(sample);
    if (auto hit = FirstExcess(s, stepped, tol)) {
      report.counterexample = Counterexample{Counterexample::Check::kDominance,
                                             sample, hit->first, hit->second};
      return report;
    }
    if (auto hit = FirstExcess(s, envelope, tol)) {
      report.counterexample = Counterexample{Counterexample::Check::kEnvelope,
                                             sample, hit->first, hit->second};
      return report;
    }
  }
  return report;
}

bool ReverifyCounterexample(const SimplexVector& p, const PrivacyBudget& budget,
                            const Counterexample& counterexample,
                            const StepOperator& step, double tol) {
  const SimplexVector& sample = counterexample.sample;
  if (sample.size() != p.size()) return false;
  absl::StatusOr<bool> close = p.size() <= kMaxBruteForceColors
                                   ? IsCloseBruteForce(p, sample, budget, tol)
                                   : IsClose(p, sample, budget, tol);
  if (!close.ok() || !*close) return false;
  const std::vector<double> bound =
      counterexample.check == Counterexample::Check::kDominance
          ? PrefixSums(step(p, budget))
          : AnalyticEnvelope(p, budget);
  const std::vector<double> s = PrefixSums(sample);
  const int k = counterexample.prefix_index - 1;
  return k >= 0 && k < sample.size() && s[k] - bound[k] > tol;
}

}  // namespace rainbow_dp
