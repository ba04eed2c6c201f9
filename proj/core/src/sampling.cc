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

#include "rainbow_dp/oracle/sampling.h"

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/core/predicates.h"
#include "rainbow_dp/mechanism/t_operator.h"
#include "rainbow_dp/oracle/rng.h"

namespace rainbow_dp {
namespace {

// Acceptance is stricter than the tolerance downstream checks use.
constexpr double kAcceptTolerance = 1e-13;
constexpr int kMaxHalvings = 64;
constexpr int kBisections = 60;

std::vector<double> Mix(const SimplexVector& a, const SimplexVector& b,
                        double weight_b) {
  std::vector<double> out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    out[i] = (1.0 - weight_b) * a[i] + weight_b * b[i];
  }
  return out;
}

bool Accept(const SimplexVector& p, const SimplexVector& candidate,
            const PrivacyBudget& budget) {
  return *IsClose(p, candidate, budget, kAcceptTolerance);
}

SimplexVector DrawOne(const SimplexVector& p, const SimplexVector& stepped,
                      const PrivacyBudget& budget, Rng& rng) {
  // Without delta slack, zero entries of p must stay zero.
  const bool restrict = budget.delta() == 0.0 || rng.Bernoulli(0.5);
  std::vector<bool> support(p.size(), true);
  if (restrict) {
    for (int i = 0; i < p.size(); ++i) support[i] = p[i] > 0.0;
  }
  const SimplexVector target = UniformSimplexOnSupport(rng, support);

  SimplexVector candidate = p;
  double w = rng.Uniform01();
  for (int i = 0; i < kMaxHalvings; ++i, w *= 0.5) {
    absl::StatusOr<SimplexVector> mixed =
        SimplexVector::Create(Mix(p, target, w));
    if (mixed.ok() && Accept(p, *mixed, budget)) {
      candidate = *std::move(mixed);
      break;
    }
  }

  // The close set is convex and contains `stepped`, so blending toward it
  // stays close while pushing samples out to the envelope.
  if (rng.Bernoulli(0.5)) {
    const double lambda = rng.Uniform01();
    absl::StatusOr<SimplexVector> blended =
        SimplexVector::Create(Mix(candidate, stepped, lambda));
    if (blended.ok() && Accept(p, *blended, budget)) {
      candidate = *std::move(blended);
    }
  }
  return candidate;
}

// TStep(p) itself when it is close to p, otherwise the farthest close point
// on the segment from p to TStep(p).
SimplexVector StepOrFarthestClose(const SimplexVector& p,
                                  const PrivacyBudget& budget) {
  const SimplexVector stepped = TStep(p, budget);
  if (Accept(p, stepped, budget)) return stepped;
  SimplexVector best = p;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    absl::StatusOr<SimplexVector> mixed =
        SimplexVector::Create(Mix(p, stepped, mid));
    if (mixed.ok() && Accept(p, *mixed, budget)) {
      best = *std::move(mixed);
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

}  // namespace

absl::StatusOr<CloseSamples> SampleClose(const SimplexVector& p,
                                         const PrivacyBudget& budget,
                                         int count, uint64_t seed) {
  if (count < 1) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("sample count must be >= 1, got ", count));
  }
  CloseSamples out;
  out.samples.reserve(count);
  out.samples.push_back(p);
  if (budget.epsilon() == 0.0 && budget.delta() == 0.0) {
    out.degenerate_budget = count > 1;
    return out;
  }
  if (count == 1) return out;
  const SimplexVector stepped = StepOrFarthestClose(p, budget);
  out.samples.push_back(stepped);
  for (int i = 2; i < count; ++i) {
    Rng rng(SubSeed(seed, static_cast<uint64_t>(i)));
    out.samples.push_back(DrawOne(p, stepped, budget, rng));
  }
  return out;
}

}  // namespace rainbow_dp
