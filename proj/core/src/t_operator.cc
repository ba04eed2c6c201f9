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

#include "rainbow_dp/mechanism/t_operator.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/core/predicates.h"

namespace rainbow_dp {
namespace {

// Values of tau at or above this are treated as never crossing.
constexpr double kTauCeiling = 9.0e18;

SimplexVector FromPrefixOrDie(std::span<const double> prefix) {
  absl::StatusOr<SimplexVector> p = SimplexVector::FromPrefixSums(prefix);
  // Callers only pass nondecreasing sequences ending at 1.
  if (!p.ok()) std::abort();
  return *std::move(p);
}

// tau_k for one prefix value, ε > 0.
int64_t TauFor(double s0, double exp_epsilon, double epsilon, double rho) {
  const double base = s0 + rho;
  if (base <= 0.0) return kInfiniteTau;
  const double threshold = 1.0 / (exp_epsilon + 1.0);
  const double x = std::log((threshold + rho) / base) / epsilon + 1.0;
  const double clamped = std::max(x, 0.0);
  if (!(clamped < kTauCeiling)) return kInfiniteTau;
  return static_cast<int64_t>(std::floor(clamped));
}

}  // namespace

std::vector<double> TStepPrefix(std::span<const double> prefix,
                                const PrivacyBudget& budget) {
  const double e = budget.exp_epsilon();
  const double delta = budget.delta();
  std::vector<double> next(prefix.size());
  for (size_t k = 0; k < prefix.size(); ++k) {
    const double s = prefix[k];
    next[k] = std::min(1.0, std::min(e * s, 1.0 - (1.0 - s) / e) + delta);
  }
  if (!next.empty()) next.back() = 1.0;
  return next;
}

SimplexVector TStep(const SimplexVector& p, const PrivacyBudget& budget) {
  const std::vector<double> s = PrefixSums(p);
  return FromPrefixOrDie(TStepPrefix(s, budget));
}

SimplexVector IterateTStep(const SimplexVector& p, const PrivacyBudget& budget,
                           int steps) {
  SimplexVector current = p;
  for (int i = 0; i < steps; ++i) current = TStep(current, budget);
  return current;
}

absl::StatusOr<TauProfile> ComputeTauProfile(const SimplexVector& m,
                                             const PrivacyBudget& budget) {
  if (budget.epsilon() == 0.0) {
    return MakeError(ErrorKind::kEpsilonZero,
                     "phase-transition profile needs epsilon > 0");
  }
  const double e = budget.exp_epsilon();
  TauProfile profile;
  profile.epsilon = budget.epsilon();
  profile.delta = budget.delta();
  profile.rho = budget.delta() / (e - 1.0);
  const std::vector<double> s = PrefixSums(m);
  profile.tau.reserve(s.size());
  for (double s0 : s) {
    profile.tau.push_back(TauFor(s0, e, budget.epsilon(), profile.rho));
  }
  return profile;
}

std::vector<double> ClosedFormPrefix(const SimplexVector& m,
                                     const PrivacyBudget& budget, double t) {
  const std::vector<double> s0 = PrefixSums(m);
  std::vector<double> s(s0.size());
  const double epsilon = budget.epsilon();
  const double delta = budget.delta();
  if (epsilon == 0.0) {
    for (size_t k = 0; k < s0.size(); ++k) {
      s[k] = std::min(1.0, s0[k] + t * delta);
    }
    s.back() = 1.0;
    return s;
  }
  const double e = budget.exp_epsilon();
  const double rho = delta / (e - 1.0);
  for (size_t k = 0; k < s0.size(); ++k) {
    const int64_t tau = TauFor(s0[k], e, epsilon, rho);
    auto growth = [&](double time) {
      return std::min(1.0, std::exp(time * epsilon) * (s0[k] + rho) - rho);
    };
    if (tau == kInfiniteTau || t <= static_cast<double>(tau)) {
      s[k] = growth(t);
    } else {
      const double at_tau = growth(static_cast<double>(tau));
      const double gap = 1.0 - at_tau + e * rho;
      s[k] = std::min(1.0, 1.0 + e * rho -
                               std::exp(-epsilon * (t - static_cast<double>(tau))) *
                                   gap);
    }
  }
  s.back() = 1.0;
  return s;
}

TrajectoryTable BuildTrajectory(const SimplexVector& m,
                                const PrivacyBudget& budget,
                                const ColorSpace& colors, int steps,
                                int substeps) {
  TrajectoryTable rows;
  const int q = m.size();
  const int samples = steps * substeps;
  rows.reserve(static_cast<size_t>(samples + 1) * q);
  for (int i = 0; i <= samples; ++i) {
    // Integer t is hit exactly, so those rows coincide with T^t(m).
    const double t = (i % substeps == 0)
                         ? static_cast<double>(i / substeps)
                         : static_cast<double>(i) / substeps;
    const std::vector<double> s = ClosedFormPrefix(m, budget, t);
    double prev = 0.0;
    for (int k = 0; k < q; ++k) {
      rows.push_back({t, k + 1, colors.name(k), s[k] - prev, s[k]});
      prev = s[k];
    }
  }
  return rows;
}

}  // namespace rainbow_dp
