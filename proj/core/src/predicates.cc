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

#include "rainbow_dp/core/predicates.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {
namespace {

absl::Status CheckSameLength(const SimplexVector& x, const SimplexVector& y) {
  if (x.size() != y.size()) {
    return MakeError(ErrorKind::kLengthMismatch,
                     absl::StrCat("vectors have lengths ", x.size(), " and ",
                                  y.size()));
  }
  return absl::OkStatus();
}

double PositivePart(const SimplexVector& p, const SimplexVector& q,
                    double exp_epsilon) {
  double total = 0.0;
  for (int v = 0; v < p.size(); ++v) {
    total += std::max(0.0, p[v] - exp_epsilon * q[v]);
  }
  return total;
}

}  // namespace

std::vector<double> PrefixSums(const SimplexVector& p) {
  std::vector<double> s(p.size());
  double acc = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    acc += p[k];
    s[k] = acc;
  }
  s.back() = 1.0;
  return s;
}

absl::StatusOr<bool> Dominates(const SimplexVector& x, const SimplexVector& y,
                               double tol) {
  if (absl::Status s = CheckSameLength(x, y); !s.ok()) return s;
  const std::vector<double> sx = PrefixSums(x);
  const std::vector<double> sy = PrefixSums(y);
  for (size_t k = 0; k < sx.size(); ++k) {
    if (sx[k] < sy[k] - tol) return false;
  }
  return true;
}

absl::StatusOr<bool> LexPrecedes(const SimplexVector& x,
                                 const SimplexVector& y, double tol) {
  if (absl::Status s = CheckSameLength(x, y); !s.ok()) return s;
  const std::vector<double> sx = PrefixSums(x);
  const std::vector<double> sy = PrefixSums(y);
  for (size_t k = 0; k < sx.size(); ++k) {
    if (std::abs(sx[k] - sy[k]) > tol) return sx[k] < sy[k];
  }
  return true;
}

absl::StatusOr<double> HockeyStickDivergence(const SimplexVector& p,
                                             const SimplexVector& q,
                                             double exp_epsilon) {
  if (absl::Status s = CheckSameLength(p, q); !s.ok()) return s;
  return PositivePart(p, q, exp_epsilon);
}

absl::StatusOr<bool> IsClose(const SimplexVector& p, const SimplexVector& q,
                             const PrivacyBudget& budget, double tol) {
  if (absl::Status s = CheckSameLength(p, q); !s.ok()) return s;
  const double e = budget.exp_epsilon();
  const double limit = budget.delta() + tol;
  return PositivePart(p, q, e) <= limit && PositivePart(q, p, e) <= limit;
}

absl::StatusOr<double> TvDistance(const SimplexVector& p,
                                  const SimplexVector& q) {
  if (absl::Status s = CheckSameLength(p, q); !s.ok()) return s;
  double total = 0.0;
  for (int v = 0; v < p.size(); ++v) total += std::abs(p[v] - q[v]);
  return 0.5 * total;
}

}  // namespace rainbow_dp
