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

#include "rainbow_dp/core/simplex_vector.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

absl::StatusOr<SimplexVector> SimplexVector::Create(std::vector<double> p) {
  if (p.empty()) {
    return MakeError(ErrorKind::kInvalidInput, "empty probability vector");
  }
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    double& v = p[i];
    if (!std::isfinite(v) || v < -kSimplexEntrySlack || v > 1.0 + kSimplexEntrySlack) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("entry ", i + 1, " = ", v,
                                    " is not a probability"));
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("entries sum to ", sum, ", not 1"));
  }
  if (sum != 1.0) {
    for (double& v : p) v /= sum;
  }
  for (double& v : p) {
    if (v > 1.0) v = 1.0;
  }
  return SimplexVector(std::move(p));
}

absl::StatusOr<SimplexVector> SimplexVector::FromPrefixSums(
    std::span<const double> prefix) {
  std::vector<double> p(prefix.size());
  double prev = 0.0;
  for (size_t k = 0; k < prefix.size(); ++k) {
    const double diff = prefix[k] - prev;
    if (diff < -kSimplexEntrySlack) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("prefix sums decrease at index ", k + 1));
    }
    p[k] = diff > 0.0 ? diff : 0.0;
    prev = prefix[k];
  }
  return Create(std::move(p));
}

SimplexVector SimplexVector::PointMass(int q, int index) {
  std::vector<double> p(q, 0.0);
  p[index] = 1.0;
  return SimplexVector(std::move(p));
}

SimplexVector SimplexVector::Uniform(int q) {
  return SimplexVector(std::vector<double>(q, 1.0 / q));
}

SimplexVector SimplexVector::ToPreferenceOrder(const Rainbow& rainbow) const {
  std::vector<double> out(p_.size());
  for (int i = 0; i < size(); ++i) out[i] = p_[rainbow[i]];
  return SimplexVector(std::move(out));
}

SimplexVector SimplexVector::ToCanonicalOrder(const Rainbow& rainbow) const {
  std::vector<double> out(p_.size());
  for (int i = 0; i < size(); ++i) out[rainbow[i]] = p_[i];
  return SimplexVector(std::move(out));
}

}  // namespace rainbow_dp
