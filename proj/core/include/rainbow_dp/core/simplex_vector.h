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

#ifndef RAINBOW_DP_CORE_SIMPLEX_VECTOR_H_
#define RAINBOW_DP_CORE_SIMPLEX_VECTOR_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/rainbow.h"

namespace rainbow_dp {

// Entries must sum to 1 within this window; accepted inputs are divided by
// their sum. Wide enough for values printed to four decimals.
inline constexpr double kSimplexSumTolerance = 1e-3;
// Negative entries down to -kSimplexEntrySlack are clamped to zero.
inline constexpr double kSimplexEntrySlack = 1e-12;

// A probability distribution over a finite output space.
//
// The vector does not know which order its entries are in; by convention
// mechanisms store canonical color order and the operator code works on the
// preference-order view produced by ToPreferenceOrder.
class SimplexVector {
 public:
  static absl::StatusOr<SimplexVector> Create(std::vector<double> p);
  // Builds p_k = s_k - s_{k-1} from nondecreasing prefix sums ending near 1.
  static absl::StatusOr<SimplexVector> FromPrefixSums(
      std::span<const double> prefix);
  static SimplexVector PointMass(int q, int index);
  static SimplexVector Uniform(int q);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[i]; }
  std::span<const double> values() const { return p_; }

  // Canonical order -> preference order: out[i] = p[c(i)].
  SimplexVector ToPreferenceOrder(const Rainbow& rainbow) const;
  // Preference order -> canonical order (inverse of ToPreferenceOrder).
  SimplexVector ToCanonicalOrder(const Rainbow& rainbow) const;

  friend bool operator==(const SimplexVector&, const SimplexVector&) = default;

 private:
  explicit SimplexVector(std::vector<double> p) : p_(std::move(p)) {}

  std::vector<double> p_;
};

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CORE_SIMPLEX_VECTOR_H_
