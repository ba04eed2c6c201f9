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

#ifndef RAINBOW_DP_CORE_RAINBOW_H_
#define RAINBOW_DP_CORE_RAINBOW_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rainbow_dp/core/color_space.h"

namespace rainbow_dp {

// A total preference order on the color space. Position k holds the
// canonical index of the k-th most preferred color (0-based).
class Rainbow {
 public:
  static absl::StatusOr<Rainbow> Create(std::vector<int> order);
  // Parses color names given most-preferred first.
  static absl::StatusOr<Rainbow> FromNames(const ColorSpace& space,
                                           std::span<const std::string> names);
  static Rainbow Identity(int q);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  // Canonical index of the color at preference rank `rank`.
  int operator[](int rank) const { return order_[rank]; }
  // Preference rank of canonical color `color`.
  int RankOf(int color) const { return rank_[color]; }

  // Names most-preferred first, joined with `separator`.
  std::string ToString(const ColorSpace& space,
                       std::string_view separator = ",") const;

  friend bool operator==(const Rainbow& a, const Rainbow& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const Rainbow& a, const Rainbow& b) {
    return a.order_ <=> b.order_;
  }

 private:
  Rainbow(std::vector<int> order, std::vector<int> rank)
      : order_(std::move(order)), rank_(std::move(rank)) {}

  std::vector<int> order_;
  std::vector<int> rank_;
};

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CORE_RAINBOW_H_
