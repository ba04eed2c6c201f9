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

#include "rainbow_dp/core/rainbow.h"

#include <numeric>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

absl::StatusOr<Rainbow> Rainbow::Create(std::vector<int> order) {
  const int q = static_cast<int>(order.size());
  if (q == 0) return MakeError(ErrorKind::kInvalidInput, "rainbow is empty");
  std::vector<int> rank(q, -1);
  for (int k = 0; k < q; ++k) {
    const int c = order[k];
    if (c < 0 || c >= q || rank[c] != -1) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("rainbow (", absl::StrJoin(order, ","),
                                    ") is not a permutation"));
    }
    rank[c] = k;
  }
  return Rainbow(std::move(order), std::move(rank));
}

absl::StatusOr<Rainbow> Rainbow::FromNames(const ColorSpace& space,
                                           std::span<const std::string> names) {
  if (static_cast<int>(names.size()) != space.size()) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("rainbow lists ", names.size(),
                                  " colors, color space has ", space.size()));
  }
  std::vector<int> order;
  order.reserve(names.size());
  for (const std::string& n : names) {
    std::optional<int> index = space.IndexOf(n);
    if (!index.has_value()) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("unknown color '", n, "'"));
    }
    order.push_back(*index);
  }
  return Create(std::move(order));
}

Rainbow Rainbow::Identity(int q) {
  std::vector<int> order(q);
  std::iota(order.begin(), order.end(), 0);
  return Rainbow(order, order);
}

std::string Rainbow::ToString(const ColorSpace& space,
                              std::string_view separator) const {
  std::vector<std::string> names;
  names.reserve(order_.size());
  for (int c : order_) names.push_back(space.name(c));
  return absl::StrJoin(names, std::string(separator));
}

}  // namespace rainbow_dp
