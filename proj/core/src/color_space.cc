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

#include "rainbow_dp/core/color_space.h"

#include <set>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

absl::StatusOr<ColorSpace> ColorSpace::Create(std::vector<std::string> colors) {
  if (colors.size() < 2) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("color space needs at least 2 colors, got ",
                                  colors.size()));
  }
  std::set<std::string> seen;
  for (const std::string& c : colors) {
    if (c.empty()) {
      return MakeError(ErrorKind::kInvalidInput, "empty color identifier");
    }
    if (!seen.insert(c).second) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("duplicate color '", c, "'"));
    }
  }
  return ColorSpace(std::move(colors));
}

ColorSpace ColorSpace::Numbered(int q) {
  std::vector<std::string> colors;
  colors.reserve(q);
  for (int i = 1; i <= q; ++i) colors.push_back(absl::StrCat(i));
  return ColorSpace(std::move(colors));
}

std::optional<int> ColorSpace::IndexOf(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (colors_[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace rainbow_dp
