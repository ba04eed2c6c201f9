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

#ifndef RAINBOW_DP_CORE_COLOR_SPACE_H_
#define RAINBOW_DP_CORE_COLOR_SPACE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace rainbow_dp {

// The finite output space V, in canonical color order. Immutable.
class ColorSpace {
 public:
  // Requires at least two distinct, nonempty identifiers.
  static absl::StatusOr<ColorSpace> Create(std::vector<std::string> colors);

  // Colors named "1".."q".
  static ColorSpace Numbered(int q);

  int size() const { return static_cast<int>(colors_.size()); }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::string& name(int index) const { return colors_[index]; }
  std::optional<int> IndexOf(std::string_view name) const;

  friend bool operator==(const ColorSpace&, const ColorSpace&) = default;

 private:
  explicit ColorSpace(std::vector<std::string> colors)
      : colors_(std::move(colors)) {}

  std::vector<std::string> colors_;
};

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CORE_COLOR_SPACE_H_
