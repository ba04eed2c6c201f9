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

#ifndef RAINBOW_DP_MECHANISM_MECHANISM_H_
#define RAINBOW_DP_MECHANISM_MECHANISM_H_

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "rainbow_dp/core/color_space.h"
#include "rainbow_dp/core/rainbow.h"
#include "rainbow_dp/core/simplex_vector.h"

namespace rainbow_dp {

class RainbowGraph;

// Output distribution per dataset, stored in canonical color order.
class Mechanism {
 public:
  using Assignment = std::map<std::string, SimplexVector, std::less<>>;

  explicit Mechanism(ColorSpace space) : space_(std::move(space)) {}
  static absl::StatusOr<Mechanism> Create(ColorSpace space,
                                          Assignment assignment);

  const ColorSpace& color_space() const { return space_; }
  const Assignment& assignment() const { return assignment_; }
  int size() const { return static_cast<int>(assignment_.size()); }

  // Fails with LengthMismatch when p does not match the color space.
  absl::Status Set(std::string node, SimplexVector p);
  const SimplexVector* Find(std::string_view node) const;

  friend bool operator==(const Mechanism&, const Mechanism&) = default;

 private:
  ColorSpace space_;
  Assignment assignment_;
};

// MissingNode unless every node of `graph` has a distribution; also checks
// the color spaces agree.
absl::Status CheckCovers(const Mechanism& mechanism, const RainbowGraph& graph);

// Per-rainbow boundary vectors m^c in canonical color order.
class BoundaryCondition {
 public:
  BoundaryCondition() = default;

  void Set(const Rainbow& rainbow, SimplexVector m) {
    values_.insert_or_assign(rainbow, std::move(m));
  }
  const SimplexVector* Find(const Rainbow& rainbow) const;
  const std::map<Rainbow, SimplexVector>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<Rainbow, SimplexVector> values_;
};

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_MECHANISM_MECHANISM_H_
