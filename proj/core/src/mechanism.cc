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

#include "rainbow_dp/mechanism/mechanism.h"

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"
#include "rainbow_dp/graph/rainbow_graph.h"

namespace rainbow_dp {

absl::StatusOr<Mechanism> Mechanism::Create(ColorSpace space,
                                            Assignment assignment) {
  Mechanism out(std::move(space));
  for (auto& [node, p] : assignment) {
    if (absl::Status s = out.Set(node, std::move(p)); !s.ok()) return s;
  }
  return out;
}

absl::Status Mechanism::Set(std::string node, SimplexVector p) {
  if (p.size() != space_.size()) {
    return MakeError(ErrorKind::kLengthMismatch,
                     absl::StrCat("distribution for '", node, "' has ",
                                  p.size(), " entries, expected ",
                                  space_.size()));
  }
  assignment_.insert_or_assign(std::move(node), std::move(p));
  return absl::OkStatus();
}

const SimplexVector* Mechanism::Find(std::string_view node) const {
  auto it = assignment_.find(node);
  return it == assignment_.end() ? nullptr : &it->second;
}

absl::Status CheckCovers(const Mechanism& mechanism,
                         const RainbowGraph& graph) {
  if (!(mechanism.color_space() == graph.color_space())) {
    return MakeError(ErrorKind::kInvalidInput,
                     "mechanism and graph use different color spaces");
  }
  for (const std::string& id : graph.ids()) {
    if (mechanism.Find(id) == nullptr) {
      return MakeError(ErrorKind::kMissingNode,
                       absl::StrCat("no distribution for node '", id, "'"));
    }
  }
  return absl::OkStatus();
}

const SimplexVector* BoundaryCondition::Find(const Rainbow& rainbow) const {
  auto it = values_.find(rainbow);
  return it == values_.end() ? nullptr : &it->second;
}

}  // namespace rainbow_dp
