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

#include "rainbow_dp/graph/morphism.h"

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {

absl::StatusOr<Morphism> Morphism::Create(
    RainbowGraph domain, RainbowGraph codomain,
    const std::map<std::string, std::string>& assignment) {
  std::vector<int> map(domain.num_nodes(), -1);
  for (const auto& [from, to] : assignment) {
    std::optional<int> d = domain.IndexOf(from);
    if (!d.has_value()) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("'", from, "' is not a domain node"));
    }
    std::optional<int> c = codomain.IndexOf(to);
    if (!c.has_value()) {
      return MakeError(ErrorKind::kInvalidInput,
                       absl::StrCat("'", to, "' is not a codomain node"));
    }
    map[*d] = *c;
  }
  for (int d = 0; d < domain.num_nodes(); ++d) {
    if (map[d] < 0) {
      return MakeError(ErrorKind::kMissingNode,
                       absl::StrCat("domain node '", domain.id(d),
                                    "' has no image"));
    }
  }
  return Morphism{std::move(domain), std::move(codomain), std::move(map)};
}

MorphismReport CheckMorphism(const Morphism& morphism) {
  const RainbowGraph& dom = morphism.domain;
  const RainbowGraph& cod = morphism.codomain;
  MorphismReport report;
  for (const auto& [a, b] : dom.edges()) {
    const int ga = morphism.map[a];
    const int gb = morphism.map[b];
    if (ga != gb && !cod.Adjacent(ga, gb)) {
      report.is_morphism = false;
      report.violations.push_back(
          {MorphismViolation::Kind::kEdge, dom.id(a), dom.id(b)});
    }
  }
  const bool same_space = dom.color_space() == cod.color_space();
  for (int d = 0; d < dom.num_nodes(); ++d) {
    if (!same_space || dom.preference(d) != cod.preference(morphism.map[d])) {
      report.is_rainbow_preserving = false;
      report.violations.push_back(
          {MorphismViolation::Kind::kRainbow, dom.id(d), ""});
    }
  }
  return report;
}

absl::StatusOr<Mechanism> Pullback(const Mechanism& codomain_mechanism,
                                   const Morphism& morphism) {
  Mechanism out(codomain_mechanism.color_space());
  for (int d = 0; d < morphism.domain.num_nodes(); ++d) {
    const std::string& image = morphism.codomain.id(morphism.map[d]);
    const SimplexVector* p = codomain_mechanism.Find(image);
    if (p == nullptr) {
      return MakeError(ErrorKind::kMissingNode,
                       absl::StrCat("codomain node '", image,
                                    "' has no distribution"));
    }
    if (absl::Status s = out.Set(morphism.domain.id(d), *p); !s.ok()) return s;
  }
  return out;
}

}  // namespace rainbow_dp
