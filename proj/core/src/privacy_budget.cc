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

#include "rainbow_dp/core/privacy_budget.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "rainbow_dp/core/errors.h"

namespace rainbow_dp {
namespace {

absl::Status CheckDelta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("delta must lie in [0,1], got ", delta));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon,
                                                    double delta) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("epsilon must be finite and >= 0, got ",
                                  epsilon));
  }
  if (absl::Status s = CheckDelta(delta); !s.ok()) return s;
  return PrivacyBudget(epsilon, std::exp(epsilon), delta);
}

absl::StatusOr<PrivacyBudget> PrivacyBudget::FromExpEpsilon(double exp_epsilon,
                                                            double delta) {
  if (!(exp_epsilon >= 1.0) || !std::isfinite(exp_epsilon)) {
    return MakeError(ErrorKind::kInvalidInput,
                     absl::StrCat("e^epsilon must be finite and >= 1, got ",
                                  exp_epsilon));
  }
  if (absl::Status s = CheckDelta(delta); !s.ok()) return s;
  return PrivacyBudget(std::log(exp_epsilon), exp_epsilon, delta);
}

}  // namespace rainbow_dp
