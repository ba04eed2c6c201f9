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

#ifndef RAINBOW_DP_CORE_PRIVACY_BUDGET_H_
#define RAINBOW_DP_CORE_PRIVACY_BUDGET_H_

#include "absl/status/statusor.h"

namespace rainbow_dp {

// An (epsilon, delta) pair. Both epsilon and e^epsilon are stored so that
// budgets given as e^epsilon = 2 keep the exact multiplier.
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(double epsilon, double delta);
  static absl::StatusOr<PrivacyBudget> FromExpEpsilon(double exp_epsilon,
                                                      double delta);

  double epsilon() const { return epsilon_; }
  double exp_epsilon() const { return exp_epsilon_; }
  double delta() const { return delta_; }

 private:
  PrivacyBudget(double epsilon, double exp_epsilon, double delta)
      : epsilon_(epsilon), exp_epsilon_(exp_epsilon), delta_(delta) {}

  double epsilon_;
  double exp_epsilon_;
  double delta_;
};

}  // namespace rainbow_dp

#endif  // RAINBOW_DP_CORE_PRIVACY_BUDGET_H_
