//
// Copyright 2026 The dpnewton Authors
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


#include "dpnewton/privacy/zcdp.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace dpnewton {

absl::Status ApproxDpBudget::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive, got ", epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  return absl::OkStatus();
}

absl::Status ZcdpBudget::Validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    return absl::InvalidArgumentError(
        absl::StrCat("rho must be positive, got ", rho));
  }
  if (!(theta > 0.0 && theta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("theta must lie in (0, 1), got ", theta));
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("gamma must lie in [0, 1), got ", gamma));
  }
  if (T < 1) {
    return absl::InvalidArgumentError(absl::StrCat("T must be >= 1, got ", T));
  }
  return absl::OkStatus();
}

absl::StatusOr<double> ApproxDpToZcdp(const ApproxDpBudget& budget) {
  if (absl::Status s = budget.Validate(); !s.ok()) return s;
  const double eps = budget.epsilon;
  const double log_inv_delta = -std::log(budget.delta);
  return eps * eps / (4.0 * log_inv_delta + 4.0 * eps);
}

double ZcdpToEpsilon(double rho, double delta) {
  return rho + 2.0 * std::sqrt(rho * std::log(1.0 / delta));
}

double EpsilonToZcdp(double epsilon, double delta) {
  // Solve (sqrt(rho) + sqrt(L))^2 = epsilon + L for sqrt(rho).
  const double l = std::log(1.0 / delta);
  const double root = std::sqrt(l + epsilon) - std::sqrt(l);
  return root * root;
}

absl::StatusOr<double> GaussianSigma(double sensitivity, double rho) {
  if (!(rho > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("rho must be positive, got ", rho));
  }
  if (sensitivity < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity must be nonnegative, got ", sensitivity));
  }
  return sensitivity / std::sqrt(2.0 * rho);
}

IterationShares SplitBudget(const ZcdpBudget& budget) {
  const double per_iter = budget.rho / budget.T;
  IterationShares shares;
  shares.gradient = (1.0 - budget.theta) * per_iter;
  shares.trace = budget.gamma * budget.theta * per_iter;
  shares.direction = (1.0 - budget.gamma) * budget.theta * per_iter;
  return shares;
}

}  // namespace dpnewton
