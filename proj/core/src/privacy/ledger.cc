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


#include "dpnewton/privacy/ledger.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "dpnewton/privacy/zcdp.h"

namespace dpnewton {

absl::Status PrivacyLedger::Record(std::string label, double rho) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ledger entry '", label, "' has invalid rho ", rho));
  }
  const double t = sum_ + rho;
  if (std::abs(sum_) >= std::abs(rho)) {
    compensation_ += (sum_ - t) + rho;
  } else {
    compensation_ += (rho - t) + sum_;
  }
  sum_ = t;
  entries_.push_back({std::move(label), rho});
  return absl::OkStatus();
}

nlohmann::json PrivacyLedger::ToJson(double delta) const {
  nlohmann::json entries = nlohmann::json::array();
  for (const Entry& e : entries_) {
    entries.push_back({{"label", e.label}, {"rho", e.rho}});
  }
  return {{"entries", std::move(entries)},
          {"total_rho", total()},
          {"reported_epsilon", ZcdpToEpsilon(total(), delta)},
          {"delta", delta},
          {"accountant", accountant_}};
}

}  // namespace dpnewton
