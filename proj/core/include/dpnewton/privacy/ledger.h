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


#ifndef DPNEWTON_PRIVACY_LEDGER_H_
#define DPNEWTON_PRIVACY_LEDGER_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "nlohmann/json.hpp"

namespace dpnewton {

// Linear zCDP composition: every mechanism invocation appends its rho.
class PrivacyLedger {
 public:
  struct Entry {
    std::string label;
    double rho = 0.0;
  };

  absl::Status Record(std::string label, double rho);

  // Compensated (Neumaier) sum of all entries.
  double total() const { return sum_ + compensation_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Free-form tag naming how the spends were derived, e.g. "zcdp".
  void set_accountant(std::string accountant) {
    accountant_ = std::move(accountant);
  }
  const std::string& accountant() const { return accountant_; }

  // {entries: [{label, rho}], total_rho, reported_epsilon, delta, accountant}
  nlohmann::json ToJson(double delta) const;

 private:
  std::vector<Entry> entries_;
  double sum_ = 0.0;
  double compensation_ = 0.0;
  std::string accountant_ = "zcdp";
};

}  // namespace dpnewton

#endif  // DPNEWTON_PRIVACY_LEDGER_H_
