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


#ifndef DPNEWTON_PRIVACY_ZCDP_H_
#define DPNEWTON_PRIVACY_ZCDP_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpnewton {

struct ApproxDpBudget {
  double epsilon = 1.0;
  double delta = 1e-6;

  absl::Status Validate() const;
};

// Total zCDP budget of a run plus the split used by the Newton solvers.
// `theta` is the share reserved for the search direction and `gamma` the part
// of that share spent on the private trace.
struct ZcdpBudget {
  double rho = 1.0;
  double theta = 0.3;
  double gamma = 0.0;
  int T = 1;

  absl::Status Validate() const;
};

// Per-iteration zCDP spends.
struct IterationShares {
  double gradient = 0.0;
  double trace = 0.0;
  double direction = 0.0;

  double total() const { return gradient + trace + direction; }
};

// rho = eps^2 / (4 log(1/delta) + 4 eps).
absl::StatusOr<double> ApproxDpToZcdp(const ApproxDpBudget& budget);

// eps = rho + 2 sqrt(rho log(1/delta)).
double ZcdpToEpsilon(double rho, double delta);

// Largest rho whose ZcdpToEpsilon is at most `epsilon`.
double EpsilonToZcdp(double epsilon, double delta);

// sigma = sensitivity / sqrt(2 rho).
absl::StatusOr<double> GaussianSigma(double sensitivity, double rho);

IterationShares SplitBudget(const ZcdpBudget& budget);

}  // namespace dpnewton

#endif  // DPNEWTON_PRIVACY_ZCDP_H_
