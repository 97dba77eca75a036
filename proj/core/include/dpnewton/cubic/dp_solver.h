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


#ifndef DPNEWTON_CUBIC_DP_SOLVER_H_
#define DPNEWTON_CUBIC_DP_SOLVER_H_

#include <optional>

#include "absl/status/statusor.h"
#include "dpnewton/cubic/cubic_model.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/numkit/random.h"

namespace dpnewton {

inline constexpr long long kMaxSolverSteps = 10'000'000;

struct DpSolverOptions {
  // Replaces the calibrated step count; the noise scale follows it.
  std::optional<long long> steps;
  // When false every step is exact; the step count is still calibrated.
  bool add_noise = true;
};

struct DpSolverResult {
  Vector output;
  long long steps = 0;
  double sigma = 0.0;
  bool capped = false;  // Calibrated count exceeded kMaxSolverSteps.
};

// Step count of the private subproblem solver:
//   N = ceil(2 L^2 rho / (mu d Delta^2)),
//   L = L0 + L1 D + (M/2) D^2,  Delta = (L0 + L1 D) / n.
double DpSolverSteps(const LossRegularity& reg, double M, double diameter,
                     int n, int d, double rho_tilde);

// Projected noisy gradient descent on phi_M over `ball`, started at the model
// anchor, with step 2/(mu (i + 2)), per-step noise variance
// N Delta^2 / (2 rho_tilde), and output sum_{i<N} 2(i+1)/(N(N+1)) theta_i.
absl::StatusOr<DpSolverResult> DpSolve(const CubicModel& model,
                                       double rho_tilde,
                                       const FeasibleBall& ball,
                                       const LossRegularity& reg, int n,
                                       RandomSource& rng,
                                       const DpSolverOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_CUBIC_DP_SOLVER_H_
