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


#include "dpnewton/cubic/dp_solver.h"

#include <cmath>
#include <iostream>

#include "absl/strings/str_cat.h"

namespace dpnewton {

double DpSolverSteps(const LossRegularity& reg, double M, double diameter,
                     int n, int d, double rho_tilde) {
  const double lip = reg.L0 + reg.L1 * diameter + 0.5 * M * diameter * diameter;
  const double sens = (reg.L0 + reg.L1 * diameter) / n;
  return std::ceil(2.0 * lip * lip * rho_tilde / (reg.mu * d * sens * sens));
}

absl::StatusOr<DpSolverResult> DpSolve(const CubicModel& model,
                                       double rho_tilde,
                                       const FeasibleBall& ball,
                                       const LossRegularity& reg, int n,
                                       RandomSource& rng,
                                       const DpSolverOptions& options) {
  if (!(rho_tilde > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("rho must be positive, got ", rho_tilde));
  }
  if (!(reg.mu > 0.0)) {
    return absl::InvalidArgumentError(
        "the subproblem solver needs a strongly convex loss (mu > 0)");
  }
  const int d = static_cast<int>(model.anchor.size());
  const double diameter = ball.diameter();

  DpSolverResult result;
  if (options.steps) {
    result.steps = *options.steps;
  } else {
    const double steps = DpSolverSteps(reg, model.M, diameter, n, d, rho_tilde);
    if (!(steps <= static_cast<double>(kMaxSolverSteps))) {
      std::cerr << "warning: subproblem solver step count " << steps
                << " capped at " << kMaxSolverSteps << "\n";
      result.steps = kMaxSolverSteps;
      result.capped = true;
    } else {
      result.steps = std::max(1LL, static_cast<long long>(steps));
    }
  }
  const long long N = result.steps;
  if (N < 1) return absl::InvalidArgumentError("step count must be >= 1");
  if (options.add_noise) {
    const double sens = (reg.L0 + reg.L1 * diameter) / n;
    result.sigma = std::sqrt(N * sens * sens / (2.0 * rho_tilde));
  }

  const double norm = 2.0 / (static_cast<double>(N) * (N + 1.0));
  Vector theta = ball.Project(model.anchor);
  Vector average = Vector::Zero(d);
  for (long long i = 0; i < N; ++i) {
    average += (norm * (i + 1.0)) * theta;
    const double eta = 2.0 / (reg.mu * (i + 2.0));
    Vector step = model.Gradient(theta);
    if (result.sigma > 0.0) step += rng.GaussianVector(d, result.sigma);
    theta = ball.Project(theta - eta * step);
  }
  result.output = std::move(average);
  return result;
}

}  // namespace dpnewton
