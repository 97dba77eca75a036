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


#ifndef DPNEWTON_CUBIC_CUBIC_NEWTON_H_
#define DPNEWTON_CUBIC_CUBIC_NEWTON_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "dpnewton/cubic/cubic_model.h"
#include "dpnewton/cubic/dp_solver.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/solvers/run_trace.h"

namespace dpnewton {

struct CubicConfig {
  std::optional<double> M;  // Defaults to the oracle's L2.
  int T = 8;
  double rho = 1.0;
  FeasibleBall ball;
  uint64_t seed = 0;
  bool noiseless = false;
  std::optional<long long> inner_steps;
};

// w_{t+1} = DPSolver(phi_M(.; w_t), rho / T) started from the ball center.
// Needs a strongly convex oracle; use RunNesterov for merely convex ones.
absl::StatusOr<RunTrace> RunCubicNewton(const LossOracle& loss,
                                        const CubicConfig& cfg,
                                        const RunOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_CUBIC_CUBIC_NEWTON_H_
