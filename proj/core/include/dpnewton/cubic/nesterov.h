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


#ifndef DPNEWTON_CUBIC_NESTEROV_H_
#define DPNEWTON_CUBIC_NESTEROV_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "dpnewton/cubic/cubic_model.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/solvers/run_trace.h"

namespace dpnewton {

struct NesterovConfig {
  FeasibleBall ball;
  double rho = 1.0;
  std::optional<int> T;  // Defaults to NesterovIterations.
  uint64_t seed = 0;
  bool noiseless = false;
};

// ceil((D^2 rho n^2 / (d L0^2))^(1/4)).
int NesterovIterations(double diameter, double rho, int n, int d, double l0);

// Accelerated projected gradient with alpha_t = 2/(t+1) and
// gamma_t = 4 gamma/(t(t+1)), gamma = 2 L1; each gradient carries Gaussian
// noise of variance L0^2 T / (2 rho n^2). Returns the aggregated iterate.
absl::StatusOr<RunTrace> RunNesterov(const LossOracle& loss,
                                     const NesterovConfig& cfg,
                                     const RunOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_CUBIC_NESTEROV_H_
