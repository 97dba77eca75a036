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


#ifndef DPNEWTON_BASELINES_DPGD_H_
#define DPNEWTON_BASELINES_DPGD_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "dpnewton/losses/dataset.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/privacy/sgm_accountant.h"
#include "dpnewton/privacy/zcdp.h"
#include "dpnewton/solvers/run_trace.h"

namespace dpnewton {

struct DpgdConfig {
  int T = 100;
  double rho = 1.0;
  std::optional<double> step;  // Defaults to 1 / L1.
  Vector w0;
  uint64_t seed = 0;
  bool noiseless = false;
};

// sigma = L0 sqrt(T) / (n sqrt(2 rho)).
double DpgdSigma(double l0, int n, int T, double rho);

// w_{t+1} = w_t - eta (grad l(w_t) + xi_t).
absl::StatusOr<RunTrace> RunDpgd(const LossOracle& loss, const DpgdConfig& cfg,
                                 const RunOptions& options = {});

// As RunDpgd with eta_t = argmin_{eta >= 0} l(w_t - eta g_t) on the noisy
// gradient. Reads the data for the line search, so the run is not private.
absl::StatusOr<RunTrace> RunDpgdOracle(const Dataset& data,
                                       const LossOracle& loss,
                                       const DpgdConfig& cfg,
                                       const RunOptions& options = {});

struct DpsgdConfig {
  int T = 100;
  ApproxDpBudget target;
  double sampling_rate = 0.02;
  std::optional<double> step;  // Defaults to 1 / L1.
  SgmAccounting accounting = SgmAccounting::kRdp;
  Vector w0;
  uint64_t seed = 0;
};

// Poisson-subsampled logistic gradient (1/(n p)) (sum_I grad f_i + N(0, s^2))
// with s the SGM noise multiplier for (target, p, T).
absl::StatusOr<RunTrace> RunDpsgd(const Dataset& data, const LossOracle& loss,
                                  const DpsgdConfig& cfg,
                                  const RunOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_BASELINES_DPGD_H_
