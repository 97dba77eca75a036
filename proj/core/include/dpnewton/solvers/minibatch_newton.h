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


#ifndef DPNEWTON_SOLVERS_MINIBATCH_NEWTON_H_
#define DPNEWTON_SOLVERS_MINIBATCH_NEWTON_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "dpnewton/losses/dataset.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/numkit/random.h"
#include "dpnewton/privacy/sgm_accountant.h"
#include "dpnewton/privacy/zcdp.h"
#include "dpnewton/solvers/run_trace.h"
#include "dpnewton/spectra/modifier.h"

namespace dpnewton {

inline constexpr double kDefaultBatchRate = 0.02;

struct MinibatchNewtonConfig {
  SoiKind soi_kind = SoiKind::kHessian;
  ModifierKind mod_kind = ModifierKind::kClip;
  double lambda0 = 0.1;
  double theta = 0.3;
  int T = 10;
  double p_g = kDefaultBatchRate;
  double p_h = kDefaultBatchRate;
  ApproxDpBudget target;
  SgmAccounting accounting = SgmAccounting::kRdp;
  Vector w0;
  uint64_t seed = 0;
};

// Each index of [0, n) independently with probability `rate`.
std::vector<int> PoissonSubsample(int n, double rate, RandomSource& rng);

// Logistic double-noise Newton on Poisson subsamples. An empty gradient
// subsample contributes a zero gradient and an empty SOI subsample a zero
// matrix, both before noising and modification.
//
// The ledger holds the zCDP equivalent of the (epsilon, delta) target split
// evenly over iterations; the accountant tag names the SGM accountant.
absl::StatusOr<RunTrace> RunMinibatchNewton(const Dataset& data,
                                            const LossOracle& loss,
                                            const MinibatchNewtonConfig& cfg,
                                            const RunOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_SOLVERS_MINIBATCH_NEWTON_H_
