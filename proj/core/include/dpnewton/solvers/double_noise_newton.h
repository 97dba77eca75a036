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


#ifndef DPNEWTON_SOLVERS_DOUBLE_NOISE_NEWTON_H_
#define DPNEWTON_SOLVERS_DOUBLE_NOISE_NEWTON_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/numkit/random.h"
#include "dpnewton/privacy/ledger.h"
#include "dpnewton/privacy/zcdp.h"
#include "dpnewton/solvers/run_trace.h"
#include "dpnewton/spectra/modifier.h"

namespace dpnewton {

enum class Lambda0Policy { kFixed, kAdaptive };

struct NewtonConfig {
  SoiKind soi_kind = SoiKind::kHessian;
  ModifierKind mod_kind = ModifierKind::kClip;
  Lambda0Policy policy = Lambda0Policy::kFixed;
  double lambda0 = 0.1;  // Fixed policy.
  double beta = 1.0;     // Adaptive policy.
  // budget.gamma is only used by the adaptive policy.
  ZcdpBudget budget{.rho = 1.0, .theta = 0.3, .gamma = 0.1, .T = 10};
  Vector w0;  // Empty means the origin.
  uint64_t seed = 0;
  // Drops both noise terms and the trace noise; the run is then non-private
  // and its ledger stays empty.
  bool noiseless = false;
  // Use the general-loss sensitivity with the oracle's L1 instead of the
  // logistic closed form.
  bool general_sensitivity = false;

  // e.g. "hess-clip".
  std::string VariantName() const;
};

// Everything one iteration drew and computed.
struct NewtonStep {
  Vector gradient;         // Exact gradient at w.
  Vector gradient_noise;   // Raw N(0, I) draw.
  double sigma1 = 0.0;
  Vector noisy_gradient;   // gradient + sigma1 * gradient_noise.
  double trace_estimate = 0.0;
  double lambda0 = 0.0;
  double sensitivity = 0.0;
  double sigma2 = 0.0;
  Vector direction;        // Psi(H)^-1 noisy_gradient.
  Vector direction_noise;  // Raw N(0, I) draw.
  Vector next;             // w - direction + |noisy_gradient| sigma2 noise.
};

// Noise streams of one run, one per role.
struct NewtonStreams {
  explicit NewtonStreams(uint64_t seed);

  RandomSource gradient;
  RandomSource trace;
  RandomSource direction;
};

// One iteration of the double-noise method. Spends are appended to `ledger`
// (ignored when null or when the config is noiseless).
absl::StatusOr<NewtonStep> DoubleNoiseNewtonStep(const LossOracle& loss,
                                                 const NewtonConfig& cfg,
                                                 const Vector& w,
                                                 NewtonStreams& streams,
                                                 PrivacyLedger* ledger,
                                                 int iteration = 0);

absl::StatusOr<RunTrace> RunDoubleNoiseNewton(const LossOracle& loss,
                                              const NewtonConfig& cfg,
                                              const RunOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_SOLVERS_DOUBLE_NOISE_NEWTON_H_
