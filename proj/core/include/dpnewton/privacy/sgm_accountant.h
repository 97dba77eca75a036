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


#ifndef DPNEWTON_PRIVACY_SGM_ACCOUNTANT_H_
#define DPNEWTON_PRIVACY_SGM_ACCOUNTANT_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "dpnewton/privacy/zcdp.h"

namespace dpnewton {

enum class SgmAccounting {
  // Renyi DP of the Poisson-subsampled Gaussian at integer orders 2..256.
  // Full-batch calibration (rate 1) uses the exact Gaussian privacy profile.
  kRdp,
  // Composes every step as a plain Gaussian mechanism under zCDP and ignores
  // the amplification from subsampling.
  kNoAmplification,
};

const char* SgmAccountingName(SgmAccounting accounting);

inline constexpr double kSgmSigmaLow = 0.3;
inline constexpr double kSgmSigmaHigh = 1e4;
inline constexpr double kSgmRelativeTolerance = 1e-3;

// RDP of one step of the sampled Gaussian mechanism at integer order `alpha`.
double SgmRdp(double sampling_rate, double sigma, int alpha);

// (epsilon, delta) guarantee of `steps` compositions, optimized over orders.
double SgmEpsilon(double sampling_rate, double sigma, int steps, double delta);

// Smallest sigma with Phi(1/(2s) - eps s) - e^eps Phi(-1/(2s) - eps s) <= delta,
// i.e. the tight calibration of a single sensitivity-1 Gaussian mechanism.
double AnalyticGaussianSigma(double epsilon, double delta);

// Noise multiplier such that `steps` runs of the subsampled Gaussian at
// `sampling_rate` satisfy `target`. Fails with FailedPrecondition when no
// sigma in [0.3, 1e4] does.
absl::StatusOr<double> SgmNoiseMultiplier(
    const ApproxDpBudget& target, double sampling_rate, int steps,
    SgmAccounting accounting = SgmAccounting::kRdp);

}  // namespace dpnewton

#endif  // DPNEWTON_PRIVACY_SGM_ACCOUNTANT_H_
