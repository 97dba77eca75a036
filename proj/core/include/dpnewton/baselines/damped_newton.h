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


#ifndef DPNEWTON_BASELINES_DAMPED_NEWTON_H_
#define DPNEWTON_BASELINES_DAMPED_NEWTON_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/numkit/random.h"
#include "dpnewton/solvers/run_trace.h"

namespace dpnewton {

inline constexpr double kPseudoInverseCutoff = 1e-8;

struct DampedNewtonConfig {
  int T = 10;
  double rho = 1.0;
  Vector w0;
  uint64_t seed = 0;
  bool noiseless = false;
};

// log(1 + beta) / beta, equal to 1 at beta = 0.
double DampedStep(double beta);

// Symmetric matrix with i.i.d. N(0, sigma^2) entries on and above the
// diagonal.
SymmetricMatrix SymmetricGaussian(int dim, double sigma, RandomSource& rng);

// Pseudo-inverse applied to `g`; eigenvalues with |lambda| <= cutoff are
// dropped.
absl::StatusOr<Vector> PseudoInverseSolve(const SymmetricMatrix& h,
                                          const Vector& g,
                                          double cutoff = kPseudoInverseCutoff);

// w_{t+1} = w_t - eta_t (H + Xi)^+ (grad + xi). Each iteration splits rho/T
// evenly between the gradient (sensitivity L0/n) and the Hessian (Frobenius
// sensitivity 1/(4n)). eta_t = DampedStep(|H^+ grad|) is computed from the
// exact Hessian and gradient, so the run is reported as non-private.
absl::StatusOr<RunTrace> RunDampedNewton(const LossOracle& loss,
                                         const DampedNewtonConfig& cfg,
                                         const RunOptions& options = {});

}  // namespace dpnewton

#endif  // DPNEWTON_BASELINES_DAMPED_NEWTON_H_
