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


#ifndef DPNEWTON_BENCH_REFERENCE_H_
#define DPNEWTON_BENCH_REFERENCE_H_

#include "absl/status/statusor.h"
#include "dpnewton/losses/loss_oracle.h"

namespace dpnewton {

inline constexpr double kReferenceTolerance = 1e-10;
inline constexpr int kReferenceMaxIterations = 10000;
inline constexpr double kReferenceRidge = 1e-12;

struct ReferenceResult {
  Vector w;
  double loss = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  // Iterations that fell back to the QU step.
  int qu_steps = 0;
};

// Non-private minimizer of `loss`. Each iteration solves with the Hessian
// plus a 1e-12 ridge and backtracks until the Armijo condition holds; when
// that direction is not a descent direction the QU matrix is used instead.
// Stops once |grad| <= tol.
absl::StatusOr<ReferenceResult> ReferenceOptimum(
    const LossOracle& loss, double tol = kReferenceTolerance,
    const Vector& w0 = Vector());

}  // namespace dpnewton

#endif  // DPNEWTON_BENCH_REFERENCE_H_
