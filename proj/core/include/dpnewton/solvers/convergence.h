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


#ifndef DPNEWTON_SOLVERS_CONVERGENCE_H_
#define DPNEWTON_SOLVERS_CONVERGENCE_H_

#include "absl/status/statusor.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/solvers/double_noise_newton.h"

namespace dpnewton {

// Local rate coefficients of the Hessian variants, up to constants:
//   nu1   = 1 - lt / lambda0 + sqrt(rank) / (den sqrt(2 rho theta))
//   nu2   = 0.05 / lt
//   Delta = rank / (rho (1 - theta) n^2 lt^2)
// where rho is the per-iteration budget, den = 4 n lambda0^2 -+ lambda0 for
// clip / add, and lt is min(lambda_min, lambda0) for clip and
// lambda_min + lambda0 for add, lambda_min being the smallest nonzero
// eigenvalue of the Hessian at w.
struct ConvergenceCoefficients {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double delta = 0.0;
  double lambda_tilde_min = 0.0;
};

inline constexpr double kNonzeroEigenvalueTolerance = 1e-10;

absl::StatusOr<ConvergenceCoefficients> LocalConvergenceCoefficients(
    const LossOracle& loss, const Vector& w, const NewtonConfig& cfg,
    int rank);

// Same, from a known smallest nonzero eigenvalue.
ConvergenceCoefficients CoefficientsFromEigenvalue(double lambda_min, int n,
                                                   const NewtonConfig& cfg,
                                                   int rank);

}  // namespace dpnewton

#endif  // DPNEWTON_SOLVERS_CONVERGENCE_H_
