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


#include "dpnewton/solvers/convergence.h"

#include <algorithm>
#include <cmath>

#include "dpnewton/base/status_macros.h"

namespace dpnewton {

ConvergenceCoefficients CoefficientsFromEigenvalue(double lambda_min, int n,
                                                   const NewtonConfig& cfg,
                                                   int rank) {
  const double l0 = cfg.lambda0;
  const double rho = cfg.budget.rho / cfg.budget.T;
  const double theta = cfg.budget.theta;
  const bool clip = cfg.mod_kind == ModifierKind::kClip;
  const double nn = static_cast<double>(n);

  ConvergenceCoefficients c;
  c.lambda_tilde_min = clip ? std::min(lambda_min, l0) : lambda_min + l0;
  const double den = clip ? 4.0 * nn * l0 * l0 - l0 : 4.0 * nn * l0 * l0 + l0;
  c.nu1 = 1.0 - c.lambda_tilde_min / l0 +
          std::sqrt(static_cast<double>(rank)) /
              (den * std::sqrt(2.0 * rho * theta));
  c.nu2 = 0.05 / c.lambda_tilde_min;
  c.delta = rank / (rho * (1.0 - theta) * nn * nn * c.lambda_tilde_min *
                    c.lambda_tilde_min);
  return c;
}

absl::StatusOr<ConvergenceCoefficients> LocalConvergenceCoefficients(
    const LossOracle& loss, const Vector& w, const NewtonConfig& cfg,
    int rank) {
  if (rank < 1) {
    return absl::InvalidArgumentError("rank must be at least 1");
  }
  DPNEWTON_ASSIGN_OR_RETURN(EigenDecomposition eig, EigSym(loss.Hessian(w)));
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] > kNonzeroEigenvalueTolerance) {
      return CoefficientsFromEigenvalue(eig.eigenvalues[i],
                                        loss.num_examples(), cfg, rank);
    }
  }
  return absl::FailedPreconditionError(
      "degenerate instance: every Hessian eigenvalue is numerically zero");
}

}  // namespace dpnewton
