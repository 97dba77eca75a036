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


#include "dpnewton/baselines/damped_newton.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/privacy/zcdp.h"

namespace dpnewton {

double DampedStep(double beta) {
  if (beta < 1e-8) return 1.0 - 0.5 * beta;
  return std::log1p(beta) / beta;
}

SymmetricMatrix SymmetricGaussian(int dim, double sigma, RandomSource& rng) {
  Matrix xi = Matrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = j; i < dim; ++i) xi(i, j) = sigma * rng.Gaussian();
  }
  return SymmetricMatrix::FromLowerTriangle(xi);
}

absl::StatusOr<Vector> PseudoInverseSolve(const SymmetricMatrix& h,
                                          const Vector& g, double cutoff) {
  DPNEWTON_ASSIGN_OR_RETURN(EigenDecomposition eig, EigSym(h));
  Vector coeffs = eig.eigenvectors.transpose() * g;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    coeffs[i] = std::abs(lambda) > cutoff ? coeffs[i] / lambda : 0.0;
  }
  return Vector(eig.eigenvectors * coeffs);
}

absl::StatusOr<RunTrace> RunDampedNewton(const LossOracle& loss,
                                         const DampedNewtonConfig& cfg,
                                         const RunOptions& options) {
  if (cfg.T < 1 || !(cfg.rho > 0.0)) {
    return absl::InvalidArgumentError("need T >= 1 and rho > 0");
  }
  const int n = loss.num_examples();
  const int d = loss.dim();
  const double half = 0.5 * cfg.rho / cfg.T;
  double sigma_g = 0.0;
  double sigma_h = 0.0;
  if (!cfg.noiseless) {
    DPNEWTON_ASSIGN_OR_RETURN(sigma_g,
                              GaussianSigma(loss.regularity().L0 / n, half));
    DPNEWTON_ASSIGN_OR_RETURN(sigma_h, GaussianSigma(0.25 / n, half));
  }

  RunTrace trace;
  trace.algorithm = "damped-newton";
  trace.is_private = false;
  TraceRecorder recorder(loss, options, cfg.T, &trace);
  const RandomSource root(cfg.seed);
  RandomSource grad_noise = root.Stream(NoiseRole::kGradient);
  RandomSource hess_noise = root.Stream(NoiseRole::kHessian);

  Vector w = cfg.w0.size() == 0 ? Vector::Zero(d) : cfg.w0;
  Stopwatch clock;
  recorder.Record(0, w, clock);
  clock.Start();
  for (int t = 0; t < cfg.T; ++t) {
    const Vector g = loss.Gradient(w);
    const SymmetricMatrix h = loss.Hessian(w);
    DPNEWTON_ASSIGN_OR_RETURN(const Vector exact_dir, PseudoInverseSolve(h, g));
    const double eta = DampedStep(exact_dir.norm());

    Vector noisy_g = g;
    SymmetricMatrix noisy_h = h;
    if (!cfg.noiseless) {
      noisy_g += grad_noise.GaussianVector(d, sigma_g);
      noisy_h += SymmetricGaussian(d, sigma_h, hess_noise);
      DPNEWTON_RETURN_IF_ERROR(
          trace.ledger.Record(absl::StrCat("t", t, "/gradient"), half));
      DPNEWTON_RETURN_IF_ERROR(
          trace.ledger.Record(absl::StrCat("t", t, "/hessian"), half));
    }
    DPNEWTON_ASSIGN_OR_RETURN(const Vector dir,
                              PseudoInverseSolve(noisy_h, noisy_g));
    w -= eta * dir;
    recorder.Record(t + 1, w, clock);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w);
  return trace;
}

}  // namespace dpnewton
