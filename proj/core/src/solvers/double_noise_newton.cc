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


#include "dpnewton/solvers/double_noise_newton.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/spectra/adaptive.h"
#include "dpnewton/spectra/sensitivity.h"

namespace dpnewton {
namespace {

absl::StatusOr<double> DirectionSensitivity(const LossOracle& loss,
                                            const NewtonConfig& cfg,
                                            const SpectralModifier& m) {
  const double n = loss.num_examples();
  if (cfg.general_sensitivity) {
    DPNEWTON_ASSIGN_OR_RETURN(SensitivityBound bound,
                              SensitivityGeneral(n, m, loss.regularity().L1));
    return bound.value;
  }
  DPNEWTON_ASSIGN_OR_RETURN(SensitivityBound bound, SensitivityLogistic(n, m));
  return bound.value;
}

IterationShares SharesFor(const NewtonConfig& cfg) {
  ZcdpBudget budget = cfg.budget;
  if (cfg.policy == Lambda0Policy::kFixed) budget.gamma = 0.0;
  return SplitBudget(budget);
}

}  // namespace

std::string NewtonConfig::VariantName() const {
  return absl::StrCat(soi_kind == SoiKind::kHessian ? "hess" : "qu", "-",
                      ModifierKindName(mod_kind));
}

NewtonStreams::NewtonStreams(uint64_t seed)
    : gradient(RandomSource(seed).Stream(NoiseRole::kGradient)),
      trace(RandomSource(seed).Stream(NoiseRole::kTrace)),
      direction(RandomSource(seed).Stream(NoiseRole::kDirection)) {}

absl::StatusOr<NewtonStep> DoubleNoiseNewtonStep(const LossOracle& loss,
                                                 const NewtonConfig& cfg,
                                                 const Vector& w,
                                                 NewtonStreams& streams,
                                                 PrivacyLedger* ledger,
                                                 int iteration) {
  const int n = loss.num_examples();
  const int d = loss.dim();
  const IterationShares shares = SharesFor(cfg);
  const bool adaptive = cfg.policy == Lambda0Policy::kAdaptive;
  const bool record = ledger != nullptr && !cfg.noiseless;
  NewtonStep step;

  // (1) Gradient noise.
  step.gradient = loss.Gradient(w);
  step.gradient_noise = streams.gradient.GaussianVector(d);
  if (!cfg.noiseless) {
    DPNEWTON_ASSIGN_OR_RETURN(
        step.sigma1,
        GaussianSigma(loss.regularity().L0 / n, shares.gradient));
  }
  step.noisy_gradient = step.gradient + step.sigma1 * step.gradient_noise;
  if (record) {
    DPNEWTON_RETURN_IF_ERROR(ledger->Record(
        absl::StrCat("t", iteration, "/gradient"), shares.gradient));
  }

  const SymmetricMatrix soi = loss.Soi(w, cfg.soi_kind);

  // (2) Private trace and (3) the lambda0 rule.
  step.lambda0 = cfg.lambda0;
  if (adaptive) {
    const double rho_trace =
        cfg.noiseless ? std::numeric_limits<double>::infinity() : shares.trace;
    step.trace_estimate = PrivateTrace(soi, n, rho_trace, streams.trace);
    step.lambda0 = AdaptiveLambda0(step.trace_estimate, n, cfg.budget.T,
                                   cfg.budget.rho, cfg.budget.theta,
                                   cfg.budget.gamma, cfg.beta);
    if (record) {
      DPNEWTON_RETURN_IF_ERROR(ledger->Record(
          absl::StrCat("t", iteration, "/trace"), shares.trace));
    }
  }

  // (4) sigma2 from lambda0.
  const SpectralModifier modifier{cfg.mod_kind, step.lambda0};
  if (!cfg.noiseless) {
    DPNEWTON_ASSIGN_OR_RETURN(step.sensitivity,
                              DirectionSensitivity(loss, cfg, modifier));
    DPNEWTON_ASSIGN_OR_RETURN(
        step.sigma2, GaussianSigma(step.sensitivity, shares.direction));
  }

  // (5) Direction and its noise.
  DPNEWTON_ASSIGN_OR_RETURN(ModifiedSoi psi, ModifiedSoi::Create(soi, modifier));
  step.direction = psi.Solve(step.noisy_gradient);
  step.direction_noise = streams.direction.GaussianVector(d);
  step.next = w - step.direction;
  if (step.sigma2 > 0.0) {
    step.next +=
        (step.noisy_gradient.norm() * step.sigma2) * step.direction_noise;
  }
  if (record) {
    DPNEWTON_RETURN_IF_ERROR(ledger->Record(
        absl::StrCat("t", iteration, "/direction"), shares.direction));
  }
  return step;
}

absl::StatusOr<RunTrace> RunDoubleNoiseNewton(const LossOracle& loss,
                                              const NewtonConfig& cfg,
                                              const RunOptions& options) {
  DPNEWTON_RETURN_IF_ERROR(cfg.budget.Validate());
  if (cfg.policy == Lambda0Policy::kFixed) {
    const SpectralModifier fixed{cfg.mod_kind, cfg.lambda0};
    DPNEWTON_RETURN_IF_ERROR(fixed.Validate());
  }
  RunTrace trace;
  trace.algorithm = cfg.VariantName();
  trace.is_private = !cfg.noiseless;
  TraceRecorder recorder(loss, options, cfg.budget.T, &trace);
  NewtonStreams streams(cfg.seed);

  Vector w = cfg.w0.size() == 0 ? Vector::Zero(loss.dim()) : cfg.w0;
  Stopwatch clock;
  recorder.Record(0, w, clock);
  clock.Start();
  for (int t = 0; t < cfg.budget.T; ++t) {
    absl::StatusOr<NewtonStep> step =
        DoubleNoiseNewtonStep(loss, cfg, w, streams, &trace.ledger, t);
    if (!step.ok()) {
      return absl::Status(step.status().code(),
                          absl::StrCat("iteration ", t, ": ",
                                       step.status().message()));
    }
    w = std::move(step->next);
    recorder.Record(t + 1, w, clock);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w);
  return trace;
}

}  // namespace dpnewton
