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


#include "dpnewton/cubic/cubic_newton.h"

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/numkit/random.h"

namespace dpnewton {

absl::StatusOr<RunTrace> RunCubicNewton(const LossOracle& loss,
                                        const CubicConfig& cfg,
                                        const RunOptions& options) {
  const LossRegularity& reg = loss.regularity();
  if (!(reg.mu > 0.0)) {
    return absl::FailedPreconditionError(
        "cubic Newton needs a strongly convex loss (mu > 0); use the "
        "accelerated Nesterov solver for merely convex losses");
  }
  if (cfg.T < 1 || !(cfg.rho > 0.0) || !(cfg.ball.radius > 0.0)) {
    return absl::InvalidArgumentError("need T >= 1, rho > 0 and radius > 0");
  }
  if (cfg.ball.center.size() != loss.dim()) {
    return absl::InvalidArgumentError("ball center has the wrong dimension");
  }
  const double M = cfg.M.value_or(reg.L2);
  const double rho_tilde = cfg.rho / cfg.T;

  RunTrace trace;
  trace.algorithm = "cubic-newton";
  trace.is_private = !cfg.noiseless;
  TraceRecorder recorder(loss, options, cfg.T, &trace);
  RandomSource rng = RandomSource(cfg.seed).Stream(NoiseRole::kSolver);
  DpSolverOptions solver_options{.steps = cfg.inner_steps,
                                 .add_noise = !cfg.noiseless};

  Vector w = cfg.ball.center;
  Stopwatch clock;
  recorder.Record(0, w, clock);
  clock.Start();
  for (int t = 0; t < cfg.T; ++t) {
    const CubicModel model = CubicModel::At(loss, w, M);
    DPNEWTON_ASSIGN_OR_RETURN(
        DpSolverResult inner,
        DpSolve(model, rho_tilde, cfg.ball, reg, loss.num_examples(), rng,
                solver_options));
    w = std::move(inner.output);
    if (!cfg.noiseless) {
      DPNEWTON_RETURN_IF_ERROR(
          trace.ledger.Record(absl::StrCat("t", t, "/solver"), rho_tilde));
    }
    recorder.Record(t + 1, w, clock, inner.steps);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w);
  return trace;
}

}  // namespace dpnewton
