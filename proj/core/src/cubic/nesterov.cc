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


#include "dpnewton/cubic/nesterov.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/numkit/random.h"

namespace dpnewton {

int NesterovIterations(double diameter, double rho, int n, int d, double l0) {
  const double nn = static_cast<double>(n);
  const double t =
      std::ceil(std::pow(diameter * diameter * rho * nn * nn / (d * l0 * l0),
                         0.25));
  return std::max(1, static_cast<int>(t));
}

absl::StatusOr<RunTrace> RunNesterov(const LossOracle& loss,
                                     const NesterovConfig& cfg,
                                     const RunOptions& options) {
  if (!(cfg.rho > 0.0) || !(cfg.ball.radius > 0.0)) {
    return absl::InvalidArgumentError("need rho > 0 and radius > 0");
  }
  if (cfg.ball.center.size() != loss.dim()) {
    return absl::InvalidArgumentError("ball center has the wrong dimension");
  }
  const LossRegularity& reg = loss.regularity();
  const int n = loss.num_examples();
  const int d = loss.dim();
  const int T = cfg.T.value_or(
      NesterovIterations(cfg.ball.diameter(), cfg.rho, n, d, reg.L0));
  if (T < 1) return absl::InvalidArgumentError("T must be >= 1");
  const double gamma = 2.0 * reg.L1;
  const double sigma =
      cfg.noiseless ? 0.0 : reg.L0 * std::sqrt(T / (2.0 * cfg.rho)) / n;
  const double rho_step = cfg.rho / T;

  RunTrace trace;
  trace.algorithm = "nesterov";
  trace.is_private = !cfg.noiseless;
  TraceRecorder recorder(loss, options, T, &trace);
  RandomSource rng = RandomSource(cfg.seed).Stream(NoiseRole::kGradient);

  Vector w = cfg.ball.center;
  Vector w_ag = w;
  Stopwatch clock;
  recorder.Record(0, w_ag, clock);
  clock.Start();
  for (int t = 1; t <= T; ++t) {
    const double alpha = 2.0 / (t + 1.0);
    const double gamma_t = 4.0 * gamma / (t * (t + 1.0));
    const Vector w_md = (1.0 - alpha) * w_ag + alpha * w;
    Vector g = loss.Gradient(w_md);
    if (sigma > 0.0) g += rng.GaussianVector(d, sigma);
    w = cfg.ball.Project(w - (alpha / gamma_t) * g);
    w_ag = alpha * w + (1.0 - alpha) * w_ag;
    if (!cfg.noiseless) {
      DPNEWTON_RETURN_IF_ERROR(
          trace.ledger.Record(absl::StrCat("t", t, "/gradient"), rho_step));
    }
    recorder.Record(t, w_ag, clock);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w_ag);
  return trace;
}

}  // namespace dpnewton
