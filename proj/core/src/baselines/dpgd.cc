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


#include "dpnewton/baselines/dpgd.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/baselines/line_search.h"
#include "dpnewton/losses/logistic.h"
#include "dpnewton/numkit/random.h"
#include "dpnewton/solvers/minibatch_newton.h"

namespace dpnewton {
namespace {

absl::Status ValidateGd(const DpgdConfig& cfg) {
  if (cfg.T < 0) return absl::InvalidArgumentError("T must be >= 0");
  if (!(cfg.rho > 0.0)) return absl::InvalidArgumentError("rho must be > 0");
  return absl::OkStatus();
}

// Shared loop of DP-GD and its line-search variant.
template <typename StepFn>
absl::StatusOr<RunTrace> GradientLoop(const LossOracle& loss,
                                      const DpgdConfig& cfg,
                                      const RunOptions& options,
                                      RunTrace trace, StepFn step_size) {
  DPNEWTON_RETURN_IF_ERROR(ValidateGd(cfg));
  const int n = loss.num_examples();
  const int d = loss.dim();
  const double sigma =
      cfg.noiseless || cfg.T == 0 ? 0.0
                                  : DpgdSigma(loss.regularity().L0, n, cfg.T,
                                              cfg.rho);
  TraceRecorder recorder(loss, options, cfg.T, &trace);
  RandomSource rng = RandomSource(cfg.seed).Stream(NoiseRole::kGradient);

  Vector w = cfg.w0.size() == 0 ? Vector::Zero(d) : cfg.w0;
  Stopwatch clock;
  recorder.Record(0, w, clock);
  clock.Start();
  for (int t = 0; t < cfg.T; ++t) {
    Vector g = loss.Gradient(w);
    if (sigma > 0.0) g += rng.GaussianVector(d, sigma);
    w -= step_size(w, g) * g;
    if (!cfg.noiseless) {
      DPNEWTON_RETURN_IF_ERROR(trace.ledger.Record(
          absl::StrCat("t", t, "/gradient"), cfg.rho / cfg.T));
    }
    recorder.Record(t + 1, w, clock);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w);
  return trace;
}

}  // namespace

double DpgdSigma(double l0, int n, int T, double rho) {
  return l0 * std::sqrt(static_cast<double>(T)) / (n * std::sqrt(2.0 * rho));
}

absl::StatusOr<RunTrace> RunDpgd(const LossOracle& loss, const DpgdConfig& cfg,
                                 const RunOptions& options) {
  RunTrace trace;
  trace.algorithm = "dp-gd";
  trace.is_private = !cfg.noiseless;
  const double eta = cfg.step.value_or(1.0 / loss.regularity().L1);
  return GradientLoop(loss, cfg, options, std::move(trace),
                      [eta](const Vector&, const Vector&) { return eta; });
}

absl::StatusOr<RunTrace> RunDpgdOracle(const Dataset& data,
                                       const LossOracle& loss,
                                       const DpgdConfig& cfg,
                                       const RunOptions& options) {
  RunTrace trace;
  trace.algorithm = "dp-gd-oracle";
  trace.is_private = false;
  const double ridge = loss.regularity().mu;
  return GradientLoop(
      loss, cfg, options, std::move(trace),
      [&data, ridge](const Vector& w, const Vector& g) {
        if (g.squaredNorm() == 0.0) return 0.0;
        const LogisticRay ray(data, w, g, ridge);
        return MinimizeOnRay([&ray](double eta) { return ray.Value(eta); },
                             [&ray](double eta) { return ray.Derivative(eta); });
      });
}

absl::StatusOr<RunTrace> RunDpsgd(const Dataset& data, const LossOracle& loss,
                                  const DpsgdConfig& cfg,
                                  const RunOptions& options) {
  if (cfg.T < 1) return absl::InvalidArgumentError("T must be >= 1");
  const int n = data.n();
  const int d = data.d();
  const double p = cfg.sampling_rate;
  DPNEWTON_ASSIGN_OR_RETURN(const double multiplier,
                            SgmNoiseMultiplier(cfg.target, p, cfg.T,
                                               cfg.accounting));
  DPNEWTON_ASSIGN_OR_RETURN(const double rho_total, ApproxDpToZcdp(cfg.target));
  const double eta = cfg.step.value_or(1.0 / loss.regularity().L1);
  const double l0 = loss.regularity().L0;

  RunTrace trace;
  trace.algorithm = "dp-sgd";
  trace.ledger.set_accountant(SgmAccountingName(cfg.accounting));
  TraceRecorder recorder(loss, options, cfg.T, &trace);
  const RandomSource root(cfg.seed);
  RandomSource sampler = root.Stream(NoiseRole::kGradientSubsample);
  RandomSource noise = root.Stream(NoiseRole::kGradient);

  Vector w = cfg.w0.size() == 0 ? Vector::Zero(d) : cfg.w0;
  Stopwatch clock;
  recorder.Record(0, w, clock);
  clock.Start();
  for (int t = 0; t < cfg.T; ++t) {
    const std::vector<int> batch = PoissonSubsample(n, p, sampler);
    Vector g = LogisticGradientSum(data, w, batch) +
               noise.GaussianVector(d, multiplier * l0);
    w -= (eta / (n * p)) * g;
    DPNEWTON_RETURN_IF_ERROR(trace.ledger.Record(
        absl::StrCat("t", t, "/gradient"), rho_total / cfg.T));
    recorder.Record(t + 1, w, clock);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w);
  return trace;
}

}  // namespace dpnewton
