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


#include "dpnewton/solvers/minibatch_newton.h"

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/losses/logistic.h"
#include "dpnewton/spectra/sensitivity.h"

namespace dpnewton {

std::vector<int> PoissonSubsample(int n, double rate, RandomSource& rng) {
  std::vector<int> picked;
  picked.reserve(static_cast<size_t>(n * rate * 1.2) + 8);
  for (int i = 0; i < n; ++i) {
    if (rng.Bernoulli(rate)) picked.push_back(i);
  }
  return picked;
}

absl::StatusOr<RunTrace> RunMinibatchNewton(const Dataset& data,
                                            const LossOracle& loss,
                                            const MinibatchNewtonConfig& cfg,
                                            const RunOptions& options) {
  DPNEWTON_RETURN_IF_ERROR(cfg.target.Validate());
  if (!(cfg.p_g > 0.0 && cfg.p_g <= 1.0 && cfg.p_h > 0.0 && cfg.p_h <= 1.0)) {
    return absl::InvalidArgumentError("sampling rates must lie in (0, 1]");
  }
  if (!(cfg.theta > 0.0 && cfg.theta < 1.0) || cfg.T < 1) {
    return absl::InvalidArgumentError("need 0 < theta < 1 and T >= 1");
  }
  const int n = data.n();
  const int d = data.d();
  const SpectralModifier modifier{cfg.mod_kind, cfg.lambda0};
  DPNEWTON_ASSIGN_OR_RETURN(SensitivityBound bound,
                            SensitivityMinibatch(n, cfg.p_h, modifier));

  const double eps = cfg.target.epsilon;
  const double delta = cfg.target.delta;
  DPNEWTON_ASSIGN_OR_RETURN(
      const double sigma1,
      SgmNoiseMultiplier({(1.0 - cfg.theta) * eps, (1.0 - cfg.theta) * delta},
                         cfg.p_g, cfg.T, cfg.accounting));
  DPNEWTON_ASSIGN_OR_RETURN(
      const double multiplier2,
      SgmNoiseMultiplier({cfg.theta * eps, cfg.theta * delta}, cfg.p_h, cfg.T,
                         cfg.accounting));
  const double sigma2 = bound.value * multiplier2;

  DPNEWTON_ASSIGN_OR_RETURN(const double rho_total, ApproxDpToZcdp(cfg.target));
  const double rho_iter = rho_total / cfg.T;

  RunTrace trace;
  trace.algorithm = absl::StrCat("minibatch-", SoiKindName(cfg.soi_kind), "-",
                                 ModifierKindName(cfg.mod_kind));
  trace.ledger.set_accountant(SgmAccountingName(cfg.accounting));
  TraceRecorder recorder(loss, options, cfg.T, &trace);

  const RandomSource root(cfg.seed);
  RandomSource sample_g = root.Stream(NoiseRole::kGradientSubsample);
  RandomSource sample_h = root.Stream(NoiseRole::kSoiSubsample);
  RandomSource grad_noise = root.Stream(NoiseRole::kGradient);
  RandomSource dir_noise = root.Stream(NoiseRole::kDirection);

  Vector w = cfg.w0.size() == 0 ? Vector::Zero(d) : cfg.w0;
  Stopwatch clock;
  recorder.Record(0, w, clock);
  clock.Start();
  for (int t = 0; t < cfg.T; ++t) {
    const std::vector<int> batch_g = PoissonSubsample(n, cfg.p_g, sample_g);
    const std::vector<int> batch_h = PoissonSubsample(n, cfg.p_h, sample_h);
    const double scale_g = 1.0 / (n * cfg.p_g);
    const double scale_h = 1.0 / (n * cfg.p_h);

    const Vector g = scale_g * LogisticGradientSum(data, w, batch_g);
    const SymmetricMatrix h =
        LogisticSoiSum(data, w, cfg.soi_kind, batch_h) * scale_h;
    DPNEWTON_ASSIGN_OR_RETURN(ModifiedSoi psi, ModifiedSoi::Create(h, modifier));
    const Vector noisy_g = g + (scale_g * sigma1) * grad_noise.GaussianVector(d);
    const Vector z = dir_noise.GaussianVector(d);
    w = w - psi.Solve(noisy_g) + (noisy_g.norm() * sigma2) * z;

    DPNEWTON_RETURN_IF_ERROR(trace.ledger.Record(
        absl::StrCat("t", t, "/gradient"), (1.0 - cfg.theta) * rho_iter));
    DPNEWTON_RETURN_IF_ERROR(trace.ledger.Record(
        absl::StrCat("t", t, "/direction"), cfg.theta * rho_iter));
    recorder.Record(t + 1, w, clock);
  }
  clock.Pause();
  trace.wall_ms = clock.ElapsedMs();
  trace.final_iterate = std::move(w);
  return trace;
}

}  // namespace dpnewton
