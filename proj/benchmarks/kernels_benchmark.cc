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


// Microbenchmarks for the per-iteration kernels on the synthetic dataset.

#include <benchmark/benchmark.h>

#include "dpnewton/datasets/synthetic.h"
#include "dpnewton/losses/logistic.h"
#include "dpnewton/numkit/linalg.h"
#include "dpnewton/numkit/random.h"
#include "dpnewton/solvers/double_noise_newton.h"
#include "dpnewton/spectra/modifier.h"

namespace dpnewton {
namespace {

const Dataset& Data(int n, int d) {
  static auto* data = new Dataset(
      *GenerateSynthetic(n, d, UniformDirection(d, 10.0), 7));
  return *data;
}

Vector Point(int d) { return UniformDirection(d, 1.0); }

void BM_Gradient(benchmark::State& state) {
  const Dataset& data = Data(kSyntheticN, kSyntheticD);
  const Vector w = Point(data.d());
  for (auto _ : state) benchmark::DoNotOptimize(LogisticGradient(data, w));
}
BENCHMARK(BM_Gradient)->Unit(benchmark::kMillisecond);

void BM_Hessian(benchmark::State& state) {
  const Dataset& data = Data(kSyntheticN, kSyntheticD);
  const Vector w = Point(data.d());
  for (auto _ : state) {
    benchmark::DoNotOptimize(LogisticSoi(data, w, SoiKind::kHessian));
  }
}
BENCHMARK(BM_Hessian)->Unit(benchmark::kMillisecond);

void BM_ClipSolve(benchmark::State& state) {
  const Dataset& data = Data(kSyntheticN, kSyntheticD);
  const Vector w = Point(data.d());
  const SymmetricMatrix h = LogisticSoi(data, w, SoiKind::kHessian);
  const Vector g = LogisticGradient(data, w);
  for (auto _ : state) {
    auto psi = ModifiedSoi::Create(h, {ModifierKind::kClip, 0.01});
    benchmark::DoNotOptimize(psi->Solve(g));
  }
}
BENCHMARK(BM_ClipSolve)->Unit(benchmark::kMillisecond);

void BM_NewtonStep(benchmark::State& state) {
  const Dataset& data = Data(kSyntheticN, kSyntheticD);
  LogisticLoss loss(&data);
  NewtonConfig cfg;
  cfg.policy = Lambda0Policy::kAdaptive;
  cfg.budget = {.rho = 0.0129, .theta = 0.3, .gamma = 0.1, .T = 5};
  NewtonStreams streams(3);
  const Vector w = Point(data.d());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        DoubleNoiseNewtonStep(loss, cfg, w, streams, nullptr));
  }
}
BENCHMARK(BM_NewtonStep)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dpnewton

BENCHMARK_MAIN();
