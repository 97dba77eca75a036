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


#ifndef DPNEWTON_BENCH_SWEEP_H_
#define DPNEWTON_BENCH_SWEEP_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpnewton/bench/experiment.h"
#include "dpnewton/bench/reference.h"
#include "dpnewton/losses/dataset.h"
#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/solvers/run_trace.h"
#include "nlohmann/json.hpp"

namespace dpnewton {

// Excess losses below this are reference round-off, not a bug.
inline constexpr double kExcessFloor = -1e-9;

struct ResultRow {
  std::string algorithm;
  double epsilon = 0.0;
  int T = 0;
  int seed = 0;
  double excess_loss = 0.0;  // NaN when the run failed.
  double wall_ms = 0.0;
  double rho_spent = 0.0;
  double rho_budget = 0.0;
  bool is_private = true;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
};

struct SummaryRow {
  std::string algorithm;
  double epsilon = 0.0;
  int best_T = 0;
  double median_excess = 0.0;
  double median_wall_ms = 0.0;
  int runs = 0;  // Successful seeds at best_T.
};

struct SweepOutput {
  std::vector<ResultRow> rows;  // Sorted by (algorithm, epsilon, T, seed).
  std::vector<SummaryRow> summary;
  nlohmann::json meta;
};

// Everything a sweep cell needs besides the algorithm config.
struct CellContext {
  const Dataset* data = nullptr;
  const LossOracle* loss = nullptr;
  double epsilon = 1.0;
  double delta = 1e-8;
  int T = 1;
  uint64_t seed = 0;
  SgmAccounting accounting = SgmAccounting::kRdp;
  RunOptions options;
};

// Noise seed of one cell, a pure function of the spec coordinates.
uint64_t CellSeed(uint64_t base_seed, const std::string& algorithm,
                  double epsilon, int T, int seed_index);
std::string CellName(const std::string& algorithm, double epsilon, int T,
                     int seed_index);

// Identifies the objective an algorithm optimizes, e.g. "logistic" or
// "ridge-logistic:mu=0.5:D=2".
absl::StatusOr<std::string> OracleKey(const AlgorithmSpec& alg);
absl::StatusOr<RunTrace> RunAlgorithm(const AlgorithmSpec& alg,
                                      const CellContext& cell);

double Median(std::vector<double> values);
// Per (algorithm, epsilon): argmin over T of the median excess.
std::vector<SummaryRow> Summarize(const std::vector<ResultRow>& rows);

// `out_dir` receives traces/<cell>.csv when nonempty and traces are enabled.
absl::StatusOr<SweepOutput> RunSweep(const ExperimentSpec& spec,
                                     const Dataset& data,
                                     const std::string& out_dir = "");

// results.csv excludes wall times so that reruns are byte-identical; those
// go to timings.csv.
std::string ResultsCsv(const std::vector<ResultRow>& rows);
std::string TimingsCsv(const std::vector<ResultRow>& rows);
std::string SummaryCsv(const std::vector<SummaryRow>& summary);

// Writes results.csv, timings.csv, summary.csv and meta.json.
absl::Status WriteSweep(const SweepOutput& output, const std::string& out_dir);

// Reads results.csv and timings.csv back into rows.
absl::StatusOr<std::vector<ResultRow>> ReadSweepResults(
    const std::string& dir);

}  // namespace dpnewton

#endif  // DPNEWTON_BENCH_SWEEP_H_
