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


#ifndef DPNEWTON_SOLVERS_RUN_TRACE_H_
#define DPNEWTON_SOLVERS_RUN_TRACE_H_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/numkit/linalg.h"
#include "dpnewton/privacy/ledger.h"

namespace dpnewton {

struct TraceRecord {
  int t = 0;
  double loss = 0.0;
  std::optional<double> excess_loss;
  double grad_norm = 0.0;
  double wall_ms = 0.0;
  double rho_spent = 0.0;
  std::optional<long long> inner_steps;
};

// Output of every solver: per-iteration records, the final iterate and the
// privacy ledger.
struct RunTrace {
  std::string algorithm;
  std::vector<TraceRecord> records;
  Vector final_iterate;
  PrivacyLedger ledger;
  bool is_private = true;
  // Solver wall time, excluding trace evaluation.
  double wall_ms = 0.0;

  double final_loss() const { return records.back().loss; }
  std::optional<double> final_excess() const {
    return records.back().excess_loss;
  }

  // Columns t, loss, excess_loss, grad_norm, wall_ms, rho_spent and, when any
  // record carries it, inner_steps.
  std::string ToCsv() const;
};

struct RunOptions {
  // min_w l(w); enables the excess_loss column.
  std::optional<double> reference_loss;
  // Evaluate the loss every k iterations (the last one is always recorded).
  int trace_every = 1;
};

// Wall clock that can be paused while the trace is evaluated.
class Stopwatch {
 public:
  void Start();
  void Pause();
  double ElapsedMs() const;
  bool running() const { return running_; }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point started_;
  double accumulated_ms_ = 0.0;
  bool running_ = false;
};

// Shared bookkeeping for solver loops.
class TraceRecorder {
 public:
  TraceRecorder(const LossOracle& loss, const RunOptions& options, int T,
                RunTrace* trace);

  // Records iterate `w` after `t` iterations if `t` is due. Pauses `clock`
  // around the evaluation.
  void Record(int t, const Vector& w, Stopwatch& clock,
              std::optional<long long> inner_steps = std::nullopt);

 private:
  const LossOracle& loss_;
  const RunOptions& options_;
  int T_;
  RunTrace* trace_;
};

}  // namespace dpnewton

#endif  // DPNEWTON_SOLVERS_RUN_TRACE_H_
