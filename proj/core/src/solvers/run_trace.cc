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


#include "dpnewton/solvers/run_trace.h"

#include <cstdio>

namespace dpnewton {
namespace {

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string RunTrace::ToCsv() const {
  bool with_inner = false;
  for (const TraceRecord& r : records) with_inner |= r.inner_steps.has_value();
  std::string out = "t,loss,excess_loss,grad_norm,wall_ms,rho_spent";
  if (with_inner) out += ",inner_steps";
  out += "\n";
  for (const TraceRecord& r : records) {
    out += std::to_string(r.t);
    out += "," + FormatDouble(r.loss);
    out += "," + (r.excess_loss ? FormatDouble(*r.excess_loss) : "");
    out += "," + FormatDouble(r.grad_norm);
    out += "," + FormatDouble(r.wall_ms);
    out += "," + FormatDouble(r.rho_spent);
    if (with_inner) {
      out += ",";
      if (r.inner_steps) out += std::to_string(*r.inner_steps);
    }
    out += "\n";
  }
  return out;
}

void Stopwatch::Start() {
  if (running_) return;
  started_ = Clock::now();
  running_ = true;
}

void Stopwatch::Pause() {
  if (!running_) return;
  accumulated_ms_ +=
      std::chrono::duration<double, std::milli>(Clock::now() - started_)
          .count();
  running_ = false;
}

double Stopwatch::ElapsedMs() const {
  double ms = accumulated_ms_;
  if (running_) {
    ms += std::chrono::duration<double, std::milli>(Clock::now() - started_)
              .count();
  }
  return ms;
}

TraceRecorder::TraceRecorder(const LossOracle& loss, const RunOptions& options,
                             int T, RunTrace* trace)
    : loss_(loss), options_(options), T_(T), trace_(trace) {}

void TraceRecorder::Record(int t, const Vector& w, Stopwatch& clock,
                           std::optional<long long> inner_steps) {
  const int every = options_.trace_every < 1 ? 1 : options_.trace_every;
  if (t % every != 0 && t != T_) return;
  const bool was_running = clock.running();
  clock.Pause();
  TraceRecord record;
  record.t = t;
  record.loss = loss_.Value(w);
  if (options_.reference_loss) {
    record.excess_loss = record.loss - *options_.reference_loss;
  }
  record.grad_norm = loss_.Gradient(w).norm();
  record.wall_ms = clock.ElapsedMs();
  record.rho_spent = trace_->ledger.total();
  record.inner_steps = inner_steps;
  trace_->records.push_back(record);
  if (was_running) clock.Start();
}

}  // namespace dpnewton
