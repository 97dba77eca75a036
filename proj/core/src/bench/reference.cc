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


#include "dpnewton/bench/reference.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace dpnewton {
namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;

Vector SolveShifted(const SymmetricMatrix& h, const Vector& g) {
  return h.PlusIdentity(kReferenceRidge).dense().ldlt().solve(g);
}

}  // namespace

absl::StatusOr<ReferenceResult> ReferenceOptimum(const LossOracle& loss,
                                                 double tol,
                                                 const Vector& w0) {
  if (!(tol > 0.0)) {
    return absl::InvalidArgumentError("tolerance must be positive");
  }
  ReferenceResult r;
  r.w = w0.size() == 0 ? Vector::Zero(loss.dim()) : w0;
  r.loss = loss.Value(r.w);
  Vector g = loss.Gradient(r.w);
  r.grad_norm = g.norm();
  while (r.grad_norm > tol) {
    if (r.iterations >= kReferenceMaxIterations) {
      return absl::DeadlineExceededError(absl::StrCat(
          "reference optimum did not reach |grad| <= ", tol, " in ",
          kReferenceMaxIterations, " iterations (|grad| = ", r.grad_norm,
          ")"));
    }
    ++r.iterations;
    Vector dir = SolveShifted(loss.Hessian(r.w), g);
    double slope = g.dot(dir);
    if (!(slope > 0.0) || !dir.allFinite()) {
      dir = SolveShifted(loss.Soi(r.w, SoiKind::kQu), g);
      slope = g.dot(dir);
      ++r.qu_steps;
    }
    double eta = 1.0;
    Vector next = r.w - dir;
    double next_loss = loss.Value(next);
    int backtracks = 0;
    while (next_loss > r.loss - kArmijo * eta * slope &&
           backtracks < kMaxBacktracks) {
      eta *= 0.5;
      next = r.w - eta * dir;
      next_loss = loss.Value(next);
      ++backtracks;
    }
    if (backtracks == kMaxBacktracks) {
      // Round-off floor: no decrease is representable any more. Accept the
      // full step if it does not increase the gradient norm.
      const Vector g_full = loss.Gradient(r.w - dir);
      if (g_full.norm() >= r.grad_norm) break;
      next = r.w - dir;
      next_loss = loss.Value(next);
    }
    r.w = std::move(next);
    r.loss = next_loss;
    g = loss.Gradient(r.w);
    r.grad_norm = g.norm();
  }
  if (r.grad_norm > tol) {
    return absl::FailedPreconditionError(absl::StrCat(
        "reference optimum stalled at |grad| = ", r.grad_norm, " > ", tol));
  }
  return r;
}

}  // namespace dpnewton
