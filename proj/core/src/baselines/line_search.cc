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


#include "dpnewton/baselines/line_search.h"

#include <algorithm>
#include <cmath>

namespace dpnewton {
namespace {

constexpr double kInvPhi = 0.6180339887498949;
constexpr double kMaxBracket = 1e12;
constexpr int kPolishSteps = 100;

}  // namespace

double MinimizeOnRay(const std::function<double(double)>& value,
                     const std::function<double(double)>& derivative,
                     double tol) {
  if (derivative(0.0) >= 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (derivative(hi) < 0.0 && hi < kMaxBracket) {
    lo = hi;
    hi *= 2.0;
  }

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double e = a + kInvPhi * (b - a);
  double fc = value(c);
  double fe = value(e);
  while (b - a > tol) {
    if (fc <= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - kInvPhi * (b - a);
      fc = value(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + kInvPhi * (b - a);
      fe = value(e);
    }
  }

  // The derivative is nondecreasing, so its root is refined by a bracketed
  // secant (Illinois) search. Values are flat near the minimum and the golden
  // bracket may miss the root by rounding, so the bracket is re-validated.
  double left = a;
  double right = b;
  double d_left = derivative(left);
  double d_right = derivative(right);
  for (double width = std::max(b - a, tol); d_left > 0.0 && left > 0.0;
       width *= 2.0) {
    left = std::max(0.0, left - width);
    d_left = derivative(left);
  }
  for (double width = std::max(b - a, tol); d_right < 0.0; width *= 2.0) {
    right += width;
    d_right = derivative(right);
  }
  double best = 0.5 * (a + b);
  double best_abs = std::abs(derivative(best));
  if (std::abs(d_left) < best_abs) {
    best = left;
    best_abs = std::abs(d_left);
  }
  if (std::abs(d_right) < best_abs) {
    best = right;
    best_abs = std::abs(d_right);
  }
  int side = 0;
  for (int i = 0; i < kPolishSteps && d_left < 0.0 && d_right > 0.0; ++i) {
    double x = right - d_right * (right - left) / (d_right - d_left);
    if (!(x > left && x < right)) x = 0.5 * (left + right);
    if (x == left || x == right) break;
    const double dx = derivative(x);
    if (std::abs(dx) < best_abs) {
      best = x;
      best_abs = std::abs(dx);
    }
    if (dx == 0.0) break;
    if (dx < 0.0) {
      left = x;
      d_left = dx;
      if (side == -1) d_right *= 0.5;
      side = -1;
    } else {
      right = x;
      d_right = dx;
      if (side == 1) d_left *= 0.5;
      side = 1;
    }
  }
  return best;
}

}  // namespace dpnewton
