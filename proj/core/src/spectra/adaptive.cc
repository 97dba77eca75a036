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


#include "dpnewton/spectra/adaptive.h"

#include <algorithm>
#include <cmath>

namespace dpnewton {

double TraceNoiseSigma(int n, double rho_trace) {
  if (std::isinf(rho_trace)) return 0.0;
  return (1.0 / (4.0 * n)) / std::sqrt(2.0 * rho_trace);
}

double PrivateTrace(const SymmetricMatrix& h, int n, double rho_trace,
                    RandomSource& rng, double* raw_draw) {
  const double z = rng.Gaussian();
  if (raw_draw != nullptr) *raw_draw = z;
  return std::max(h.Trace() + TraceNoiseSigma(n, rho_trace) * z, 0.0);
}

double AdaptiveLambda0(double trace_est, int n, int T, double rho,
                       double theta, double gamma, double beta) {
  const double nn = static_cast<double>(n);
  const double scaled =
      std::cbrt(trace_est * T / (nn * nn * (1.0 - gamma) * rho * theta));
  return std::max(beta * scaled, 1.0 / nn);
}

}  // namespace dpnewton
