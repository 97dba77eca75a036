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


#ifndef DPNEWTON_SPECTRA_ADAPTIVE_H_
#define DPNEWTON_SPECTRA_ADAPTIVE_H_

#include "dpnewton/numkit/linalg.h"
#include "dpnewton/numkit/random.h"

namespace dpnewton {

// (1/(4n)) / sqrt(2 rho_trace); zero when rho_trace is infinite.
double TraceNoiseSigma(int n, double rho_trace);

// max(trace(h) + N(0, sigma^2), 0) with sigma = TraceNoiseSigma(n, rho_trace).
// One scalar draw is taken from `rng`; `raw_draw` receives it when non-null.
double PrivateTrace(const SymmetricMatrix& h, int n, double rho_trace,
                    RandomSource& rng, double* raw_draw = nullptr);

// max(beta (trace_est T / (n^2 (1-gamma) rho theta))^(1/3), 1/n).
double AdaptiveLambda0(double trace_est, int n, int T, double rho,
                       double theta, double gamma, double beta);

}  // namespace dpnewton

#endif  // DPNEWTON_SPECTRA_ADAPTIVE_H_
