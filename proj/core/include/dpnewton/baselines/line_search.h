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


#ifndef DPNEWTON_BASELINES_LINE_SEARCH_H_
#define DPNEWTON_BASELINES_LINE_SEARCH_H_

#include <functional>

namespace dpnewton {

inline constexpr double kLineSearchTolerance = 1e-10;

// Minimizes a convex function of eta >= 0 given its value and derivative.
// The bracket [0, hi] doubles hi until the derivative turns positive, then
// golden-section search narrows it to `tol` and a few secant steps on the
// derivative polish the result. Returns 0 when the derivative at 0 is >= 0.
double MinimizeOnRay(const std::function<double(double)>& value,
                     const std::function<double(double)>& derivative,
                     double tol = kLineSearchTolerance);

}  // namespace dpnewton

#endif  // DPNEWTON_BASELINES_LINE_SEARCH_H_
