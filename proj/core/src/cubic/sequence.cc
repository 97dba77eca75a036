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


#include "dpnewton/cubic/sequence.h"

#include <cmath>

namespace dpnewton {

std::vector<double> SequenceRecursion(double beta0, double a0, int T) {
  std::vector<double> a;
  a.reserve(T + 1);
  a.push_back(a0);
  for (int t = 0; t < T; ++t) {
    a.push_back(beta0 + 0.5 * std::pow(a.back(), 1.5));
  }
  return a;
}

std::optional<int> StepsToThreshold(double beta0, double a0, double threshold,
                                    int max_T) {
  const std::vector<double> a = SequenceRecursion(beta0, a0, max_T);
  for (int t = 0; t <= max_T; ++t) {
    if (a[t] <= threshold) return t;
  }
  return std::nullopt;
}

}  // namespace dpnewton
