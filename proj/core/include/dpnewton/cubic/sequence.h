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


#ifndef DPNEWTON_CUBIC_SEQUENCE_H_
#define DPNEWTON_CUBIC_SEQUENCE_H_

#include <optional>
#include <vector>

namespace dpnewton {

// a_0 = a0, a_{t+1} = beta0 + a_t^{3/2} / 2. Returns a_0, ..., a_T.
std::vector<double> SequenceRecursion(double beta0, double a0, int T);

// First t <= max_T with a_t <= threshold.
std::optional<int> StepsToThreshold(double beta0, double a0, double threshold,
                                    int max_T);

}  // namespace dpnewton

#endif  // DPNEWTON_CUBIC_SEQUENCE_H_
