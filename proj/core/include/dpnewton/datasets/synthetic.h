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


#ifndef DPNEWTON_DATASETS_SYNTHETIC_H_
#define DPNEWTON_DATASETS_SYNTHETIC_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "dpnewton/losses/dataset.h"

namespace dpnewton {

inline constexpr int kSyntheticN = 10000;
inline constexpr int kSyntheticD = 100;

// w* with all coordinates equal and |w*| = norm.
Vector UniformDirection(int d, double norm);

// n features drawn uniformly from the unit sphere (normalized Gaussians) and
// labels +1 with probability 1 / (1 + exp(-<x, w_star>)).
absl::StatusOr<Dataset> GenerateSynthetic(int n, int d, const Vector& w_star,
                                          uint64_t seed);

}  // namespace dpnewton

#endif  // DPNEWTON_DATASETS_SYNTHETIC_H_
