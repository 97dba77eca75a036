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


#ifndef DPNEWTON_NUMKIT_RANDOM_H_
#define DPNEWTON_NUMKIT_RANDOM_H_

#include <cstdint>
#include <string_view>

#include "dpnewton/numkit/linalg.h"

namespace dpnewton {

// Mixes `base` with a label into a fresh 64-bit seed.
uint64_t DeriveSeed(uint64_t base, std::string_view label);

// Named noise roles. Each role gets its own stream so that switching one noise
// source off leaves the draws of the others untouched.
enum class NoiseRole {
  kGradient,
  kDirection,
  kTrace,
  kGradientSubsample,
  kSoiSubsample,
  kHessian,
  kSolver,
  kData,
};

const char* NoiseRoleName(NoiseRole role);

// Counter-based generator: draw k is SplitMix64(seed + k * golden gamma).
// Gaussians come from Box-Muller on pairs of uniforms.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : seed_(seed) {}

  // Independent stream for `role`, derived from this source's seed only.
  RandomSource Stream(NoiseRole role) const;

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  uint64_t NextU64();
  // Uniform on the open interval (0, 1).
  double Uniform();
  double Gaussian();
  bool Bernoulli(double p);

  // Vector of `dim` i.i.d. N(0, 1) draws.
  Vector GaussianVector(int dim);
  Vector GaussianVector(int dim, double sigma);

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dpnewton

#endif  // DPNEWTON_NUMKIT_RANDOM_H_
