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


#include "dpnewton/numkit/random.h"

#include <cmath>
#include <numbers>

namespace dpnewton {
namespace {

constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

uint64_t SplitMix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t DeriveSeed(uint64_t base, std::string_view label) {
  // FNV-1a over the label, then mixed with the base seed.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return SplitMix64(SplitMix64(base + kGoldenGamma) ^ h);
}

const char* NoiseRoleName(NoiseRole role) {
  switch (role) {
    case NoiseRole::kGradient:
      return "gradient";
    case NoiseRole::kDirection:
      return "direction";
    case NoiseRole::kTrace:
      return "trace";
    case NoiseRole::kGradientSubsample:
      return "subsample-gradient";
    case NoiseRole::kSoiSubsample:
      return "subsample-soi";
    case NoiseRole::kHessian:
      return "hessian";
    case NoiseRole::kSolver:
      return "solver";
    case NoiseRole::kData:
      return "data";
  }
  return "unknown";
}

RandomSource RandomSource::Stream(NoiseRole role) const {
  return RandomSource(DeriveSeed(seed_, NoiseRoleName(role)));
}

uint64_t RandomSource::NextU64() {
  ++counter_;
  return SplitMix64(seed_ + counter_ * kGoldenGamma);
}

double RandomSource::Uniform() {
  // 53 random bits, shifted by half an ulp so 0 is never returned.
  return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomSource::Gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = Uniform();
  const double u2 = Uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

bool RandomSource::Bernoulli(double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return Uniform() < p;
}

Vector RandomSource::GaussianVector(int dim) {
  Vector out(dim);
  for (int i = 0; i < dim; ++i) out[i] = Gaussian();
  return out;
}

Vector RandomSource::GaussianVector(int dim, double sigma) {
  return sigma * GaussianVector(dim);
}

}  // namespace dpnewton
