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


#include "dpnewton/datasets/synthetic.h"

#include <cmath>

#include "dpnewton/losses/logistic.h"
#include "dpnewton/numkit/random.h"

namespace dpnewton {

Vector UniformDirection(int d, double norm) {
  return Vector::Constant(d, norm / std::sqrt(static_cast<double>(d)));
}

absl::StatusOr<Dataset> GenerateSynthetic(int n, int d, const Vector& w_star,
                                          uint64_t seed) {
  if (n < 1 || d < 1) {
    return absl::InvalidArgumentError("synthetic data needs n, d >= 1");
  }
  if (w_star.size() != d) {
    return absl::InvalidArgumentError("w_star has the wrong dimension");
  }
  RandomSource rng = RandomSource(seed).Stream(NoiseRole::kData);
  Matrix x(n, d);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    Vector v = rng.GaussianVector(d);
    double norm = v.norm();
    while (norm == 0.0) {
      v = rng.GaussianVector(d);
      norm = v.norm();
    }
    x.row(i) = (v / norm).transpose();
    y[i] = rng.Bernoulli(Sigmoid(x.row(i).dot(w_star))) ? 1.0 : -1.0;
  }
  return Dataset::Create(std::move(x), std::move(y));
}

}  // namespace dpnewton
