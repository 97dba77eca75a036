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


#ifndef DPNEWTON_CUBIC_CUBIC_MODEL_H_
#define DPNEWTON_CUBIC_CUBIC_MODEL_H_

#include "dpnewton/losses/loss_oracle.h"
#include "dpnewton/numkit/linalg.h"

namespace dpnewton {

struct FeasibleBall {
  Vector center;
  double radius = 1.0;

  double diameter() const { return 2.0 * radius; }
  Vector Project(const Vector& w) const {
    return ProjectBall(w, center, radius);
  }
};

// phi_M(v; w) = l(w) + <g, v - w> + (1/2)(v - w)^T H (v - w) + (M/6)|v - w|^3
// with g and H the gradient and Hessian of l at the anchor w.
struct CubicModel {
  Vector anchor;
  double value = 0.0;
  Vector gradient;
  SymmetricMatrix hessian;
  double M = 0.0;

  static CubicModel At(const LossOracle& loss, const Vector& w, double M);

  double Value(const Vector& v) const;
  Vector Gradient(const Vector& v) const;
  // H + (M/2)|v - w| I + (M / (2|v - w|)) (v - w)(v - w)^T.
  Matrix Hessian(const Vector& v) const;
};

}  // namespace dpnewton

#endif  // DPNEWTON_CUBIC_CUBIC_MODEL_H_
