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


#ifndef DPNEWTON_LOSSES_LOSS_ORACLE_H_
#define DPNEWTON_LOSSES_LOSS_ORACLE_H_

#include <string_view>

#include "dpnewton/numkit/linalg.h"

namespace dpnewton {

// Which matrix preconditions the gradient: the exact Hessian or the
// quadratic-upper-bound matrix.
enum class SoiKind { kHessian, kQu };

const char* SoiKindName(SoiKind kind);

struct LossRegularity {
  double L0 = 0.0;  // Lipschitz constant.
  double L1 = 0.0;  // Gradient Lipschitz constant.
  double L2 = 0.0;  // Hessian Lipschitz constant.
  double mu = 0.0;  // Strong convexity, 0 if merely convex.
};

// Empirical risk l(w) = (1/n) sum_i f(w, z_i) with derivatives.
class LossOracle {
 public:
  virtual ~LossOracle() = default;

  virtual int dim() const = 0;
  virtual int num_examples() const = 0;
  virtual const LossRegularity& regularity() const = 0;

  virtual double Value(const Vector& w) const = 0;
  virtual Vector Gradient(const Vector& w) const = 0;
  virtual SymmetricMatrix Hessian(const Vector& w) const = 0;

  // Second-order information. Oracles without a QU matrix return the Hessian.
  virtual SymmetricMatrix Soi(const Vector& w, SoiKind kind) const {
    (void)kind;
    return Hessian(w);
  }
};

}  // namespace dpnewton

#endif  // DPNEWTON_LOSSES_LOSS_ORACLE_H_
