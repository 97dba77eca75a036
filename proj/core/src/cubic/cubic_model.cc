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


#include "dpnewton/cubic/cubic_model.h"

namespace dpnewton {

CubicModel CubicModel::At(const LossOracle& loss, const Vector& w, double M) {
  return CubicModel{w, loss.Value(w), loss.Gradient(w), loss.Hessian(w), M};
}

double CubicModel::Value(const Vector& v) const {
  const Vector s = v - anchor;
  const double r = s.norm();
  return value + gradient.dot(s) + 0.5 * s.dot(hessian.dense() * s) +
         M / 6.0 * r * r * r;
}

Vector CubicModel::Gradient(const Vector& v) const {
  const Vector s = v - anchor;
  return gradient + hessian.dense() * s + (0.5 * M * s.norm()) * s;
}

Matrix CubicModel::Hessian(const Vector& v) const {
  const Vector s = v - anchor;
  const double r = s.norm();
  Matrix h = hessian.dense();
  h.diagonal().array() += 0.5 * M * r;
  if (r > 0.0) h += (0.5 * M / r) * s * s.transpose();
  return h;
}

}  // namespace dpnewton
