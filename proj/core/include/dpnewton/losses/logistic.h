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


#ifndef DPNEWTON_LOSSES_LOGISTIC_H_
#define DPNEWTON_LOSSES_LOGISTIC_H_

#include <vector>

#include "absl/status/statusor.h"
#include "dpnewton/losses/dataset.h"
#include "dpnewton/losses/loss_oracle.h"

namespace dpnewton {

// Scalar primitives, all stable for |t| in the hundreds.
double Log1pExp(double t);             // log(1 + e^t)
double Sigmoid(double t);              // 1 / (1 + e^-t)
double LogisticHessianCoef(double s);  // 1 / (e^(-s/2) + e^(s/2))^2
double LogisticQuCoef(double s);       // tanh(s/2) / (2s), 1/4 at s = 0

// Averages over all examples of `data`.
double LogisticValue(const Dataset& data, const Vector& w);
Vector LogisticGradient(const Dataset& data, const Vector& w);
SymmetricMatrix LogisticSoi(const Dataset& data, const Vector& w,
                            SoiKind kind);

// Unnormalized sums over `indices`; an empty index set gives zeros.
Vector LogisticGradientSum(const Dataset& data, const Vector& w,
                           const std::vector<int>& indices);
SymmetricMatrix LogisticSoiSum(const Dataset& data, const Vector& w,
                               SoiKind kind, const std::vector<int>& indices);

// Per-example SOI H(w, (x, y)) of a single point.
SymmetricMatrix LogisticExampleSoi(const Vector& x, const Vector& w,
                                   SoiKind kind);

// l(w - eta * direction) as a function of eta, with Xw and X direction cached.
class LogisticRay {
 public:
  LogisticRay(const Dataset& data, const Vector& w, const Vector& direction,
              double ridge_mu = 0.0);

  double Value(double eta) const;
  double Derivative(double eta) const;

 private:
  const Dataset* data_;
  Vector margin_w_;    // y_i <x_i, w>
  Vector margin_dir_;  // y_i <x_i, direction>
  double ridge_mu_;
  double w_sq_;
  double w_dot_dir_;
  double dir_sq_;
};

// Plain logistic loss: L0 = 1, L1 = 1/4, L2 = 0.1, mu = 0.
class LogisticLoss : public LossOracle {
 public:
  explicit LogisticLoss(const Dataset* data);

  int dim() const override { return data_->d(); }
  int num_examples() const override { return data_->n(); }
  const LossRegularity& regularity() const override { return regularity_; }
  const Dataset& data() const { return *data_; }

  double Value(const Vector& w) const override;
  Vector Gradient(const Vector& w) const override;
  SymmetricMatrix Hessian(const Vector& w) const override;
  SymmetricMatrix Soi(const Vector& w, SoiKind kind) const override;

  void set_hessian_lipschitz(double l2) { regularity_.L2 = l2; }

 private:
  const Dataset* data_;
  LossRegularity regularity_;
};

// Logistic loss plus (mu/2)|w|^2. On a ball of diameter D the regularity is
// L0 = 1 + mu D, L1 = 1/4 + mu, L2 = 0.1.
class RidgeLogisticLoss : public LossOracle {
 public:
  static absl::StatusOr<RidgeLogisticLoss> Create(const Dataset* data,
                                                  double mu, double diameter);

  int dim() const override { return data_->d(); }
  int num_examples() const override { return data_->n(); }
  const LossRegularity& regularity() const override { return regularity_; }
  const Dataset& data() const { return *data_; }
  double mu() const { return regularity_.mu; }

  double Value(const Vector& w) const override;
  Vector Gradient(const Vector& w) const override;
  SymmetricMatrix Hessian(const Vector& w) const override;
  SymmetricMatrix Soi(const Vector& w, SoiKind kind) const override;

  void set_hessian_lipschitz(double l2) { regularity_.L2 = l2; }

 private:
  RidgeLogisticLoss(const Dataset* data, LossRegularity regularity)
      : data_(data), regularity_(regularity) {}

  const Dataset* data_;
  LossRegularity regularity_;
};

}  // namespace dpnewton

#endif  // DPNEWTON_LOSSES_LOGISTIC_H_
