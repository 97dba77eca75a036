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


#include "dpnewton/losses/logistic.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace dpnewton {
namespace {

constexpr double kLogisticL2 = 0.1;
constexpr double kQuTaylorCutoff = 1e-4;

double SoiCoef(double s, SoiKind kind) {
  return kind == SoiKind::kHessian ? LogisticHessianCoef(s)
                                   : LogisticQuCoef(s);
}

// X^T diag(c) X.
SymmetricMatrix WeightedGram(const Matrix& x, const Vector& coef) {
  const Matrix scaled = coef.cwiseSqrt().asDiagonal() * x;
  Matrix gram = Matrix::Zero(x.cols(), x.cols());
  gram.selfadjointView<Eigen::Lower>().rankUpdate(scaled.transpose());
  return SymmetricMatrix::FromLowerTriangle(gram);
}

}  // namespace

const char* SoiKindName(SoiKind kind) {
  return kind == SoiKind::kHessian ? "hess" : "qu";
}

double Log1pExp(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double Sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

double LogisticHessianCoef(double s) {
  const double e = std::exp(-std::abs(s));
  return e / ((1.0 + e) * (1.0 + e));
}

double LogisticQuCoef(double s) {
  if (std::abs(s) < kQuTaylorCutoff) return 0.25 - s * s / 48.0;
  return std::tanh(0.5 * s) / (2.0 * s);
}

double LogisticValue(const Dataset& data, const Vector& w) {
  const Vector margins =
      (data.features() * w).cwiseProduct(data.labels());
  double total = 0.0;
  for (Eigen::Index i = 0; i < margins.size(); ++i) {
    total += Log1pExp(-margins[i]);
  }
  return total / data.n();
}

Vector LogisticGradient(const Dataset& data, const Vector& w) {
  const Vector margins =
      (data.features() * w).cwiseProduct(data.labels());
  Vector coef(margins.size());
  for (Eigen::Index i = 0; i < margins.size(); ++i) {
    coef[i] = -data.labels()[i] * Sigmoid(-margins[i]);
  }
  return data.features().transpose() * coef / data.n();
}

SymmetricMatrix LogisticSoi(const Dataset& data, const Vector& w,
                            SoiKind kind) {
  const Vector s = data.features() * w;
  Vector coef(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) coef[i] = SoiCoef(s[i], kind);
  return WeightedGram(data.features(), coef) * (1.0 / data.n());
}

Vector LogisticGradientSum(const Dataset& data, const Vector& w,
                           const std::vector<int>& indices) {
  Vector sum = Vector::Zero(data.d());
  for (int i : indices) {
    const double y = data.labels()[i];
    const double margin = y * data.features().row(i).dot(w);
    sum -= (y * Sigmoid(-margin)) * data.features().row(i).transpose();
  }
  return sum;
}

SymmetricMatrix LogisticSoiSum(const Dataset& data, const Vector& w,
                               SoiKind kind, const std::vector<int>& indices) {
  if (indices.empty()) return SymmetricMatrix::Zero(data.d());
  Matrix x(static_cast<Eigen::Index>(indices.size()), data.d());
  Vector coef(static_cast<Eigen::Index>(indices.size()));
  for (size_t k = 0; k < indices.size(); ++k) {
    x.row(k) = data.features().row(indices[k]);
    coef[k] = SoiCoef(x.row(k).dot(w), kind);
  }
  return WeightedGram(x, coef);
}

SymmetricMatrix LogisticExampleSoi(const Vector& x, const Vector& w,
                                   SoiKind kind) {
  return SymmetricMatrix::FromLowerTriangle(SoiCoef(x.dot(w), kind) * x *
                                            x.transpose());
}

LogisticRay::LogisticRay(const Dataset& data, const Vector& w,
                         const Vector& direction, double ridge_mu)
    : data_(&data),
      margin_w_((data.features() * w).cwiseProduct(data.labels())),
      margin_dir_((data.features() * direction).cwiseProduct(data.labels())),
      ridge_mu_(ridge_mu),
      w_sq_(w.squaredNorm()),
      w_dot_dir_(w.dot(direction)),
      dir_sq_(direction.squaredNorm()) {}

double LogisticRay::Value(double eta) const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < margin_w_.size(); ++i) {
    total += Log1pExp(-(margin_w_[i] - eta * margin_dir_[i]));
  }
  const double ridge =
      0.5 * ridge_mu_ * (w_sq_ - 2.0 * eta * w_dot_dir_ + eta * eta * dir_sq_);
  return total / data_->n() + ridge;
}

double LogisticRay::Derivative(double eta) const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < margin_w_.size(); ++i) {
    total += margin_dir_[i] * Sigmoid(-(margin_w_[i] - eta * margin_dir_[i]));
  }
  return total / data_->n() + ridge_mu_ * (eta * dir_sq_ - w_dot_dir_);
}

LogisticLoss::LogisticLoss(const Dataset* data)
    : data_(data),
      regularity_{.L0 = 1.0, .L1 = 0.25, .L2 = kLogisticL2, .mu = 0.0} {}

double LogisticLoss::Value(const Vector& w) const {
  return LogisticValue(*data_, w);
}

Vector LogisticLoss::Gradient(const Vector& w) const {
  return LogisticGradient(*data_, w);
}

SymmetricMatrix LogisticLoss::Hessian(const Vector& w) const {
  return LogisticSoi(*data_, w, SoiKind::kHessian);
}

SymmetricMatrix LogisticLoss::Soi(const Vector& w, SoiKind kind) const {
  return LogisticSoi(*data_, w, kind);
}

absl::StatusOr<RidgeLogisticLoss> RidgeLogisticLoss::Create(
    const Dataset* data, double mu, double diameter) {
  if (!(mu > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ridge mu must be positive, got ", mu));
  }
  if (!(diameter > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ball diameter must be positive, got ", diameter));
  }
  return RidgeLogisticLoss(data, {.L0 = 1.0 + mu * diameter,
                                  .L1 = 0.25 + mu,
                                  .L2 = kLogisticL2,
                                  .mu = mu});
}

double RidgeLogisticLoss::Value(const Vector& w) const {
  return LogisticValue(*data_, w) + 0.5 * regularity_.mu * w.squaredNorm();
}

Vector RidgeLogisticLoss::Gradient(const Vector& w) const {
  return LogisticGradient(*data_, w) + regularity_.mu * w;
}

SymmetricMatrix RidgeLogisticLoss::Hessian(const Vector& w) const {
  return LogisticSoi(*data_, w, SoiKind::kHessian).PlusIdentity(regularity_.mu);
}

SymmetricMatrix RidgeLogisticLoss::Soi(const Vector& w, SoiKind kind) const {
  return LogisticSoi(*data_, w, kind).PlusIdentity(regularity_.mu);
}

}  // namespace dpnewton
