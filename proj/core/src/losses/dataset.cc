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


#include "dpnewton/losses/dataset.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace dpnewton {

absl::StatusOr<Dataset> Dataset::Create(Matrix features, Vector labels) {
  if (features.rows() < 1 || features.cols() < 1) {
    return absl::InvalidArgumentError("dataset needs n >= 1 and d >= 1");
  }
  if (labels.size() != features.rows()) {
    return absl::InvalidArgumentError(
        absl::StrCat("label count ", labels.size(), " does not match n = ",
                     features.rows()));
  }
  if (!features.allFinite()) {
    return absl::InvalidArgumentError("features contain non-finite values");
  }
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    if (labels[i] != 1.0 && labels[i] != -1.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("label of example ", i, " is ", labels[i],
                       ", expected +1 or -1"));
    }
    const double norm = features.row(i).norm();
    if (norm > 1.0 + kUnitBallSlack) {
      return absl::InvalidArgumentError(absl::StrCat(
          "example ", i, " has norm ", norm, " outside the unit ball"));
    }
  }
  return Dataset(std::move(features), std::move(labels));
}

Dataset Dataset::Subset(const std::vector<int>& indices) const {
  Matrix x(static_cast<Eigen::Index>(indices.size()), features_.cols());
  Vector y(static_cast<Eigen::Index>(indices.size()));
  for (size_t k = 0; k < indices.size(); ++k) {
    x.row(k) = features_.row(indices[k]);
    y[k] = labels_[indices[k]];
  }
  return Dataset(std::move(x), std::move(y));
}

Dataset Dataset::WithExample(const Vector& x, double y) const {
  Matrix features(features_.rows() + 1, features_.cols());
  features << features_, x.transpose();
  Vector labels(labels_.size() + 1);
  labels << labels_, y;
  return Dataset(std::move(features), std::move(labels));
}

}  // namespace dpnewton
