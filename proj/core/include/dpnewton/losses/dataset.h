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


#ifndef DPNEWTON_LOSSES_DATASET_H_
#define DPNEWTON_LOSSES_DATASET_H_

#include <vector>

#include "absl/status/statusor.h"
#include "dpnewton/numkit/linalg.h"

namespace dpnewton {

// Slack allowed on the unit-ball constraint for feature vectors.
inline constexpr double kUnitBallSlack = 1e-12;

// n labelled examples (x_i, y_i) with x_i in the unit ball and y_i = +-1.
// Features are stored row-wise.
class Dataset {
 public:
  Dataset() = default;

  static absl::StatusOr<Dataset> Create(Matrix features, Vector labels);

  int n() const { return static_cast<int>(features_.rows()); }
  int d() const { return static_cast<int>(features_.cols()); }
  const Matrix& features() const { return features_; }
  const Vector& labels() const { return labels_; }

  // Copy of the examples at `indices`, in order.
  Dataset Subset(const std::vector<int>& indices) const;

  // Adds one example without validation. Used to build neighbours in tests.
  Dataset WithExample(const Vector& x, double y) const;

 private:
  Dataset(Matrix features, Vector labels)
      : features_(std::move(features)), labels_(std::move(labels)) {}

  Matrix features_;
  Vector labels_;
};

}  // namespace dpnewton

#endif  // DPNEWTON_LOSSES_DATASET_H_
