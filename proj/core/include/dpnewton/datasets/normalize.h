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


#ifndef DPNEWTON_DATASETS_NORMALIZE_H_
#define DPNEWTON_DATASETS_NORMALIZE_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpnewton/datasets/libsvm.h"
#include "dpnewton/losses/dataset.h"

namespace dpnewton {

// Sends raw labels to +-1.
class LabelMap {
 public:
  // {0, 1} -> {-1, +1}.
  static LabelMap ZeroOne();
  // {-1, +1} unchanged.
  static LabelMap PlusMinusOne();
  // `positive` -> +1, every other label -> -1.
  static LabelMap OneVsRest(double positive);
  // Labels in `positive` -> +1, every other label -> -1.
  static LabelMap ClassSet(std::vector<double> positive);
  // ZeroOne or PlusMinusOne, whichever covers every label in `records`.
  static absl::StatusOr<LabelMap> Infer(const std::vector<RawRecord>& records);
  // "zero-one", "plus-minus-one", "one-vs-rest:K" or "classes:a,b,c".
  static absl::StatusOr<LabelMap> Parse(const std::string& spec);

  absl::StatusOr<double> Map(double raw) const;
  std::string Describe() const;

 private:
  enum class Kind { kZeroOne, kPlusMinusOne, kPositiveSet };

  LabelMap(Kind kind, std::vector<double> positive)
      : kind_(kind), positive_(std::move(positive)) {}

  Kind kind_;
  std::vector<double> positive_;
};

// Dense dataset with every feature vector divided by max(1, largest norm).
// Norms within 1e-12 of 1 count as inside the ball.
absl::StatusOr<Dataset> NormalizeDataset(const std::vector<RawRecord>& records,
                                         int dim, const LabelMap& labels);

// Sparse records of a dense dataset (zeros omitted).
std::vector<RawRecord> ToRecords(const Dataset& data);

}  // namespace dpnewton

#endif  // DPNEWTON_DATASETS_NORMALIZE_H_
