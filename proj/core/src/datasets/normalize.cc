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


#include "dpnewton/datasets/normalize.h"

#include <algorithm>
#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace dpnewton {

LabelMap LabelMap::ZeroOne() { return LabelMap(Kind::kZeroOne, {}); }

LabelMap LabelMap::PlusMinusOne() { return LabelMap(Kind::kPlusMinusOne, {}); }

LabelMap LabelMap::OneVsRest(double positive) {
  return LabelMap(Kind::kPositiveSet, {positive});
}

LabelMap LabelMap::ClassSet(std::vector<double> positive) {
  std::sort(positive.begin(), positive.end());
  return LabelMap(Kind::kPositiveSet, std::move(positive));
}

absl::StatusOr<LabelMap> LabelMap::Infer(
    const std::vector<RawRecord>& records) {
  bool zero_one = true;
  bool plus_minus = true;
  for (const RawRecord& r : records) {
    zero_one &= r.label == 0.0 || r.label == 1.0;
    plus_minus &= r.label == -1.0 || r.label == 1.0;
  }
  if (plus_minus) return PlusMinusOne();
  if (zero_one) return ZeroOne();
  return absl::InvalidArgumentError(
      "labels are neither {0,1} nor {-1,+1}; give an explicit label map such "
      "as one-vs-rest:K");
}

absl::StatusOr<LabelMap> LabelMap::Parse(const std::string& spec) {
  if (spec == "zero-one") return ZeroOne();
  if (spec == "plus-minus-one") return PlusMinusOne();
  auto parse_list = [](const std::string& list)
      -> absl::StatusOr<std::vector<double>> {
    std::vector<double> out;
    const std::vector<std::string> parts = absl::StrSplit(list, ',');
    for (const std::string& part : parts) {
      char* end = nullptr;
      const double v = std::strtod(part.c_str(), &end);
      if (part.empty() || *end != '\0') {
        return absl::InvalidArgumentError(
            absl::StrCat("bad class label '", part, "'"));
      }
      out.push_back(v);
    }
    return out;
  };
  for (const std::string prefix : {"one-vs-rest:", "classes:"}) {
    if (spec.rfind(prefix, 0) == 0) {
      absl::StatusOr<std::vector<double>> classes =
          parse_list(spec.substr(prefix.size()));
      if (!classes.ok()) return classes.status();
      return ClassSet(*std::move(classes));
    }
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown label map '", spec,
                                                 "'"));
}

absl::StatusOr<double> LabelMap::Map(double raw) const {
  switch (kind_) {
    case Kind::kZeroOne:
      if (raw == 0.0) return -1.0;
      if (raw == 1.0) return 1.0;
      break;
    case Kind::kPlusMinusOne:
      if (raw == -1.0 || raw == 1.0) return raw;
      break;
    case Kind::kPositiveSet:
      return std::binary_search(positive_.begin(), positive_.end(), raw)
                 ? 1.0
                 : -1.0;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("label ", raw, " is not covered by map ", Describe()));
}

std::string LabelMap::Describe() const {
  switch (kind_) {
    case Kind::kZeroOne:
      return "zero-one";
    case Kind::kPlusMinusOne:
      return "plus-minus-one";
    case Kind::kPositiveSet:
      return absl::StrCat("classes:", absl::StrJoin(positive_, ","));
  }
  return "unknown";
}

absl::StatusOr<Dataset> NormalizeDataset(const std::vector<RawRecord>& records,
                                         int dim, const LabelMap& labels) {
  const Eigen::Index n = static_cast<Eigen::Index>(records.size());
  if (n < 1 || dim < 1) {
    return absl::InvalidArgumentError("dataset is empty");
  }
  Matrix x = Matrix::Zero(n, dim);
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const RawRecord& r = records[i];
    absl::StatusOr<double> label = labels.Map(r.label);
    if (!label.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("record ", i + 1, ": ", label.status().message()));
    }
    y[i] = *label;
    for (const auto& [index, value] : r.features) {
      if (index > dim) {
        return absl::InvalidArgumentError(absl::StrCat(
            "record ", i + 1, " has index ", index, " beyond d = ", dim));
      }
      x(i, index - 1) = value;
    }
  }
  const double max_norm = x.rowwise().norm().maxCoeff();
  if (max_norm > 1.0 + kUnitBallSlack) x /= max_norm;
  return Dataset::Create(std::move(x), std::move(y));
}

std::vector<RawRecord> ToRecords(const Dataset& data) {
  std::vector<RawRecord> out(data.n());
  for (int i = 0; i < data.n(); ++i) {
    out[i].label = data.labels()[i];
    for (int j = 0; j < data.d(); ++j) {
      const double v = data.features()(i, j);
      if (v != 0.0) out[i].features.emplace_back(j + 1, v);
    }
  }
  return out;
}

}  // namespace dpnewton
