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


#ifndef DPNEWTON_DATASETS_LIBSVM_H_
#define DPNEWTON_DATASETS_LIBSVM_H_

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace dpnewton {

// One line of a LIBSVM file. Feature indices are 1-based and strictly
// increasing.
struct RawRecord {
  double label = 0.0;
  std::vector<std::pair<int, double>> features;

  bool operator==(const RawRecord&) const = default;
};

struct LibsvmData {
  std::vector<RawRecord> records;
  int dim = 0;  // Largest index seen.
};

// "label idx:val idx:val ..." per line. Blank lines and lines starting with
// '#' are skipped. Errors name the offending line (1-based).
absl::StatusOr<LibsvmData> ParseLibsvm(std::istream& in);
absl::StatusOr<LibsvmData> ParseLibsvmString(const std::string& text);
absl::StatusOr<LibsvmData> ReadLibsvmFile(const std::string& path);

// Writes records with %.17g so that parsing the result is exact.
std::string FormatLibsvm(const std::vector<RawRecord>& records);

}  // namespace dpnewton

#endif  // DPNEWTON_DATASETS_LIBSVM_H_
