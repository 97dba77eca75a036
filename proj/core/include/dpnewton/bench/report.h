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


#ifndef DPNEWTON_BENCH_REPORT_H_
#define DPNEWTON_BENCH_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "dpnewton/bench/sweep.h"

namespace dpnewton {

struct RuntimeRatioRow {
  double epsilon = 0.0;
  std::string algorithm;
  std::string baseline;
  std::optional<SummaryRow> ours;
  std::optional<SummaryRow> theirs;
  // baseline wall / algorithm wall, each at its best T.
  std::optional<double> ratio;
  std::string note;
};

// Median excess at the best T for every (algorithm, epsilon).
std::string PrivacyUtilityReport(const std::vector<ResultRow>& rows);

// One row per (epsilon, algorithm != baseline). Pairs with a side missing
// carry a note and no ratio.
std::vector<RuntimeRatioRow> RuntimeRatios(const std::vector<ResultRow>& rows,
                                           const std::string& baseline);
std::string RuntimeRatioReport(const std::vector<ResultRow>& rows,
                               const std::string& baseline = "dp-gd");

}  // namespace dpnewton

#endif  // DPNEWTON_BENCH_REPORT_H_
