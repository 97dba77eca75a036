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


#include "dpnewton/bench/report.h"

#include <cstdio>
#include <map>
#include <set>

#include "absl/strings/str_cat.h"

namespace dpnewton {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string PrivacyUtilityReport(const std::vector<ResultRow>& rows) {
  std::string csv = "algorithm,epsilon,best_T,median_excess,runs\n";
  for (const SummaryRow& s : Summarize(rows)) {
    absl::StrAppend(&csv, s.algorithm, ",", Num(s.epsilon), ",", s.best_T, ",",
                    Num(s.median_excess), ",", s.runs, "\n");
  }
  return csv;
}

std::vector<RuntimeRatioRow> RuntimeRatios(const std::vector<ResultRow>& rows,
                                           const std::string& baseline) {
  std::map<std::pair<std::string, double>, SummaryRow> by_key;
  std::set<std::string> algorithms;
  std::set<double> epsilons;
  for (const SummaryRow& s : Summarize(rows)) {
    if (s.runs == 0) continue;
    by_key[{s.algorithm, s.epsilon}] = s;
  }
  for (const ResultRow& r : rows) {
    algorithms.insert(r.algorithm);
    epsilons.insert(r.epsilon);
  }
  std::vector<RuntimeRatioRow> out;
  for (const double eps : epsilons) {
    for (const std::string& alg : algorithms) {
      if (alg == baseline && algorithms.size() > 1) continue;
      RuntimeRatioRow row;
      row.epsilon = eps;
      row.algorithm = alg;
      row.baseline = baseline;
      if (auto it = by_key.find({alg, eps}); it != by_key.end()) {
        row.ours = it->second;
      }
      if (auto it = by_key.find({baseline, eps}); it != by_key.end()) {
        row.theirs = it->second;
      }
      if (!row.ours) {
        row.note = "no successful runs for algorithm";
      } else if (!row.theirs) {
        row.note = "no successful runs for baseline";
      } else if (!(row.ours->median_wall_ms > 0.0)) {
        row.note = "algorithm wall time is zero";
      } else {
        row.ratio = row.theirs->median_wall_ms / row.ours->median_wall_ms;
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::string RuntimeRatioReport(const std::vector<ResultRow>& rows,
                               const std::string& baseline) {
  std::string csv =
      "epsilon,algorithm,best_T,median_excess,median_wall_ms,baseline,"
      "baseline_best_T,baseline_median_excess,baseline_median_wall_ms,ratio,"
      "note\n";
  for (const RuntimeRatioRow& r : RuntimeRatios(rows, baseline)) {
    absl::StrAppend(&csv, Num(r.epsilon), ",", r.algorithm, ",");
    if (r.ours) {
      absl::StrAppend(&csv, r.ours->best_T, ",", Num(r.ours->median_excess),
                      ",", Num(r.ours->median_wall_ms), ",");
    } else {
      absl::StrAppend(&csv, ",,,");
    }
    absl::StrAppend(&csv, r.baseline, ",");
    if (r.theirs) {
      absl::StrAppend(&csv, r.theirs->best_T, ",",
                      Num(r.theirs->median_excess), ",",
                      Num(r.theirs->median_wall_ms), ",");
    } else {
      absl::StrAppend(&csv, ",,,");
    }
    absl::StrAppend(&csv, r.ratio ? Num(*r.ratio) : "", ",", r.note, "\n");
  }
  return csv;
}

}  // namespace dpnewton
