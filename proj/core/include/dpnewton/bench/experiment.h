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


#ifndef DPNEWTON_BENCH_EXPERIMENT_H_
#define DPNEWTON_BENCH_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpnewton/losses/dataset.h"
#include "dpnewton/privacy/sgm_accountant.h"
#include "nlohmann/json.hpp"

namespace dpnewton {

inline constexpr double kDefaultWStarNorm = 10.0;

struct DatasetSpec {
  std::string kind = "synthetic";  // "synthetic" or "libsvm".
  int n = 10000;
  int d = 100;
  double w_star_norm = kDefaultWStarNorm;
  uint64_t seed = 1;
  std::string path;
  std::string label_map;  // Empty: infer {0,1} or {-1,+1}.
};

// Algorithm kinds: double-noise-newton, minibatch-newton, dp-gd, dp-sgd,
// dp-gd-oracle, damped-newton, cubic-newton, nesterov.
struct AlgorithmSpec {
  std::string name;
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  std::vector<int> t_grid;
};

struct ExperimentSpec {
  DatasetSpec dataset;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<double> epsilons = {0.01, 0.1, 1.0, 10.0};
  std::optional<double> delta;  // Defaults to 1/n^2.
  int seeds = 15;
  uint64_t base_seed = 0;
  int workers = 1;
  int trace_every = 1;
  bool write_traces = true;
  SgmAccounting accounting = SgmAccounting::kRdp;
};

// {1,2,3,5,8,12,20} for second-order kinds, {25,...,1600} otherwise.
std::vector<int> DefaultTGrid(const std::string& kind);
bool IsKnownAlgorithmKind(const std::string& kind);

absl::StatusOr<ExperimentSpec> ParseExperimentSpec(const nlohmann::json& j);
absl::StatusOr<ExperimentSpec> LoadExperimentSpec(const std::string& path);
nlohmann::json ExperimentSpecToJson(const ExperimentSpec& spec);

absl::StatusOr<Dataset> LoadDataset(const DatasetSpec& spec);

}  // namespace dpnewton

#endif  // DPNEWTON_BENCH_EXPERIMENT_H_
