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


#include "dpnewton/bench/experiment.h"

#include <algorithm>
#include <fstream>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/datasets/libsvm.h"
#include "dpnewton/datasets/normalize.h"
#include "dpnewton/datasets/synthetic.h"

namespace dpnewton {
namespace {

const std::vector<std::string>& KnownKinds() {
  static const auto* kinds = new std::vector<std::string>{
      "double-noise-newton", "minibatch-newton", "dp-gd",
      "dp-sgd",              "dp-gd-oracle",     "damped-newton",
      "cubic-newton",        "nesterov"};
  return *kinds;
}

bool IsSecondOrder(const std::string& kind) {
  return kind == "double-noise-newton" || kind == "minibatch-newton" ||
         kind == "damped-newton" || kind == "cubic-newton";
}

template <typename T>
absl::StatusOr<T> Get(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("spec field '", key, "': ", e.what()));
  }
}

}  // namespace

std::vector<int> DefaultTGrid(const std::string& kind) {
  if (IsSecondOrder(kind)) return {1, 2, 3, 5, 8, 12, 20};
  return {25, 50, 100, 200, 400, 800, 1600};
}

bool IsKnownAlgorithmKind(const std::string& kind) {
  const auto& kinds = KnownKinds();
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

absl::StatusOr<ExperimentSpec> ParseExperimentSpec(const nlohmann::json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("experiment spec must be a JSON object");
  }
  ExperimentSpec spec;
  if (j.contains("dataset")) {
    const nlohmann::json& ds = j.at("dataset");
    DatasetSpec& d = spec.dataset;
    DPNEWTON_ASSIGN_OR_RETURN(d.kind, Get<std::string>(ds, "kind", d.kind));
    DPNEWTON_ASSIGN_OR_RETURN(d.n, Get<int>(ds, "n", d.n));
    DPNEWTON_ASSIGN_OR_RETURN(d.d, Get<int>(ds, "d", d.d));
    DPNEWTON_ASSIGN_OR_RETURN(d.w_star_norm,
                              Get<double>(ds, "w_star_norm", d.w_star_norm));
    DPNEWTON_ASSIGN_OR_RETURN(d.seed, Get<uint64_t>(ds, "seed", d.seed));
    DPNEWTON_ASSIGN_OR_RETURN(d.path, Get<std::string>(ds, "path", d.path));
    DPNEWTON_ASSIGN_OR_RETURN(d.label_map,
                              Get<std::string>(ds, "label_map", d.label_map));
    if (d.kind != "synthetic" && d.kind != "libsvm") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown dataset kind '", d.kind, "'"));
    }
  }
  if (!j.contains("algorithms") || !j.at("algorithms").is_array() ||
      j.at("algorithms").empty()) {
    return absl::InvalidArgumentError("spec needs a nonempty 'algorithms' list");
  }
  for (const nlohmann::json& a : j.at("algorithms")) {
    AlgorithmSpec alg;
    DPNEWTON_ASSIGN_OR_RETURN(alg.kind, Get<std::string>(a, "kind", ""));
    if (!IsKnownAlgorithmKind(alg.kind)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown algorithm kind '", alg.kind, "'"));
    }
    DPNEWTON_ASSIGN_OR_RETURN(alg.name, Get<std::string>(a, "name", alg.kind));
    if (a.contains("params")) alg.params = a.at("params");
    DPNEWTON_ASSIGN_OR_RETURN(
        alg.t_grid, Get<std::vector<int>>(a, "t_grid", DefaultTGrid(alg.kind)));
    if (alg.t_grid.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("algorithm '", alg.name, "' has an empty T grid"));
    }
    for (const AlgorithmSpec& other : spec.algorithms) {
      if (other.name == alg.name) {
        return absl::InvalidArgumentError(
            absl::StrCat("duplicate algorithm name '", alg.name, "'"));
      }
    }
    spec.algorithms.push_back(std::move(alg));
  }
  DPNEWTON_ASSIGN_OR_RETURN(
      spec.epsilons, Get<std::vector<double>>(j, "epsilons", spec.epsilons));
  if (spec.epsilons.empty()) {
    return absl::InvalidArgumentError("epsilon grid is empty");
  }
  if (j.contains("delta") && !j.at("delta").is_null()) {
    DPNEWTON_ASSIGN_OR_RETURN(const double delta, Get<double>(j, "delta", 0.0));
    spec.delta = delta;
  }
  DPNEWTON_ASSIGN_OR_RETURN(spec.seeds, Get<int>(j, "seeds", spec.seeds));
  if (spec.seeds < 1) return absl::InvalidArgumentError("seeds must be >= 1");
  DPNEWTON_ASSIGN_OR_RETURN(spec.base_seed,
                            Get<uint64_t>(j, "base_seed", spec.base_seed));
  DPNEWTON_ASSIGN_OR_RETURN(spec.workers, Get<int>(j, "workers", spec.workers));
  DPNEWTON_ASSIGN_OR_RETURN(spec.trace_every,
                            Get<int>(j, "trace_every", spec.trace_every));
  DPNEWTON_ASSIGN_OR_RETURN(spec.write_traces,
                            Get<bool>(j, "write_traces", spec.write_traces));
  DPNEWTON_ASSIGN_OR_RETURN(const std::string accountant,
                            Get<std::string>(j, "accountant", "rdp"));
  if (accountant == "rdp") {
    spec.accounting = SgmAccounting::kRdp;
  } else if (accountant == "no-amplification") {
    spec.accounting = SgmAccounting::kNoAmplification;
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown accountant '", accountant, "'"));
  }
  return spec;
}

absl::StatusOr<ExperimentSpec> LoadExperimentSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": invalid JSON: ", e.what()));
  }
  return ParseExperimentSpec(j);
}

nlohmann::json ExperimentSpecToJson(const ExperimentSpec& spec) {
  nlohmann::json algorithms = nlohmann::json::array();
  for (const AlgorithmSpec& a : spec.algorithms) {
    algorithms.push_back({{"name", a.name},
                          {"kind", a.kind},
                          {"params", a.params},
                          {"t_grid", a.t_grid}});
  }
  const DatasetSpec& d = spec.dataset;
  nlohmann::json dataset = {{"kind", d.kind}};
  if (d.kind == "synthetic") {
    dataset.update({{"n", d.n},
                    {"d", d.d},
                    {"w_star_norm", d.w_star_norm},
                    {"seed", d.seed}});
  } else {
    dataset.update({{"path", d.path}, {"label_map", d.label_map}});
  }
  return {{"dataset", dataset},
          {"algorithms", algorithms},
          {"epsilons", spec.epsilons},
          {"delta", spec.delta ? nlohmann::json(*spec.delta) : nlohmann::json()},
          {"seeds", spec.seeds},
          {"base_seed", spec.base_seed},
          {"workers", spec.workers},
          {"trace_every", spec.trace_every},
          {"write_traces", spec.write_traces},
          {"accountant", spec.accounting == SgmAccounting::kRdp
                             ? "rdp"
                             : "no-amplification"}};
}

absl::StatusOr<Dataset> LoadDataset(const DatasetSpec& spec) {
  if (spec.kind == "synthetic") {
    return GenerateSynthetic(spec.n, spec.d,
                             UniformDirection(spec.d, spec.w_star_norm),
                             spec.seed);
  }
  DPNEWTON_ASSIGN_OR_RETURN(LibsvmData raw, ReadLibsvmFile(spec.path));
  absl::StatusOr<LabelMap> labels = spec.label_map.empty()
                                        ? LabelMap::Infer(raw.records)
                                        : LabelMap::Parse(spec.label_map);
  if (!labels.ok()) return labels.status();
  return NormalizeDataset(raw.records, raw.dim, *labels);
}

}  // namespace dpnewton
