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


// Command-line driver for sweeps, reference optima and reports.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "dpnewton/bench/experiment.h"
#include "dpnewton/bench/reference.h"
#include "dpnewton/bench/report.h"
#include "dpnewton/bench/sweep.h"
#include "dpnewton/losses/logistic.h"
#include "nlohmann/json.hpp"

namespace dpnewton {
namespace {

int Fail(const absl::Status& status) {
  std::cerr << "bench: " << status << "\n";
  return 1;
}

int RunCommand(const std::string& spec_path, const std::string& out_dir,
               int workers) {
  absl::StatusOr<ExperimentSpec> spec = LoadExperimentSpec(spec_path);
  if (!spec.ok()) return Fail(spec.status());
  if (workers > 0) spec->workers = workers;
  absl::StatusOr<Dataset> data = LoadDataset(spec->dataset);
  if (!data.ok()) return Fail(data.status());
  absl::StatusOr<SweepOutput> out = RunSweep(*spec, *data, out_dir);
  if (!out.ok()) return Fail(out.status());
  if (absl::Status s = WriteSweep(*out, out_dir); !s.ok()) return Fail(s);
  int failed = 0;
  for (const ResultRow& r : out->rows) failed += r.ok() ? 0 : 1;
  std::cout << SummaryCsv(out->summary);
  std::cerr << out->rows.size() << " runs, " << failed << " failed; wrote "
            << out_dir << "\n";
  return 0;
}

int ReferenceCommand(const DatasetSpec& ds, double tol) {
  absl::StatusOr<Dataset> data = LoadDataset(ds);
  if (!data.ok()) return Fail(data.status());
  LogisticLoss loss(&*data);
  absl::StatusOr<ReferenceResult> ref = ReferenceOptimum(loss, tol);
  if (!ref.ok()) return Fail(ref.status());
  const nlohmann::json j = {{"n", data->n()},
                            {"d", data->d()},
                            {"loss", ref->loss},
                            {"grad_norm", ref->grad_norm},
                            {"iterations", ref->iterations},
                            {"w_norm", ref->w.norm()}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int ReportCommand(const std::string& in_dir, const std::string& kind,
                  const std::string& baseline) {
  absl::StatusOr<std::vector<ResultRow>> rows = ReadSweepResults(in_dir);
  if (!rows.ok()) return Fail(rows.status());
  if (kind == "privacy-utility") {
    std::cout << PrivacyUtilityReport(*rows);
  } else {
    std::cout << RuntimeRatioReport(*rows, baseline);
  }
  return 0;
}

}  // namespace
}  // namespace dpnewton

int main(int argc, char** argv) {
  CLI::App app{"Differentially private second-order optimization benchmarks"};
  app.require_subcommand(1);

  std::string spec_path, out_dir;
  int workers = 0;
  CLI::App* run = app.add_subcommand("run", "Run an experiment sweep");
  run->add_option("--spec", spec_path, "Experiment spec (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--workers", workers, "Override the spec's worker count")
      ->check(CLI::NonNegativeNumber);

  dpnewton::DatasetSpec ds;
  std::string data_path;
  double tol = dpnewton::kReferenceTolerance;
  CLI::App* ref =
      app.add_subcommand("reference", "Compute the non-private optimum");
  ref->add_option("--data", data_path,
                  "LIBSVM file, or 'synthetic' for the generated dataset")
      ->required();
  ref->add_option("--label-map", ds.label_map,
                  "zero-one, plus-minus-one, one-vs-rest:K or classes:a,b");
  ref->add_option("--tol", tol, "Gradient-norm tolerance")
      ->check(CLI::PositiveNumber);
  ref->add_option("--n", ds.n, "Synthetic sample count");
  ref->add_option("--d", ds.d, "Synthetic dimension");
  ref->add_option("--w-star-norm", ds.w_star_norm, "Synthetic |w*|");
  ref->add_option("--seed", ds.seed, "Synthetic data seed");

  std::string in_dir, kind, baseline = "dp-gd";
  CLI::App* report = app.add_subcommand("report", "Summarize a finished sweep");
  report->add_option("--in", in_dir, "Sweep output directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  report->add_option("--kind", kind, "Report kind")
      ->required()
      ->check(CLI::IsMember({"privacy-utility", "runtime-ratio"}));
  report->add_option("--baseline", baseline,
                     "Baseline algorithm name for runtime ratios");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return dpnewton::RunCommand(spec_path, out_dir, workers);
  if (ref->parsed()) {
    if (data_path == "synthetic") {
      ds.kind = "synthetic";
    } else {
      ds.kind = "libsvm";
      ds.path = data_path;
    }
    return dpnewton::ReferenceCommand(ds, tol);
  }
  return dpnewton::ReportCommand(in_dir, kind, baseline);
}
