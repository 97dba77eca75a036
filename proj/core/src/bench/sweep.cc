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


#include "dpnewton/bench/sweep.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <thread>
#include <tuple>

#include <Eigen/Core>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "dpnewton/base/status_macros.h"
#include "dpnewton/baselines/damped_newton.h"
#include "dpnewton/baselines/dpgd.h"
#include "dpnewton/cubic/cubic_newton.h"
#include "dpnewton/cubic/nesterov.h"
#include "dpnewton/losses/logistic.h"
#include "dpnewton/numkit/random.h"
#include "dpnewton/privacy/zcdp.h"
#include "dpnewton/solvers/double_noise_newton.h"
#include "dpnewton/solvers/minibatch_newton.h"

#ifndef DPNEWTON_VERSION_STRING
#define DPNEWTON_VERSION_STRING "unknown"
#endif

namespace dpnewton {
namespace {

// Shortest representation that parses back to the same double.
std::string Num(double v) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

absl::StatusOr<double> ParamDouble(const nlohmann::json& params,
                                   const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  const nlohmann::json& v = params.at(key);
  if (!v.is_number()) {
    return absl::InvalidArgumentError(
        absl::StrCat("param '", key, "' must be a number"));
  }
  return v.get<double>();
}

absl::StatusOr<std::optional<double>> ParamOptional(
    const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || params.at(key).is_null()) {
    return std::optional<double>();
  }
  DPNEWTON_ASSIGN_OR_RETURN(const double v, ParamDouble(params, key, 0.0));
  return std::optional<double>(v);
}

absl::StatusOr<std::string> ParamString(const nlohmann::json& params,
                                        const char* key,
                                        const std::string& fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat("param '", key, "' must be a string"));
  }
  return params.at(key).get<std::string>();
}

absl::StatusOr<SoiKind> ParseSoi(const nlohmann::json& params) {
  DPNEWTON_ASSIGN_OR_RETURN(const std::string s,
                            ParamString(params, "soi", "hess"));
  if (s == "hess") return SoiKind::kHessian;
  if (s == "qu") return SoiKind::kQu;
  return absl::InvalidArgumentError(absl::StrCat("unknown soi '", s, "'"));
}

absl::StatusOr<ModifierKind> ParseModifier(const nlohmann::json& params) {
  DPNEWTON_ASSIGN_OR_RETURN(const std::string s,
                            ParamString(params, "modifier", "clip"));
  if (s == "clip") return ModifierKind::kClip;
  if (s == "add") return ModifierKind::kAdd;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown modifier '", s, "'"));
}

absl::StatusOr<double> RidgeMu(const AlgorithmSpec& alg) {
  if (alg.kind != "cubic-newton" && alg.kind != "nesterov") return 0.0;
  DPNEWTON_ASSIGN_OR_RETURN(const double mu, ParamDouble(alg.params, "mu", 0.0));
  if (mu < 0.0) return absl::InvalidArgumentError("mu must be >= 0");
  if (alg.kind == "cubic-newton" && mu == 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("algorithm '", alg.name,
                     "': cubic-newton needs params.mu > 0; use nesterov for "
                     "the convex case"));
  }
  return mu;
}

absl::StatusOr<FeasibleBall> Ball(const AlgorithmSpec& alg, int d) {
  DPNEWTON_ASSIGN_OR_RETURN(const double radius,
                            ParamDouble(alg.params, "radius", 1.0));
  if (!(radius > 0.0)) return absl::InvalidArgumentError("radius must be > 0");
  return FeasibleBall{Vector::Zero(d), radius};
}

absl::StatusOr<std::unique_ptr<LossOracle>> MakeOracle(
    const AlgorithmSpec& alg, const Dataset* data) {
  DPNEWTON_ASSIGN_OR_RETURN(const double mu, RidgeMu(alg));
  if (mu == 0.0) return std::make_unique<LogisticLoss>(data);
  DPNEWTON_ASSIGN_OR_RETURN(const FeasibleBall ball, Ball(alg, data->d()));
  DPNEWTON_ASSIGN_OR_RETURN(
      RidgeLogisticLoss ridge,
      RidgeLogisticLoss::Create(data, mu, ball.diameter()));
  return std::make_unique<RidgeLogisticLoss>(std::move(ridge));
}

std::string CsvSafe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return s;
}

std::string ReadFile(const std::string& path, absl::Status* status) {
  std::ifstream in(path);
  if (!in) {
    *status = absl::NotFoundError(absl::StrCat("cannot open ", path));
    return "";
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << contents;
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

std::vector<std::string> CsvLines(const std::string& text) {
  std::vector<std::string> lines = absl::StrSplit(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

absl::StatusOr<double> ParseDouble(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return absl::InvalidArgumentError(absl::StrCat("bad number '", s, "'"));
}

}  // namespace

uint64_t CellSeed(uint64_t base_seed, const std::string& algorithm,
                  double epsilon, int T, int seed_index) {
  return DeriveSeed(base_seed, absl::StrCat(algorithm, "|", Num(epsilon), "|",
                                            T, "|", seed_index));
}

std::string CellName(const std::string& algorithm, double epsilon, int T,
                     int seed_index) {
  return absl::StrCat(algorithm, "_eps", Num(epsilon), "_T", T, "_s",
                      seed_index);
}

absl::StatusOr<std::string> OracleKey(const AlgorithmSpec& alg) {
  DPNEWTON_ASSIGN_OR_RETURN(const double mu, RidgeMu(alg));
  if (mu == 0.0) return std::string("logistic");
  DPNEWTON_ASSIGN_OR_RETURN(const FeasibleBall ball, Ball(alg, 1));
  return absl::StrCat("ridge-logistic:mu=", Num(mu),
                      ":D=", Num(ball.diameter()));
}

absl::StatusOr<RunTrace> RunAlgorithm(const AlgorithmSpec& alg,
                                      const CellContext& cell) {
  const nlohmann::json& p = alg.params;
  const LossOracle& loss = *cell.loss;
  const int d = loss.dim();
  const ApproxDpBudget target{cell.epsilon, cell.delta};
  DPNEWTON_ASSIGN_OR_RETURN(const double rho, ApproxDpToZcdp(target));
  const std::string& kind = alg.kind;

  if (kind == "double-noise-newton") {
    NewtonConfig cfg;
    DPNEWTON_ASSIGN_OR_RETURN(cfg.soi_kind, ParseSoi(p));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.mod_kind, ParseModifier(p));
    DPNEWTON_ASSIGN_OR_RETURN(const std::optional<double> lambda0,
                              ParamOptional(p, "lambda0"));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.budget.theta,
                              ParamDouble(p, "theta", cfg.budget.theta));
    if (lambda0.has_value()) {
      cfg.policy = Lambda0Policy::kFixed;
      cfg.lambda0 = *lambda0;
      cfg.budget.gamma = 0.0;
    } else {
      cfg.policy = Lambda0Policy::kAdaptive;
      DPNEWTON_ASSIGN_OR_RETURN(cfg.beta, ParamDouble(p, "beta", cfg.beta));
      DPNEWTON_ASSIGN_OR_RETURN(cfg.budget.gamma,
                                ParamDouble(p, "gamma", cfg.budget.gamma));
    }
    cfg.general_sensitivity = p.value("general_sensitivity", false);
    cfg.budget.rho = rho;
    cfg.budget.T = cell.T;
    cfg.seed = cell.seed;
    return RunDoubleNoiseNewton(loss, cfg, cell.options);
  }
  if (kind == "minibatch-newton") {
    MinibatchNewtonConfig cfg;
    DPNEWTON_ASSIGN_OR_RETURN(cfg.soi_kind, ParseSoi(p));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.mod_kind, ParseModifier(p));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.lambda0, ParamDouble(p, "lambda0", cfg.lambda0));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.theta, ParamDouble(p, "theta", cfg.theta));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.p_g, ParamDouble(p, "p_g", cfg.p_g));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.p_h, ParamDouble(p, "p_h", cfg.p_h));
    cfg.T = cell.T;
    cfg.target = target;
    cfg.accounting = cell.accounting;
    cfg.seed = cell.seed;
    return RunMinibatchNewton(*cell.data, loss, cfg, cell.options);
  }
  if (kind == "dp-gd" || kind == "dp-gd-oracle") {
    DpgdConfig cfg;
    cfg.T = cell.T;
    cfg.rho = rho;
    DPNEWTON_ASSIGN_OR_RETURN(cfg.step, ParamOptional(p, "step"));
    cfg.seed = cell.seed;
    if (kind == "dp-gd") return RunDpgd(loss, cfg, cell.options);
    return RunDpgdOracle(*cell.data, loss, cfg, cell.options);
  }
  if (kind == "dp-sgd") {
    DpsgdConfig cfg;
    cfg.T = cell.T;
    cfg.target = target;
    DPNEWTON_ASSIGN_OR_RETURN(
        cfg.sampling_rate, ParamDouble(p, "sampling_rate", cfg.sampling_rate));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.step, ParamOptional(p, "step"));
    cfg.accounting = cell.accounting;
    cfg.seed = cell.seed;
    return RunDpsgd(*cell.data, loss, cfg, cell.options);
  }
  if (kind == "damped-newton") {
    DampedNewtonConfig cfg;
    cfg.T = cell.T;
    cfg.rho = rho;
    cfg.seed = cell.seed;
    return RunDampedNewton(loss, cfg, cell.options);
  }
  if (kind == "cubic-newton") {
    CubicConfig cfg;
    DPNEWTON_ASSIGN_OR_RETURN(cfg.M, ParamOptional(p, "M"));
    DPNEWTON_ASSIGN_OR_RETURN(cfg.ball, Ball(alg, d));
    DPNEWTON_ASSIGN_OR_RETURN(const std::optional<double> inner,
                              ParamOptional(p, "inner_steps"));
    if (inner.has_value()) cfg.inner_steps = static_cast<long long>(*inner);
    cfg.T = cell.T;
    cfg.rho = rho;
    cfg.seed = cell.seed;
    return RunCubicNewton(loss, cfg, cell.options);
  }
  if (kind == "nesterov") {
    NesterovConfig cfg;
    DPNEWTON_ASSIGN_OR_RETURN(cfg.ball, Ball(alg, d));
    cfg.rho = rho;
    cfg.T = cell.T;
    cfg.seed = cell.seed;
    return RunNesterov(loss, cfg, cell.options);
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown algorithm kind '", kind, "'"));
}

double Median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<SummaryRow> Summarize(const std::vector<ResultRow>& rows) {
  // (algorithm, epsilon) -> T -> (excesses, wall times).
  std::map<std::pair<std::string, double>,
           std::map<int, std::pair<std::vector<double>, std::vector<double>>>>
      groups;
  for (const ResultRow& r : rows) {
    auto& cell = groups[{r.algorithm, r.epsilon}][r.T];
    if (!r.ok()) continue;
    cell.first.push_back(r.excess_loss);
    cell.second.push_back(r.wall_ms);
  }
  std::vector<SummaryRow> summary;
  for (const auto& [key, by_t] : groups) {
    SummaryRow best;
    best.algorithm = key.first;
    best.epsilon = key.second;
    best.median_excess = std::numeric_limits<double>::quiet_NaN();
    best.median_wall_ms = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [t, values] : by_t) {
      if (values.first.empty()) continue;
      const double m = Median(values.first);
      if (best.runs == 0 || m < best.median_excess) {
        best.best_T = t;
        best.median_excess = m;
        best.median_wall_ms = Median(values.second);
        best.runs = static_cast<int>(values.first.size());
      }
    }
    summary.push_back(best);
  }
  return summary;
}

absl::StatusOr<SweepOutput> RunSweep(const ExperimentSpec& spec,
                                     const Dataset& data,
                                     const std::string& out_dir) {
  const double delta =
      spec.delta.value_or(1.0 / (static_cast<double>(data.n()) * data.n()));

  // One oracle and one reference optimum per objective.
  std::map<std::string, std::unique_ptr<LossOracle>> oracles;
  std::map<std::string, ReferenceResult> references;
  std::vector<const LossOracle*> alg_oracle;
  std::vector<double> alg_reference;
  for (const AlgorithmSpec& alg : spec.algorithms) {
    DPNEWTON_ASSIGN_OR_RETURN(const std::string key, OracleKey(alg));
    if (!oracles.count(key)) {
      DPNEWTON_ASSIGN_OR_RETURN(oracles[key], MakeOracle(alg, &data));
      DPNEWTON_ASSIGN_OR_RETURN(references[key],
                                ReferenceOptimum(*oracles[key]));
    }
    alg_oracle.push_back(oracles[key].get());
    alg_reference.push_back(references[key].loss);
  }

  struct Cell {
    int alg;
    double epsilon;
    int T;
    int seed;
  };
  std::vector<Cell> cells;
  for (int a = 0; a < static_cast<int>(spec.algorithms.size()); ++a) {
    for (const double eps : spec.epsilons) {
      for (const int t : spec.algorithms[a].t_grid) {
        for (int s = 0; s < spec.seeds; ++s) cells.push_back({a, eps, t, s});
      }
    }
  }

  const bool traces = spec.write_traces && !out_dir.empty();
  const std::filesystem::path trace_dir =
      std::filesystem::path(out_dir) / "traces";
  if (traces) {
    std::error_code ec;
    std::filesystem::create_directories(trace_dir, ec);
    if (ec) {
      return absl::UnavailableError(
          absl::StrCat("cannot create ", trace_dir.string(), ": ",
                       ec.message()));
    }
  }

  std::vector<ResultRow> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < cells.size(); i = next++) {
      const Cell& c = cells[i];
      const AlgorithmSpec& alg = spec.algorithms[c.alg];
      ResultRow& row = rows[i];
      row.algorithm = alg.name;
      row.epsilon = c.epsilon;
      row.T = c.T;
      row.seed = c.seed;
      row.excess_loss = std::numeric_limits<double>::quiet_NaN();
      absl::StatusOr<double> budget =
          ApproxDpToZcdp(ApproxDpBudget{c.epsilon, delta});
      row.rho_budget = budget.ok() ? *budget : 0.0;

      CellContext ctx;
      ctx.data = &data;
      ctx.loss = alg_oracle[c.alg];
      ctx.epsilon = c.epsilon;
      ctx.delta = delta;
      ctx.T = c.T;
      ctx.seed = CellSeed(spec.base_seed, alg.name, c.epsilon, c.T, c.seed);
      ctx.accounting = spec.accounting;
      ctx.options.reference_loss = alg_reference[c.alg];
      ctx.options.trace_every = spec.trace_every;
      absl::StatusOr<RunTrace> run = RunAlgorithm(alg, ctx);
      if (!run.ok()) {
        row.status = CsvSafe(std::string(run.status().message()));
        continue;
      }
      row.excess_loss = run->final_loss() - alg_reference[c.alg];
      row.wall_ms = run->wall_ms;
      row.rho_spent = run->ledger.total();
      row.is_private = run->is_private;
      if (traces) {
        const std::string name = CellName(alg.name, c.epsilon, c.T, c.seed);
        absl::Status written =
            WriteFile((trace_dir / (name + ".csv")).string(), run->ToCsv());
        if (!written.ok()) row.status = CsvSafe(std::string(written.message()));
      }
    }
  };
  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::sort(rows.begin(), rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              return std::tie(a.algorithm, a.epsilon, a.T, a.seed) <
                     std::tie(b.algorithm, b.epsilon, b.T, b.seed);
            });

  SweepOutput out;
  out.summary = Summarize(rows);
  out.rows = std::move(rows);

  nlohmann::json refs = nlohmann::json::object();
  for (const auto& [key, ref] : references) {
    refs[key] = {{"loss", ref.loss},
                 {"grad_norm", ref.grad_norm},
                 {"iterations", ref.iterations}};
  }
  out.meta = {
      {"spec", ExperimentSpecToJson(spec)},
      {"n", data.n()},
      {"d", data.d()},
      {"delta", delta},
      {"accountant",
       {{"zcdp_conversion", "rho = eps^2 / (4 ln(1/delta) + 4 eps)"},
        {"subsampled_gaussian", SgmAccountingName(spec.accounting)}}},
      {"seeds",
       {{"count", spec.seeds},
        {"base_seed", spec.base_seed},
        {"cell_seed", "DeriveSeed(base_seed, \"algorithm|epsilon|T|seed\")"}}},
      {"references", refs},
      {"versions",
       {{"dpnewton", DPNEWTON_VERSION_STRING},
        {"eigen", absl::StrCat(EIGEN_WORLD_VERSION, ".", EIGEN_MAJOR_VERSION,
                               ".", EIGEN_MINOR_VERSION)},
        {"compiler", __VERSION__}}}};
  return out;
}

std::string ResultsCsv(const std::vector<ResultRow>& rows) {
  std::string csv =
      "algorithm,epsilon,T,seed,excess_loss,rho_spent,rho_budget,private,"
      "status\n";
  for (const ResultRow& r : rows) {
    absl::StrAppend(&csv, r.algorithm, ",", Num(r.epsilon), ",", r.T, ",",
                    r.seed, ",", Num(r.excess_loss), ",", Num(r.rho_spent),
                    ",", Num(r.rho_budget), ",", r.is_private ? 1 : 0, ",",
                    r.status, "\n");
  }
  return csv;
}

std::string TimingsCsv(const std::vector<ResultRow>& rows) {
  std::string csv = "algorithm,epsilon,T,seed,wall_ms\n";
  for (const ResultRow& r : rows) {
    absl::StrAppend(&csv, r.algorithm, ",", Num(r.epsilon), ",", r.T, ",",
                    r.seed, ",", Num(r.wall_ms), "\n");
  }
  return csv;
}

std::string SummaryCsv(const std::vector<SummaryRow>& summary) {
  std::string csv =
      "algorithm,epsilon,best_T,median_excess,median_wall_ms,runs\n";
  for (const SummaryRow& s : summary) {
    absl::StrAppend(&csv, s.algorithm, ",", Num(s.epsilon), ",", s.best_T, ",",
                    Num(s.median_excess), ",", Num(s.median_wall_ms), ",",
                    s.runs, "\n");
  }
  return csv;
}

absl::Status WriteSweep(const SweepOutput& output, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", out_dir, ": ", ec.message()));
  }
  const std::filesystem::path dir(out_dir);
  DPNEWTON_RETURN_IF_ERROR(
      WriteFile((dir / "results.csv").string(), ResultsCsv(output.rows)));
  DPNEWTON_RETURN_IF_ERROR(
      WriteFile((dir / "timings.csv").string(), TimingsCsv(output.rows)));
  DPNEWTON_RETURN_IF_ERROR(
      WriteFile((dir / "summary.csv").string(), SummaryCsv(output.summary)));
  return WriteFile((dir / "meta.json").string(), output.meta.dump(2) + "\n");
}

absl::StatusOr<std::vector<ResultRow>> ReadSweepResults(
    const std::string& dir) {
  absl::Status status;
  const std::filesystem::path base(dir);
  const std::string results = ReadFile((base / "results.csv").string(), &status);
  DPNEWTON_RETURN_IF_ERROR(status);
  const std::string timings = ReadFile((base / "timings.csv").string(), &status);
  DPNEWTON_RETURN_IF_ERROR(status);
  const std::vector<std::string> rlines = CsvLines(results);
  const std::vector<std::string> tlines = CsvLines(timings);
  if (rlines.empty() || tlines.size() != rlines.size()) {
    return absl::DataLossError(
        absl::StrCat(dir, ": results.csv and timings.csv do not line up"));
  }
  std::vector<ResultRow> rows;
  for (size_t i = 1; i < rlines.size(); ++i) {
    const std::vector<std::string> f = absl::StrSplit(rlines[i], ',');
    const std::vector<std::string> g = absl::StrSplit(tlines[i], ',');
    if (f.size() != 9 || g.size() != 5 || f[0] != g[0] || f[1] != g[1] ||
        f[2] != g[2] || f[3] != g[3]) {
      return absl::DataLossError(
          absl::StrCat(dir, ": malformed row ", i + 1));
    }
    ResultRow r;
    r.algorithm = f[0];
    DPNEWTON_ASSIGN_OR_RETURN(r.epsilon, ParseDouble(f[1]));
    r.T = std::stoi(f[2]);
    r.seed = std::stoi(f[3]);
    DPNEWTON_ASSIGN_OR_RETURN(r.excess_loss, ParseDouble(f[4]));
    DPNEWTON_ASSIGN_OR_RETURN(r.rho_spent, ParseDouble(f[5]));
    DPNEWTON_ASSIGN_OR_RETURN(r.rho_budget, ParseDouble(f[6]));
    r.is_private = f[7] == "1";
    r.status = f[8];
    DPNEWTON_ASSIGN_OR_RETURN(r.wall_ms, ParseDouble(g[4]));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace dpnewton
