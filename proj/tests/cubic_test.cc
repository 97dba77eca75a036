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


#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dpnewton/bench/reference.h"
#include "dpnewton/cubic/cubic_model.h"
#include "dpnewton/cubic/cubic_newton.h"
#include "dpnewton/cubic/dp_solver.h"
#include "dpnewton/cubic/nesterov.h"
#include "dpnewton/cubic/sequence.h"
#include "dpnewton/datasets/synthetic.h"
#include "dpnewton/losses/logistic.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"
#include "testing/properties.h"

namespace dpnewton {
namespace {

// (1/2)(w - c)^T A (w - c) with regularity taken over a ball of `radius`.
class QuadraticLoss : public LossOracle {
 public:
  QuadraticLoss(Matrix a, Vector c, double radius)
      : a_(std::move(a)), c_(std::move(c)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a_);
    const double top = es.eigenvalues().maxCoeff();
    regularity_ = {.L0 = top * (c_.norm() + radius),
                   .L1 = top,
                   .L2 = 0.0,
                   .mu = std::max(0.0, es.eigenvalues().minCoeff())};
  }
  int dim() const override { return static_cast<int>(c_.size()); }
  int num_examples() const override { return 1; }
  const LossRegularity& regularity() const override { return regularity_; }
  double Value(const Vector& w) const override {
    return 0.5 * (w - c_).dot(a_ * (w - c_));
  }
  Vector Gradient(const Vector& w) const override { return a_ * (w - c_); }
  SymmetricMatrix Hessian(const Vector&) const override {
    return SymmetricMatrix::FromLowerTriangle(a_);
  }

 private:
  Matrix a_;
  Vector c_;
  LossRegularity regularity_;
};

CubicModel RandomModel(std::mt19937_64& gen, int d, double M) {
  CubicModel model;
  model.anchor = testing::RandomVec(d, gen);
  model.value = 0.3;
  model.gradient = testing::RandomVec(d, gen);
  model.hessian = SymmetricMatrix::FromLowerTriangle(testing::RandomPsd(d, gen));
  model.M = M;
  return model;
}

TEST(CubicModelTest, AnchorIdentities) {
  std::mt19937_64 gen(1);
  const CubicModel model = RandomModel(gen, 5, 0.7);
  EXPECT_EQ(model.Value(model.anchor), 0.3);
  EXPECT_EQ(model.Gradient(model.anchor), model.gradient);
}

TEST(CubicModelTest, ZeroMIsQuadratic) {
  std::mt19937_64 gen(2);
  const CubicModel model = RandomModel(gen, 4, 0.0);
  const Vector v = testing::RandomVec(4, gen);
  const Vector s = v - model.anchor;
  EXPECT_NEAR(model.Value(v),
              0.3 + model.gradient.dot(s) +
                  0.5 * s.dot(model.hessian.dense() * s),
              1e-13);
}

TEST(CubicModelTest, GradientAndHessianMatchFiniteDifferences) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CubicModel model = RandomModel(gen, 6, 0.5 + trial * 0.1);
    const Vector v = model.anchor + testing::RandomVec(6, gen);
    const Vector fd = testing::CentralDiffGradient(
        [&](const Vector& u) { return model.Value(u); }, v, 1e-5);
    EXPECT_LE((fd - model.Gradient(v)).lpNorm<Eigen::Infinity>(), 1e-6);
    const Matrix jac = testing::CentralDiffJacobian(
        [&](const Vector& u) { return model.Gradient(u); }, v, 1e-5);
    const Matrix h = model.Hessian(v);
    EXPECT_LE((jac - h).cwiseAbs().maxCoeff(), 1e-5);
    const double floor = testing::JacobiEigen(model.hessian.dense()).first.minCoeff();
    EXPECT_GE(testing::JacobiEigen(h).first.minCoeff(), floor - 1e-12);
  }
}

TEST(CubicModelTest, SandwichesRidgeLogistic) {
  const Dataset data = *GenerateSynthetic(300, 4, UniformDirection(4, 2.0), 4);
  const auto loss = *RidgeLogisticLoss::Create(&data, 0.05, 10.0);
  const double l2 = loss.regularity().L2;
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Vector w = testing::RandomUnit(4, gen) * 5.0 * testing::Uniform(gen, 0, 1);
    const Vector v = testing::RandomUnit(4, gen) * 5.0 * testing::Uniform(gen, 0, 1);
    const CubicModel model = CubicModel::At(loss, w, l2);
    EXPECT_LE(loss.Value(v), model.Value(v) + 1e-10);
    const double r = (v - w).norm();
    EXPECT_LE(model.Value(v), loss.Value(v) + (2 * l2 / 6) * r * r * r + 1e-10);
  }
}

TEST(DpSolverTest, StepCountFormula) {
  const LossRegularity reg{.L0 = 2.0, .L1 = 0.75, .L2 = 0.1, .mu = 0.5};
  const double lip = 2.0 + 0.75 * 2 + 0.05 * 4;
  const double sens = 3.5 / 1000;
  EXPECT_EQ(DpSolverSteps(reg, 0.1, 2.0, 1000, 10, 0.2),
            std::ceil(2 * lip * lip * 0.2 / (0.5 * 10 * sens * sens)));
}

TEST(DpSolverTest, NoiselessQuadraticReachesMinimizer) {
  std::mt19937_64 gen(6);
  CubicModel model;
  const int d = 5;
  model.anchor = Vector::Zero(d);
  Matrix h = testing::RandomPsd(d, gen);
  h.diagonal().array() += 0.5;
  model.hessian = SymmetricMatrix::FromLowerTriangle(h);
  model.gradient = 0.3 * testing::RandomUnit(d, gen);
  model.M = 0.0;
  const Vector minimizer = -h.llt().solve(model.gradient);
  ASSERT_LT(minimizer.norm(), 1.0);
  const double top = testing::JacobiEigen(h).first.maxCoeff();
  const LossRegularity reg{.L0 = 0.3 + top * 2, .L1 = top, .L2 = 0.0,
                           .mu = testing::JacobiEigen(h).first.minCoeff()};
  RandomSource rng(0);
  const auto result = DpSolve(model, 1.0, {Vector::Zero(d), 2.0}, reg, 1000,
                              rng, {.add_noise = false});
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->sigma, 0.0);
  EXPECT_LE((result->output - minimizer).norm(), 1e-4);
}

TEST(DpSolverTest, OptimalAnchorIsFixedPoint) {
  CubicModel model;
  model.anchor = Vector::Constant(3, 0.2);
  model.gradient = Vector::Zero(3);
  model.hessian = SymmetricMatrix::Identity(3);
  const LossRegularity reg{.L0 = 1, .L1 = 1, .L2 = 0, .mu = 1};
  RandomSource rng(0);
  const auto result = DpSolve(model, 1.0, {Vector::Zero(3), 1.0}, reg, 10, rng,
                              {.steps = 1000, .add_noise = false});
  EXPECT_LE((result->output - model.anchor).norm(), 1e-14);
}

TEST(DpSolverTest, ConstrainedMinimizerOnBoundary) {
  CubicModel model;
  model.anchor = Vector::Zero(3);
  model.gradient = Vector::Constant(3, -2.0);
  model.hessian = SymmetricMatrix::Identity(3);
  const LossRegularity reg{.L0 = 4, .L1 = 1, .L2 = 0, .mu = 1};
  const FeasibleBall ball{Vector::Zero(3), 0.5};
  RandomSource rng(0);
  const auto run = DpSolve(model, 1.0, ball, reg, 100, rng,
                           {.steps = 20000, .add_noise = false});
  const auto longer = DpSolve(model, 1.0, ball, reg, 100, rng,
                              {.steps = 200000, .add_noise = false});
  EXPECT_NEAR(run->output.norm(), 0.5, 1e-3);
  EXPECT_LE((run->output - longer->output).norm(), 1e-3);
  EXPECT_LE((longer->output - Vector::Constant(3, 0.5 / std::sqrt(3.0))).norm(),
            1e-3);
}

TEST(DpSolverTest, NoiseScaleAndErrors) {
  CubicModel model;
  model.anchor = Vector::Zero(2);
  model.gradient = Vector::Zero(2);
  model.hessian = SymmetricMatrix::Identity(2);
  const LossRegularity reg{.L0 = 1, .L1 = 1, .L2 = 0, .mu = 1};
  RandomSource rng(0);
  const auto r = DpSolve(model, 0.5, {Vector::Zero(2), 1.0}, reg, 100, rng,
                         {.steps = 50});
  const double sens = (1.0 + 1.0 * 2.0) / 100;
  EXPECT_NEAR(r->sigma, std::sqrt(50 * sens * sens / (2 * 0.5)), 1e-15);
  EXPECT_FALSE(DpSolve(model, 0.0, {Vector::Zero(2), 1.0}, reg, 100, rng).ok());
  LossRegularity flat = reg;
  flat.mu = 0;
  EXPECT_FALSE(DpSolve(model, 1.0, {Vector::Zero(2), 1.0}, flat, 100, rng).ok());
}

TEST(DpSolverTest, MoreBudgetLessSuboptimality) {
  const Dataset data = *GenerateSynthetic(200, 5, UniformDirection(5, 1.0), 7);
  const auto loss = *RidgeLogisticLoss::Create(&data, 0.5, 2.0);
  const CubicModel model = CubicModel::At(loss, Vector::Zero(5), 0.1);
  const FeasibleBall ball{Vector::Zero(5), 1.0};
  RandomSource exact_rng(0);
  const auto exact = DpSolve(model, 1.0, ball, loss.regularity(), 200,
                             exact_rng, {.add_noise = false});
  const double best = model.Value(exact->output);
  std::vector<double> medians;
  for (double rho : {0.01, 0.1, 1.0}) {
    std::vector<double> gaps;
    for (int seed = 0; seed < 15; ++seed) {
      RandomSource rng(seed);
      const auto r = DpSolve(model, rho, ball, loss.regularity(), 200, rng);
      gaps.push_back(model.Value(r->output) - best);
    }
    medians.push_back(testing::MedianOf(gaps));
  }
  EXPECT_GT(medians[0], medians[1]);
  EXPECT_GT(medians[1], medians[2]);
}

TEST(CubicNewtonTest, NoiselessReachesOptimum) {
  const Dataset data = *GenerateSynthetic(2000, 10, UniformDirection(10, 2.0), 8);
  const auto loss = *RidgeLogisticLoss::Create(&data, 0.1, 10.0);
  const auto ref = ReferenceOptimum(loss);
  ASSERT_TRUE(ref.ok());
  ASSERT_LT(ref->w.norm(), 5.0);
  CubicConfig cfg;
  cfg.T = 8;
  cfg.ball = {Vector::Zero(10), 5.0};
  cfg.noiseless = true;
  RunOptions options;
  options.reference_loss = ref->loss;
  const auto run = RunCubicNewton(loss, cfg, options);
  ASSERT_TRUE(run.ok());
  EXPECT_LE(*run->records.back().excess_loss, 1e-6);
  EXPECT_EQ(run->ledger.total(), 0.0);
  EXPECT_TRUE(run->records.back().inner_steps.has_value());
}

TEST(CubicNewtonTest, LedgerAndErrors) {
  const Dataset data = *GenerateSynthetic(100, 3, UniformDirection(3, 1.0), 9);
  const auto loss = *RidgeLogisticLoss::Create(&data, 0.5, 2.0);
  CubicConfig cfg;
  cfg.T = 3;
  cfg.rho = 0.3;
  cfg.ball = {Vector::Zero(3), 1.0};
  const auto run = RunCubicNewton(loss, cfg);
  ASSERT_TRUE(run.ok());
  EXPECT_NEAR(run->ledger.total(), 0.3, 1e-12);
  EXPECT_EQ(run->ToCsv().substr(0, run->ToCsv().find('\n')),
            "t,loss,excess_loss,grad_norm,wall_ms,rho_spent,inner_steps");

  const LogisticLoss plain(&data);
  EXPECT_EQ(RunCubicNewton(plain, cfg).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(NesterovTest, NoiselessBoundOnQuadratic) {
  std::mt19937_64 gen(10);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 6;
    Matrix a = testing::RandomPsd(d, gen);
    // Rank deficient: merely convex.
    const Vector u = testing::RandomUnit(d, gen);
    a -= (u.dot(a * u)) * u * u.transpose();
    a = 0.5 * (a + a.transpose());
    const Vector c = 0.5 * testing::RandomUnit(d, gen);
    const QuadraticLoss loss(a, c, 1.0);
    const double gamma = 2 * loss.regularity().L1;
    for (int T : {1, 5, 20, 100}) {
      NesterovConfig cfg;
      cfg.ball = {Vector::Zero(d), 1.0};
      cfg.T = T;
      cfg.noiseless = true;
      const auto run = RunNesterov(loss, cfg);
      ASSERT_TRUE(run.ok());
      const double excess = loss.Value(run->final_iterate);
      EXPECT_LE(excess, 4 * gamma * 4.0 / (T * (T + 1.0)) + 1e-12);
    }
  }
}

TEST(NesterovTest, IterationsAndLedger) {
  EXPECT_EQ(NesterovIterations(2.0, 1.0, 100, 4, 1.0),
            static_cast<int>(std::ceil(std::pow(4.0 * 1e4 / 4, 0.25))));
  const Dataset data = *GenerateSynthetic(400, 4, UniformDirection(4, 1.0), 11);
  const LogisticLoss loss(&data);
  NesterovConfig cfg;
  cfg.ball = {Vector::Zero(4), 1.0};
  cfg.rho = 0.7;
  const auto run = RunNesterov(loss, cfg);
  ASSERT_TRUE(run.ok());
  const int T = NesterovIterations(2.0, 0.7, 400, 4, 1.0);
  EXPECT_EQ(run->records.size(), static_cast<size_t>(T + 1));
  EXPECT_NEAR(run->ledger.total(), 0.7, 1e-12);
}

TEST(NesterovTest, FirstMomentumPointIsStart) {
  // With T = 1, alpha_1 = 1 so the gradient is taken at the ball center.
  const QuadraticLoss loss(Matrix::Identity(2, 2), Vector::Constant(2, 0.1), 1.0);
  NesterovConfig cfg;
  cfg.ball = {Vector::Constant(2, 0.3), 1.0};
  cfg.T = 1;
  cfg.noiseless = true;
  const auto run = RunNesterov(loss, cfg);
  const Vector expected = cfg.ball.center -
                          (1.0 / (4.0 * 2.0 / 2.0)) *
                              loss.Gradient(cfg.ball.center);
  EXPECT_LE((run->final_iterate - expected).norm(), 1e-15);
}

TEST(SequenceTest, DoublyLogarithmic) {
  EXPECT_LE(StepsToThreshold(1e-8, 16.0 / 9, 1e-7, 15).value_or(99), 15);
  EXPECT_LE(StepsToThreshold(1e-12, 16.0 / 9, 1e-11, 20).value_or(99), 20);
}

TEST(SequenceTest, DominatedRegime) {
  const auto a = SequenceRecursion(0.5, 0.1, 10);
  for (double v : a) EXPECT_LE(v, 4 * 0.5);
}

TEST(SequenceTest, MonotoneAboveFourBeta) {
  for (double beta0 : {1e-12, 1e-8, 1e-4, 1e-2, 0.1}) {
    const auto a = SequenceRecursion(beta0, 16.0 / 9, 40);
    for (size_t t = 0; t + 1 < a.size(); ++t) {
      if (a[t] > 4 * beta0) EXPECT_LT(a[t + 1], a[t]) << beta0 << " " << t;
    }
  }
}

}  // namespace
}  // namespace dpnewton
