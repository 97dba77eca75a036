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


#include <cmath>
#include <string>

#include "dpnewton/privacy/ledger.h"
#include "dpnewton/privacy/sgm_accountant.h"
#include "dpnewton/privacy/zcdp.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace dpnewton {
namespace {

TEST(ApproxDpToZcdpTest, ClosedFormExamples) {
  EXPECT_NEAR(*ApproxDpToZcdp({1.0, std::exp(-4.0)}), 0.05, 1e-15);
  EXPECT_NEAR(*ApproxDpToZcdp({2.0, std::exp(-8.0)}), 0.1, 1e-15);
  EXPECT_LT(*ApproxDpToZcdp({1e-8, 1e-6}), 1e-16);
}

TEST(ApproxDpToZcdpTest, StrictlyIncreasingInEpsilon) {
  double prev = 0.0;
  for (double eps = 0.01; eps < 20; eps *= 1.3) {
    const double rho = *ApproxDpToZcdp({eps, 1e-8});
    EXPECT_GT(rho, prev);
    prev = rho;
  }
}

TEST(ApproxDpToZcdpTest, RejectsInvalidBudgets) {
  EXPECT_FALSE(ApproxDpToZcdp({1.0, 1.0}).ok());
  EXPECT_FALSE(ApproxDpToZcdp({1.0, 0.0}).ok());
  EXPECT_FALSE(ApproxDpToZcdp({0.0, 1e-6}).ok());
  EXPECT_FALSE(ApproxDpToZcdp({-1.0, 1e-6}).ok());
}

TEST(ZcdpConversionTest, RoundTripNeverExceedsRequestedEpsilon) {
  for (double delta : {1e-4, 1e-6, 1e-8, 1e-10}) {
    for (double eps = 0.001; eps < 50; eps *= 1.7) {
      const double rho = *ApproxDpToZcdp({eps, delta});
      EXPECT_LE(ZcdpToEpsilon(rho, delta), eps * (1 + 1e-12));
      // EpsilonToZcdp is the exact inverse of ZcdpToEpsilon.
      EXPECT_NEAR(ZcdpToEpsilon(EpsilonToZcdp(eps, delta), delta), eps,
                  1e-10 * eps);
    }
  }
}

TEST(GaussianSigmaTest, Examples) {
  EXPECT_DOUBLE_EQ(*GaussianSigma(1.0, 0.5), 1.0);
  EXPECT_EQ(*GaussianSigma(0.0, 0.3), 0.0);
  EXPECT_NEAR(*GaussianSigma(0.01, 0.125), 0.02, 1e-17);
  EXPECT_FALSE(GaussianSigma(1.0, 0.0).ok());
  EXPECT_FALSE(GaussianSigma(-1.0, 1.0).ok());
}

TEST(GaussianSigmaTest, PerIterationCompositionMatchesClosedForm) {
  const int n = 1000, T = 25;
  const double rho = 0.7;
  EXPECT_NEAR(*GaussianSigma(1.0 / n, rho / T),
              std::sqrt(T) / (n * std::sqrt(2 * rho)), 1e-15);
}

TEST(SplitBudgetTest, Examples) {
  IterationShares s = SplitBudget({.rho = 1, .theta = 0.3, .gamma = 0.1, .T = 10});
  EXPECT_NEAR(s.gradient, 0.07, 1e-15);
  EXPECT_NEAR(s.trace, 0.003, 1e-15);
  EXPECT_NEAR(s.direction, 0.027, 1e-15);
  EXPECT_NEAR(s.total() * 10, 1.0, 1e-14);

  s = SplitBudget({.rho = 1, .theta = 0.3, .gamma = 0, .T = 4});
  EXPECT_EQ(s.trace, 0.0);

  s = SplitBudget({.rho = 2, .theta = 0.5, .gamma = 0, .T = 1});
  EXPECT_DOUBLE_EQ(s.gradient, 1.0);
  EXPECT_DOUBLE_EQ(s.trace, 0.0);
  EXPECT_DOUBLE_EQ(s.direction, 1.0);
}

TEST(ZcdpBudgetTest, Validation) {
  EXPECT_TRUE((ZcdpBudget{1, 0.3, 0.1, 5}).Validate().ok());
  EXPECT_FALSE((ZcdpBudget{0, 0.3, 0.1, 5}).Validate().ok());
  EXPECT_FALSE((ZcdpBudget{1, 0, 0.1, 5}).Validate().ok());
  EXPECT_FALSE((ZcdpBudget{1, 1, 0.1, 5}).Validate().ok());
  EXPECT_FALSE((ZcdpBudget{1, 0.3, 1, 5}).Validate().ok());
  EXPECT_FALSE((ZcdpBudget{1, 0.3, 0.1, 0}).Validate().ok());
}

TEST(SgmAccountantTest, FullBatchMatchesAnalyticGaussian) {
  EXPECT_NEAR(AnalyticGaussianSigma(1.0, 1e-6),
              testing::kAnalyticGaussianSigma, 1e-9);
  EXPECT_NEAR(testing::GaussianPrivacyProfile(testing::kAnalyticGaussianSigma,
                                              1.0),
              1e-6, 1e-12);
  const double sigma = *SgmNoiseMultiplier({1.0, 1e-6}, 1.0, 1);
  EXPECT_LE(std::abs(sigma / testing::kAnalyticGaussianSigma - 1), 0.05);
  for (double eps : {0.1, 0.5, 2.0, 8.0}) {
    for (int steps : {1, 4, 30}) {
      const double s = *SgmNoiseMultiplier({eps, 1e-6}, 1.0, steps);
      EXPECT_GE(s, AnalyticGaussianSigma(eps, 1e-6) * (1 - 1e-9));
    }
  }
}

TEST(SgmAccountantTest, FrozenSubsampledValue) {
  const double sigma = *SgmNoiseMultiplier({1.0, 1e-6}, 0.02, 100);
  EXPECT_NEAR(sigma, testing::kFrozenSgmSigma, 1e-12 * sigma);
  EXPECT_LE(SgmEpsilon(0.02, sigma, 100, 1e-6), 1.0);
  EXPECT_LE(testing::SampledGaussianEpsilon(0.02, sigma, 100, 1e-6), 1.0);
  EXPECT_GT(testing::SampledGaussianEpsilon(0.02, sigma * (1 - 1e-3), 100,
                                            1e-6),
            1.0);
}

TEST(SgmAccountantTest, RdpMatchesIndependentImplementation) {
  for (double p : {0.001, 0.02, 0.3, 1.0}) {
    for (double sigma : {0.5, 1.0, 3.0, 20.0}) {
      for (int alpha : {2, 3, 10, 64, 256}) {
        const double ours = SgmRdp(p, sigma, alpha);
        const double oracle = testing::SampledGaussianRdp(p, sigma, alpha);
        EXPECT_NEAR(ours, oracle, 1e-9 * (1 + std::abs(oracle)))
            << "p=" << p << " sigma=" << sigma << " alpha=" << alpha;
      }
    }
  }
}

TEST(SgmAccountantTest, Monotonicity) {
  double prev = 1e300;
  for (double eps : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double s = *SgmNoiseMultiplier({eps, 1e-6}, 0.02, 100);
    EXPECT_LT(s, prev);
    prev = s;
  }
  prev = 0;
  for (int steps : {10, 100, 1000}) {
    const double s = *SgmNoiseMultiplier({1.0, 1e-6}, 0.02, steps);
    EXPECT_GE(s, prev);
    prev = s;
  }
}

TEST(SgmAccountantTest, UnreachableTargetFails) {
  const absl::StatusOr<double> s =
      SgmNoiseMultiplier({1e-7, 1e-12}, 1.0, 100000);
  EXPECT_EQ(s.status().code(), absl::StatusCode::kFailedPrecondition);
}

TEST(SgmAccountantTest, NoAmplificationComposesGaussians) {
  const int steps = 50;
  const double sigma = *SgmNoiseMultiplier(
      {1.0, 1e-6}, 0.02, steps, SgmAccounting::kNoAmplification);
  const double rho = EpsilonToZcdp(1.0, 1e-6);
  EXPECT_NEAR(sigma, std::sqrt(steps / (2 * rho)), 1e-9 * sigma);
  EXPECT_STREQ(SgmAccountingName(SgmAccounting::kNoAmplification),
               "zcdp-no-amplification");
}

TEST(PrivacyLedgerTest, Sums) {
  PrivacyLedger ledger;
  EXPECT_EQ(ledger.total(), 0.0);
  ASSERT_TRUE(ledger.Record("a", 0.1).ok());
  ASSERT_TRUE(ledger.Record("b", 0.2).ok());
  EXPECT_NEAR(ledger.total(), 0.3, 1e-16);
  EXPECT_EQ(ledger.entries().size(), 2u);
}

TEST(PrivacyLedgerTest, ManyEqualSharesSumExactly) {
  for (int T : {3, 7, 10, 1000, 100000}) {
    const double rho = 0.0128765;
    PrivacyLedger ledger;
    for (int t = 0; t < T; ++t) ASSERT_TRUE(ledger.Record("s", rho / T).ok());
    EXPECT_NEAR(ledger.total(), rho, 1e-12);
  }
}

TEST(PrivacyLedgerTest, RejectsNegativeAndNonFinite) {
  PrivacyLedger ledger;
  EXPECT_FALSE(ledger.Record("x", -1e-3).ok());
  EXPECT_FALSE(ledger.Record("x", std::nan("")).ok());
  EXPECT_TRUE(ledger.Record("zero", 0.0).ok());
}

TEST(PrivacyLedgerTest, JsonSchema) {
  PrivacyLedger ledger;
  ASSERT_TRUE(ledger.Record("t0/gradient", 0.25).ok());
  const nlohmann::json j = ledger.ToJson(1e-6);
  EXPECT_EQ(j["entries"][0]["label"], "t0/gradient");
  EXPECT_DOUBLE_EQ(j["total_rho"].get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(j["reported_epsilon"].get<double>(),
                   ZcdpToEpsilon(0.25, 1e-6));
  EXPECT_DOUBLE_EQ(j["delta"].get<double>(), 1e-6);
  EXPECT_EQ(j["accountant"], "zcdp");
}

}  // namespace
}  // namespace dpnewton
