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


#include "dpnewton/privacy/sgm_accountant.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"

namespace dpnewton {
namespace {

constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 256;

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double LogAdd(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double GaussianDelta(double epsilon, double sigma) {
  const double a = 1.0 / (2.0 * sigma);
  const double b = epsilon * sigma;
  return NormalCdf(a - b) - std::exp(epsilon) * NormalCdf(-a - b);
}

absl::Status CalibrationFailure(const ApproxDpBudget& target, double rate,
                                int steps) {
  return absl::FailedPreconditionError(absl::StrCat(
      "no noise multiplier in [", kSgmSigmaLow, ", ", kSgmSigmaHigh,
      "] reaches (", target.epsilon, ", ", target.delta, ") at rate ", rate,
      " over ", steps, " steps"));
}

}  // namespace

const char* SgmAccountingName(SgmAccounting accounting) {
  switch (accounting) {
    case SgmAccounting::kRdp:
      return "rdp-integer-orders";
    case SgmAccounting::kNoAmplification:
      return "zcdp-no-amplification";
  }
  return "unknown";
}

double SgmRdp(double sampling_rate, double sigma, int alpha) {
  const double q = sampling_rate;
  if (q >= 1.0) return alpha / (2.0 * sigma * sigma);
  if (q <= 0.0) return 0.0;
  // log A_alpha = log sum_k C(alpha,k) (1-q)^(alpha-k) q^k e^((k^2-k)/(2s^2)).
  const double log_q = std::log(q);
  const double log_1mq = std::log1p(-q);
  double log_a = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= alpha; ++k) {
    const double log_binom = std::lgamma(alpha + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(alpha - k + 1.0);
    const double term = log_binom + (alpha - k) * log_1mq + k * log_q +
                        (static_cast<double>(k) * k - k) / (2.0 * sigma * sigma);
    log_a = LogAdd(log_a, term);
  }
  return log_a / (alpha - 1);
}

double SgmEpsilon(double sampling_rate, double sigma, int steps,
                  double delta) {
  const double log_inv_delta = std::log(1.0 / delta);
  double best = std::numeric_limits<double>::infinity();
  for (int alpha = kMinOrder; alpha <= kMaxOrder; ++alpha) {
    const double eps = steps * SgmRdp(sampling_rate, sigma, alpha) +
                       log_inv_delta / (alpha - 1);
    best = std::min(best, eps);
  }
  return best;
}

double AnalyticGaussianSigma(double epsilon, double delta) {
  // GaussianDelta is decreasing in sigma.
  double lo = 1e-6;
  double hi = 1.0;
  while (GaussianDelta(epsilon, hi) > delta) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (GaussianDelta(epsilon, mid) > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

absl::StatusOr<double> SgmNoiseMultiplier(const ApproxDpBudget& target,
                                          double sampling_rate, int steps,
                                          SgmAccounting accounting) {
  if (absl::Status s = target.Validate(); !s.ok()) return s;
  if (!(sampling_rate > 0.0 && sampling_rate <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sampling rate must lie in (0, 1], got ", sampling_rate));
  }
  if (steps < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("steps must be >= 1, got ", steps));
  }

  double sigma = 0.0;
  if (accounting == SgmAccounting::kNoAmplification) {
    const double rho = EpsilonToZcdp(target.epsilon, target.delta);
    sigma = std::sqrt(steps / (2.0 * rho));
  } else if (sampling_rate == 1.0) {
    // Gaussians compose into a single Gaussian with sigma / sqrt(steps).
    sigma = std::sqrt(static_cast<double>(steps)) *
            AnalyticGaussianSigma(target.epsilon, target.delta);
  } else {
    auto eps_at = [&](double s) {
      return SgmEpsilon(sampling_rate, s, steps, target.delta);
    };
    if (eps_at(kSgmSigmaHigh) > target.epsilon) {
      return CalibrationFailure(target, sampling_rate, steps);
    }
    if (eps_at(kSgmSigmaLow) <= target.epsilon) return kSgmSigmaLow;
    double lo = kSgmSigmaLow;
    double hi = kSgmSigmaHigh;
    while (hi / lo - 1.0 > kSgmRelativeTolerance) {
      const double mid = std::sqrt(lo * hi);
      if (eps_at(mid) > target.epsilon) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return hi;
  }
  if (sigma > kSgmSigmaHigh) {
    return CalibrationFailure(target, sampling_rate, steps);
  }
  return std::max(sigma, kSgmSigmaLow);
}

}  // namespace dpnewton
