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


// Randomized property trials shared by the unit tests and the acceptance
// suite. Each trial returns the two sides of an inequality.

#ifndef DPNEWTON_TESTS_TESTING_PROPERTIES_H_
#define DPNEWTON_TESTS_TESTING_PROPERTIES_H_

#include <cmath>
#include <random>

#include "dpnewton/cubic/cubic_model.h"
#include "dpnewton/losses/dataset.h"
#include "dpnewton/losses/logistic.h"
#include "dpnewton/numkit/linalg.h"
#include "dpnewton/spectra/modifier.h"
#include "dpnewton/spectra/sensitivity.h"
#include "testing/oracles.h"

namespace dpnewton::testing {

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

inline double Uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline double LogUniform(std::mt19937_64& gen, double lo, double hi) {
  return std::exp(Uniform(gen, std::log(lo), std::log(hi)));
}

inline Dataset RandomBallDataset(int n, int d, std::mt19937_64& gen) {
  Mat x(n, d);
  Vec y(n);
  for (int i = 0; i < n; ++i) {
    x.row(i) = Uniform(gen, 0.0, 1.0) * RandomUnit(d, gen).transpose();
    y(i) = gen() % 2 ? 1.0 : -1.0;
  }
  return *Dataset::Create(x, y);
}

inline double OpNorm(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.jacobiSvd().singularValues()(0);
}

// Neighboring datasets S and S + z with the 1/n-scaled extra term:
// empirical |Psi(H(S))^-1 g - Psi(H(S) + h(z)/n)^-1 g| against the bound
// times |g|. Half the trials pick z and g along the weakest eigendirection.
inline Sides SensitivityTrial(std::mt19937_64& gen, SoiKind soi,
                              ModifierKind mod) {
  const int n = 50 + static_cast<int>(gen() % 151);
  const int d = 1 + static_cast<int>(gen() % 8);
  const double lambda0 = LogUniform(gen, 1.0001 / (4.0 * n), 0.5);
  const Dataset data = RandomBallDataset(n, d, gen);
  const Vec w = RandomVec(d, gen, Uniform(gen, 0.0, 3.0));
  const SymmetricMatrix h = LogisticSoi(data, w, soi);
  Vec x, g;
  if (gen() % 2) {
    const auto [values, vectors] = JacobiEigen(h.dense());
    // Keep <x, w> = 0 so the per-example coefficient is its maximum 1/4.
    x = vectors.col(0);
    if (w.norm() > 0 && d > 1) {
      x -= x.dot(w) / w.squaredNorm() * w;
      if (x.norm() < 1e-8) x = RandomUnit(d, gen);
      x /= x.norm();
    }
    g = x * Uniform(gen, 0.1, 1.0);
  } else {
    x = Uniform(gen, 0.0, 1.0) * RandomUnit(d, gen);
    g = RandomVec(d, gen);
  }
  const SymmetricMatrix extra = LogisticExampleSoi(x, w, soi) * (1.0 / n);
  const SpectralModifier m{mod, lambda0};
  const auto a = ModifiedSoi::Create(h, m);
  const auto b = ModifiedSoi::Create(h + extra, m);
  const auto bound = SensitivityLogistic(n, m);
  return {(a->Solve(g) - b->Solve(g)).norm(), bound->value * g.norm()};
}

// |Psi(A) - Psi(B)|_F against |A - B|_F for the clip operator.
inline Sides ClipNonexpansiveTrial(std::mt19937_64& gen) {
  const int d = 1 + static_cast<int>(gen() % 8);
  const Mat a = RandomPsd(d, gen), b = RandomPsd(d, gen);
  const double lambda0 = LogUniform(gen, 1e-3, 2.0);
  const SpectralModifier m{ModifierKind::kClip, lambda0};
  const auto pa = ApplyModifier(SymmetricMatrix::Symmetrize(a), m);
  const auto pb = ApplyModifier(SymmetricMatrix::Symmetrize(b), m);
  return {(pa->dense() - pb->dense()).norm(), (a - b).norm()};
}

// Psi_clip(A) is the Frobenius projection onto {X : X >= lambda0 I}: no
// random feasible point is closer to A.
inline Sides ClipProjectionTrial(std::mt19937_64& gen) {
  const int d = 1 + static_cast<int>(gen() % 8);
  const Mat a = RandomPsd(d, gen);
  const double lambda0 = LogUniform(gen, 1e-2, 1.0);
  const auto p = ApplyModifier(SymmetricMatrix::Symmetrize(a),
                               {ModifierKind::kClip, lambda0});
  Mat candidate = p->dense() + RandomSymmetric(d, gen, LogUniform(gen, 1e-4, 1));
  // Pull the candidate back into the feasible set.
  const auto [values, vectors] = JacobiEigen(candidate);
  Vec fixed = values;
  for (int i = 0; i < d; ++i) fixed(i) = std::max(values(i), lambda0);
  candidate = vectors * fixed.asDiagonal() * vectors.transpose();
  return {(p->dense() - a).norm(), (candidate - a).norm()};
}

// |A^-1 - B^-1| against |A-B||A^-1|^2 / (1 - |A-B||A^-1|).
inline Sides InverseContinuityTrial(std::mt19937_64& gen, bool* applicable) {
  const int d = 1 + static_cast<int>(gen() % 8);
  const Mat a = RandomPsd(d, gen) + LogUniform(gen, 1e-2, 1) * Mat::Identity(d, d);
  const double inv_norm = OpNorm(a.inverse());
  Mat e = RandomSymmetric(d, gen);
  e *= Uniform(gen, 0.01, 0.99) / (inv_norm * OpNorm(e));
  const Mat b = a + e;
  const double r = OpNorm(e) * inv_norm;
  *applicable = r < 1;
  return {OpNorm(a.inverse() - b.inverse()),
          OpNorm(e) * inv_norm * inv_norm / (1 - r)};
}

// |Psi(A+B) - Psi(A)| against |B|(2/pi + 1/2 + log((|A - l0 I| + |B|)/|B|)/pi).
inline Sides KatoTrial(std::mt19937_64& gen) {
  const int d = 1 + static_cast<int>(gen() % 8);
  const Mat a = RandomPsd(d, gen);
  const Mat b = RandomPsd(d, gen, LogUniform(gen, 1e-4, 1.0));
  const double lambda0 = LogUniform(gen, 1e-3, 1.0);
  const SpectralModifier m{ModifierKind::kClip, lambda0};
  const auto pab = ApplyModifier(SymmetricMatrix::Symmetrize(a + b), m);
  const auto pa = ApplyModifier(SymmetricMatrix::Symmetrize(a), m);
  const double nb = OpNorm(b);
  const double na = OpNorm(a - lambda0 * Mat::Identity(d, d));
  const double factor =
      2 / M_PI + 0.5 + std::log((na + nb) / nb) / M_PI;
  return {OpNorm(pab->dense() - pa->dense()), nb * factor};
}

// One-example logistic loss f at w against the quadratic upper bound at v,
// and that bound against the (1/8)|w - v|^2 smoothness bound.
struct QuTrial {
  double loss;
  double qu_bound;
  double smooth_bound;
  double qu_lambda_max;
};

inline QuTrial QuBoundTrial(std::mt19937_64& gen) {
  const int d = 1 + static_cast<int>(gen() % 6);
  const Vec x = Uniform(gen, 0.0, 1.0) * RandomUnit(d, gen);
  const double y = gen() % 2 ? 1.0 : -1.0;
  const double scale = LogUniform(gen, 1e-3, 30.0);
  const Vec w = RandomVec(d, gen, scale), v = RandomVec(d, gen, scale);
  const Dataset one = *Dataset::Create(x.transpose(), Vec::Constant(1, y));
  const double fv = LogisticValue(one, v);
  const Vec gv = LogisticGradient(one, v);
  const Mat hq = LogisticExampleSoi(x, v, SoiKind::kQu).dense();
  const Vec diff = w - v;
  return {LogisticValue(one, w), fv + gv.dot(diff) + 0.5 * diff.dot(hq * diff),
          fv + gv.dot(diff) + diff.squaredNorm() / 8,
          hq.selfadjointView<Eigen::Lower>().eigenvalues().maxCoeff()};
}

}  // namespace dpnewton::testing

#endif  // DPNEWTON_TESTS_TESTING_PROPERTIES_H_
