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


#include "dpnewton/spectra/sensitivity.h"

#include <cmath>
#include <numbers>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"

namespace dpnewton {
namespace {

absl::StatusOr<SensitivityBound> LogisticBound(double n,
                                               const SpectralModifier& m,
                                               SensitivityRegime add_regime,
                                               SensitivityRegime clip_regime) {
  DPNEWTON_RETURN_IF_ERROR(m.Validate());
  const double l = m.lambda0;
  if (m.kind == ModifierKind::kAdd) {
    return SensitivityBound{1.0 / (4.0 * n * l * l + l), add_regime};
  }
  if (!(n > 1.0 / (4.0 * l))) {
    return absl::FailedPreconditionError(absl::StrCat(
        "clip needs n > 1/(4 lambda0): n = ", n, ", lambda0 = ", l));
  }
  return SensitivityBound{1.0 / (4.0 * n * l * l - l), clip_regime};
}

}  // namespace

const char* SensitivityRegimeName(SensitivityRegime regime) {
  switch (regime) {
    case SensitivityRegime::kLogisticAdd:
      return "logistic-add";
    case SensitivityRegime::kLogisticClip:
      return "logistic-clip";
    case SensitivityRegime::kGeneralAdd:
      return "general-add";
    case SensitivityRegime::kGeneralClip:
      return "general-clip";
    case SensitivityRegime::kMinibatchAdd:
      return "minibatch-add";
    case SensitivityRegime::kMinibatchClip:
      return "minibatch-clip";
  }
  return "unknown";
}

absl::StatusOr<SensitivityBound> SensitivityLogistic(
    double n, const SpectralModifier& m) {
  return LogisticBound(n, m, SensitivityRegime::kLogisticAdd,
                       SensitivityRegime::kLogisticClip);
}

double KatoFactor(double n, double lambda0, double l1) {
  return 2.0 / std::numbers::pi + 0.5 +
         std::log((n * (l1 - lambda0) + l1) / l1) / std::numbers::pi;
}

absl::StatusOr<SensitivityBound> SensitivityGeneral(double n,
                                                    const SpectralModifier& m,
                                                    double l1) {
  DPNEWTON_RETURN_IF_ERROR(m.Validate());
  if (!(l1 > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("L1 must be positive, got ", l1));
  }
  const double l = m.lambda0;
  if (m.kind == ModifierKind::kAdd) {
    if (!(n * l > l1)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "add needs n lambda0 > L1: n lambda0 = ", n * l, ", L1 = ", l1));
    }
    return SensitivityBound{l1 / (n * l * l - l * l1),
                            SensitivityRegime::kGeneralAdd};
  }
  if (!(2.0 * l <= l1)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "clip needs 2 lambda0 <= L1: lambda0 = ", l, ", L1 = ", l1));
  }
  const double k = KatoFactor(n, l, l1);
  if (!(n * l > l1 * k)) {
    return absl::FailedPreconditionError(
        absl::StrCat("clip needs n lambda0 > L1 K: n lambda0 = ", n * l,
                     ", L1 K = ", l1 * k));
  }
  return SensitivityBound{l1 * k / (n * l * l - l * l1 * k),
                          SensitivityRegime::kGeneralClip};
}

absl::StatusOr<SensitivityBound> SensitivityMinibatch(
    double n, double p_h, const SpectralModifier& m) {
  if (!(p_h > 0.0 && p_h <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("SOI sampling rate must lie in (0, 1], got ", p_h));
  }
  return LogisticBound(n * p_h, m, SensitivityRegime::kMinibatchAdd,
                       SensitivityRegime::kMinibatchClip);
}

}  // namespace dpnewton
