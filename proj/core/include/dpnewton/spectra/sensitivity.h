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


#ifndef DPNEWTON_SPECTRA_SENSITIVITY_H_
#define DPNEWTON_SPECTRA_SENSITIVITY_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "dpnewton/spectra/modifier.h"

namespace dpnewton {

enum class SensitivityRegime {
  kLogisticAdd,
  kLogisticClip,
  kGeneralAdd,
  kGeneralClip,
  kMinibatchAdd,
  kMinibatchClip,
};

const char* SensitivityRegimeName(SensitivityRegime regime);

// l2 bound on how far Psi(H)^-1 g moves between neighbouring datasets, per
// unit of |g|.
struct SensitivityBound {
  double value = 0.0;
  SensitivityRegime regime = SensitivityRegime::kLogisticClip;
};

// Logistic loss: add 1/(4 n l^2 + l); clip 1/(4 n l^2 - l), needs n > 1/(4l).
absl::StatusOr<SensitivityBound> SensitivityLogistic(double n,
                                                     const SpectralModifier& m);

// K = 2/pi + 1/2 + (1/pi) log((n (L1 - lambda0) + L1) / L1).
double KatoFactor(double n, double lambda0, double l1);

// Any L1-smooth loss: add L1/(n l^2 - l L1), needs n l > L1;
// clip L1 K/(n l^2 - l L1 K), needs 2l <= L1 and n l > L1 K.
absl::StatusOr<SensitivityBound> SensitivityGeneral(double n,
                                                    const SpectralModifier& m,
                                                    double l1);

// Logistic bound with n replaced by the expected SOI batch n * p_h.
absl::StatusOr<SensitivityBound> SensitivityMinibatch(
    double n, double p_h, const SpectralModifier& m);

}  // namespace dpnewton

#endif  // DPNEWTON_SPECTRA_SENSITIVITY_H_
