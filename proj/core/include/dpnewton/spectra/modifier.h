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


#ifndef DPNEWTON_SPECTRA_MODIFIER_H_
#define DPNEWTON_SPECTRA_MODIFIER_H_

#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpnewton/numkit/linalg.h"

namespace dpnewton {

enum class ModifierKind { kClip, kAdd };

const char* ModifierKindName(ModifierKind kind);

// Psi: clip raises every eigenvalue to at least lambda0, add shifts the whole
// spectrum by lambda0.
struct SpectralModifier {
  ModifierKind kind = ModifierKind::kClip;
  double lambda0 = 0.1;

  absl::Status Validate() const;
};

// Eigenvalues below this are reported as a not-PSD input.
inline constexpr double kPsdTolerance = 1e-6;
// Clip treats eigenvalues this close to lambda0 as equal to it.
inline constexpr double kClipTieTolerance = 1e-12;

// Psi(h). Clip returns sum_i max(lambda_i, lambda0) u_i u_i^T; add returns
// h + lambda0 I.
absl::StatusOr<SymmetricMatrix> ApplyModifier(const SymmetricMatrix& h,
                                              const SpectralModifier& m);

// Psi(h) held in factored form so Psi(h)^-1 g costs two mat-vecs.
class ModifiedSoi {
 public:
  static absl::StatusOr<ModifiedSoi> Create(const SymmetricMatrix& h,
                                            const SpectralModifier& m);

  // Psi(h)^-1 g.
  Vector Solve(const Vector& g) const;
  Matrix Modified() const;

  const EigenDecomposition& eig() const { return eig_; }
  const Vector& modified_eigenvalues() const { return modified_; }

 private:
  ModifiedSoi(EigenDecomposition eig, Vector modified)
      : eig_(std::move(eig)), modified_(std::move(modified)) {}

  EigenDecomposition eig_;
  Vector modified_;
};

}  // namespace dpnewton

#endif  // DPNEWTON_SPECTRA_MODIFIER_H_
