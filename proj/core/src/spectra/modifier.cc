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


#include "dpnewton/spectra/modifier.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "dpnewton/base/status_macros.h"

namespace dpnewton {
namespace {

double ModifyEigenvalue(double lambda, const SpectralModifier& m) {
  // Round-off below zero is read as zero.
  const double clamped = std::max(lambda, 0.0);
  if (m.kind == ModifierKind::kAdd) return clamped + m.lambda0;
  if (std::abs(clamped - m.lambda0) <= kClipTieTolerance) return m.lambda0;
  return std::max(clamped, m.lambda0);
}

}  // namespace

const char* ModifierKindName(ModifierKind kind) {
  return kind == ModifierKind::kClip ? "clip" : "add";
}

absl::Status SpectralModifier::Validate() const {
  if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda0 must be positive, got ", lambda0));
  }
  return absl::OkStatus();
}

absl::StatusOr<SymmetricMatrix> ApplyModifier(const SymmetricMatrix& h,
                                              const SpectralModifier& m) {
  DPNEWTON_ASSIGN_OR_RETURN(ModifiedSoi soi, ModifiedSoi::Create(h, m));
  if (m.kind == ModifierKind::kAdd) return h.PlusIdentity(m.lambda0);
  return SymmetricMatrix::Symmetrize(soi.Modified());
}

absl::StatusOr<ModifiedSoi> ModifiedSoi::Create(const SymmetricMatrix& h,
                                                const SpectralModifier& m) {
  DPNEWTON_RETURN_IF_ERROR(m.Validate());
  DPNEWTON_ASSIGN_OR_RETURN(EigenDecomposition eig, EigSym(h));
  if (eig.eigenvalues[0] < -kPsdTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("second-order matrix is not PSD: smallest eigenvalue ",
                     eig.eigenvalues[0]));
  }
  Vector modified(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < modified.size(); ++i) {
    modified[i] = ModifyEigenvalue(eig.eigenvalues[i], m);
  }
  return ModifiedSoi(std::move(eig), std::move(modified));
}

Vector ModifiedSoi::Solve(const Vector& g) const {
  const Vector coeffs = eig_.eigenvectors.transpose() * g;
  return eig_.eigenvectors * coeffs.cwiseQuotient(modified_);
}

Matrix ModifiedSoi::Modified() const { return eig_.ReconstructWith(modified_); }

}  // namespace dpnewton
