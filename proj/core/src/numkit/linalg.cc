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

#include "dpnewton/numkit/linalg.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "absl/status/status.h"

namespace dpnewton {

SymmetricMatrix SymmetricMatrix::Symmetrize(const Matrix& m) {
  assert(m.rows() == m.cols());
  Matrix sym = 0.5 * (m + m.transpose());
  // Averaging is exact up to rounding in each entry; copy one triangle so the
  // two sides agree bit for bit.
  return FromLowerTriangle(sym);
}

SymmetricMatrix SymmetricMatrix::FromLowerTriangle(const Matrix& m) {
  assert(m.rows() == m.cols());
  Matrix sym = m;
  sym.triangularView<Eigen::StrictlyUpper>() =
      m.triangularView<Eigen::StrictlyLower>().transpose();
  return SymmetricMatrix(std::move(sym));
}

SymmetricMatrix SymmetricMatrix::Zero(int dim) {
  return SymmetricMatrix(Matrix::Zero(dim, dim));
}

SymmetricMatrix SymmetricMatrix::Identity(int dim) {
  return SymmetricMatrix(Matrix::Identity(dim, dim));
}

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& other) const {
  return SymmetricMatrix(entries_ + other.entries_);
}

SymmetricMatrix SymmetricMatrix::operator-(const SymmetricMatrix& other) const {
  return SymmetricMatrix(entries_ - other.entries_);
}

SymmetricMatrix SymmetricMatrix::operator*(double scale) const {
  return SymmetricMatrix(entries_ * scale);
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  entries_ += other.entries_;
  return *this;
}

SymmetricMatrix SymmetricMatrix::PlusIdentity(double scale) const {
  Matrix shifted = entries_;
  shifted.diagonal().array() += scale;
  return SymmetricMatrix(std::move(shifted));
}

Matrix EigenDecomposition::Reconstruct() const {
  return ReconstructWith(eigenvalues);
}

Matrix EigenDecomposition::ReconstructWith(
    const Vector& mapped_eigenvalues) const {
  return eigenvectors * mapped_eigenvalues.asDiagonal() *
         eigenvectors.transpose();
}

absl::StatusOr<EigenDecomposition> EigSym(const SymmetricMatrix& a) {
  if (a.dim() < 1) {
    return absl::InvalidArgumentError("EigSym: empty matrix");
  }
  if (!a.AllFinite()) {
    return absl::InvalidArgumentError("EigSym: matrix has non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.dense(),
                                               Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    return absl::InternalError("EigSym: symmetric QR did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double SpectralNorm(const SymmetricMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.dense(),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Vector ProjectBall(const Vector& w, const Vector& center, double radius) {
  assert(radius > 0);
  const Vector offset = w - center;
  const double dist = offset.norm();
  if (dist <= radius) return w;
  return center + offset * (radius / dist);
}

SpanProjector SpanProjector::FromRows(const Matrix& rows, double tol) {
  const int d = static_cast<int>(rows.cols());
  std::vector<Vector> basis;
  basis.reserve(std::min<Eigen::Index>(rows.rows(), d));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    if (static_cast<int>(basis.size()) == d) break;
    Vector v = rows.row(i).transpose();
    const double original_norm = v.norm();
    if (original_norm == 0.0) continue;
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& q : basis) v -= q.dot(v) * q;
    }
    const double residual = v.norm();
    if (residual <= tol * original_norm) continue;
    basis.push_back(v / residual);
  }
  Matrix q(d, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) q.col(j) = basis[j];
  return SpanProjector(std::move(q));
}

Vector SpanProjector::Apply(const Vector& u) const {
  return basis_ * (basis_.transpose() * u);
}

Matrix SpanProjector::ProjectionMatrix() const {
  return basis_ * basis_.transpose();
}

double VNorm(const SpanProjector& projector, const Vector& u) {
  return (projector.basis().transpose() * u).norm();
}

}  // namespace dpnewton
