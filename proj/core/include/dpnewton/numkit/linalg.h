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

#ifndef DPNEWTON_NUMKIT_LINALG_H_
#define DPNEWTON_NUMKIT_LINALG_H_

#include <Eigen/Dense>

#include "absl/status/statusor.h"

namespace dpnewton {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Dense real symmetric matrix. The stored entries are always exactly
// symmetric: every constructor mirrors the lower triangle onto the upper one.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;

  // Averages `m` with its transpose. `m` must be square.
  static SymmetricMatrix Symmetrize(const Matrix& m);

  // Copies the lower triangle of `m` (including the diagonal) onto the upper
  // triangle. Useful after a rank-k update that only wrote one triangle.
  static SymmetricMatrix FromLowerTriangle(const Matrix& m);

  static SymmetricMatrix Zero(int dim);
  static SymmetricMatrix Identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& dense() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  double Trace() const { return entries_.trace(); }
  double FrobeniusNorm() const { return entries_.norm(); }
  bool AllFinite() const { return entries_.allFinite(); }

  SymmetricMatrix operator+(const SymmetricMatrix& other) const;
  SymmetricMatrix operator-(const SymmetricMatrix& other) const;
  SymmetricMatrix operator*(double scale) const;
  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix PlusIdentity(double scale) const;

 private:
  explicit SymmetricMatrix(Matrix entries) : entries_(std::move(entries)) {}

  Matrix entries_;
};

// Eigenpairs of a symmetric matrix. Eigenvalues are ascending and column i of
// `eigenvectors` belongs to `eigenvalues[i]`.
struct EigenDecomposition {
  Vector eigenvalues;
  Matrix eigenvectors;

  // sum_i lambda_i u_i u_i^T.
  Matrix Reconstruct() const;
  // sum_i mapped_i u_i u_i^T; `mapped_eigenvalues` replaces the spectrum.
  Matrix ReconstructWith(const Vector& mapped_eigenvalues) const;
};

// Symmetric eigendecomposition. Fails with InvalidArgument on non-finite
// entries.
absl::StatusOr<EigenDecomposition> EigSym(const SymmetricMatrix& a);

// Spectral (operator 2-) norm of a symmetric matrix.
double SpectralNorm(const SymmetricMatrix& a);

// Euclidean projection of `w` onto the closed ball {v : |v - center| <= r}.
Vector ProjectBall(const Vector& w, const Vector& center, double radius);

// Orthogonal projector V = Q Q^T onto span{x_1, ..., x_n}.
//
// The basis is built by modified Gram-Schmidt with one re-orthogonalization
// pass. A vector whose residual norm is at most `tol` times its original norm
// is treated as dependent and dropped.
class SpanProjector {
 public:
  static constexpr double kDefaultTolerance = 1e-8;

  // Each row of `rows` is one vector x_i.
  static SpanProjector FromRows(const Matrix& rows,
                                double tol = kDefaultTolerance);

  int rank() const { return static_cast<int>(basis_.cols()); }
  int dim() const { return static_cast<int>(basis_.rows()); }

  // d x rank matrix with orthonormal columns.
  const Matrix& basis() const { return basis_; }

  Vector Apply(const Vector& u) const;
  Matrix ProjectionMatrix() const;

 private:
  explicit SpanProjector(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
};

// The seminorm |u|_V = sqrt(u^T V u) = |Q^T u|.
double VNorm(const SpanProjector& projector, const Vector& u);

}  // namespace dpnewton

#endif  // DPNEWTON_NUMKIT_LINALG_H_
