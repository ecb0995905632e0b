// Copyright 2026 The pptatlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "pptatlas/types.hpp"

namespace pptatlas {

/// Kronecker product of two dense matrices.
template <typename A, typename B>
MatX kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          cplx(a(i, j)) * b.template cast<cplx>();
  return out;
}

/// Eigendecomposition of an 8x8 Hermitian matrix.
///
/// Eigenvalues are ascending. Each eigenvector is rephased so that its
/// first component of magnitude above 1e-12 is real and positive, which
/// makes the output reproducible across runs.
struct Eigensystem8 {
  RVec8 values;
  Mat8 vectors;
};
Eigensystem8 hermitian_eigen(const Mat8& h);
RVec8 hermitian_eigenvalues(const Mat8& h);

/// Rephases v in place (first significant component real positive).
void fix_phase(Eigen::Ref<VecX> v);

/// 1 - |<a,b>| / (|a| |b|); zero iff a and b span the same ray.
double ray_distance(const VecX& a, const VecX& b);

/// Columns forming an orthonormal basis of the range of m (thin SVD,
/// singular values above rel_tol * largest kept).
MatX orthonormal_range(const MatX& m, double rel_tol = 1e-10);

/// Orthonormal basis of the null space of m (right singular vectors with
/// singular value below rel_tol * largest).
MatX null_space(const MatX& m, double rel_tol = 1e-10);

/// Numerical rank with a relative singular-value cut.
int numerical_rank(const RMatX& m, double rel_tol);

}  // namespace pptatlas
