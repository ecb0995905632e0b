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

#include "pptatlas/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pptatlas {

void fix_phase(Eigen::Ref<VecX> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12) {
      v *= std::conj(v(i)) / mag;
      v(i) = mag;
      return;
    }
  }
}

Eigensystem8 hermitian_eigen(const Mat8& h) {
  Eigen::SelfAdjointEigenSolver<Mat8> solver(h);
  Eigensystem8 out{solver.eigenvalues(), solver.eigenvectors()};
  for (int k = 0; k < kDim; ++k) {
    VecX col = out.vectors.col(k);
    fix_phase(col);
    out.vectors.col(k) = col;
  }
  return out;
}

RVec8 hermitian_eigenvalues(const Mat8& h) {
  Eigen::SelfAdjointEigenSolver<Mat8> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double ray_distance(const VecX& a, const VecX& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 1.0;
  return 1.0 - std::abs(a.dot(b)) / (na * nb);
}

MatX orthonormal_range(const MatX& m, double rel_tol) {
  Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return svd.matrixU().leftCols(r);
}

MatX null_space(const MatX& m, double rel_tol) {
  Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  int r = 0;
  while (r < s.size() && s(r) > rel_tol * top) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

int numerical_rank(const RMatX& m, double rel_tol) {
  Eigen::JacobiSVD<RMatX> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return r;
}

}  // namespace pptatlas
