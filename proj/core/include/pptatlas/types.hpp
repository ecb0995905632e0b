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

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace pptatlas {

using cplx = std::complex<double>;

/// Total Hilbert space dimension of three qubits.
inline constexpr int kDim = 8;
/// Real dimension of the space of 8x8 Hermitian matrices.
inline constexpr int kHermDim = kDim * kDim;

using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Mat8 = Eigen::Matrix<cplx, 8, 8>;
using Mat8x4 = Eigen::Matrix<cplx, 8, 4>;
using RMat8 = Eigen::Matrix<double, 8, 8>;
using Vec2 = Eigen::Matrix<cplx, 2, 1>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;
using Vec8 = Eigen::Matrix<cplx, 8, 1>;
using RVec8 = Eigen::Matrix<double, 8, 1>;

using RMat64 = Eigen::Matrix<double, kHermDim, kHermDim>;
using RVec64 = Eigen::Matrix<double, kHermDim, 1>;

using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using RMatX = Eigen::MatrixXd;
using RVecX = Eigen::VectorXd;

/// Ranks or other per-transpose data for rho, rho^T1, rho^T2, rho^T3.
template <typename T>
using PerTranspose = std::array<T, 4>;

}  // namespace pptatlas
