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

// Core value types and exact tensor operations on C^2 (x) C^2 (x) C^2.
//
// Basis convention: |abc> has index 4a + 2b + c, so subsystem 1 is the most
// significant bit. A product vector (a,b) (x) (c,d) (x) (e,f) therefore has
// components (ace, acf, ade, adf, bce, bcf, bde, bdf).

#pragma once

#include <array>
#include <optional>

#include "pptatlas/config.hpp"
#include "pptatlas/types.hpp"

namespace pptatlas {

/// 8x8 complex Hermitian matrix. Construction symmetrizes the input as
/// (M + M^dagger) / 2, so the stored entries are exactly Hermitian.
class HermitianOperator {
 public:
  HermitianOperator() : m_(Mat8::Zero()) {}
  explicit HermitianOperator(const Mat8& m) : m_((m + m.adjoint()) * 0.5) {}

  static HermitianOperator identity() { return HermitianOperator(Mat8::Identity()); }
  static HermitianOperator projector(const Vec8& psi) {
    return HermitianOperator(psi * psi.adjoint());
  }
  /// Normalized maximally mixed state 1/8.
  static HermitianOperator maximally_mixed() {
    return HermitianOperator(Mat8::Identity() / 8.0);
  }

  const Mat8& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.norm(); }
  /// Largest |imaginary part| over all entries.
  double max_imag() const { return m_.imag().cwiseAbs().maxCoeff(); }

  /// Copy scaled to unit trace. Throws InvalidInput if the trace vanishes.
  HermitianOperator normalized() const;

  /// Tr(A B), the real inner product on Hermitian matrices.
  double inner(const HermitianOperator& other) const;

  HermitianOperator transpose() const { return HermitianOperator(m_.transpose()); }
  HermitianOperator conjugate() const { return HermitianOperator(m_.conjugate()); }

  HermitianOperator& operator+=(const HermitianOperator& o) {
    m_ += o.m_;
    return *this;
  }
  HermitianOperator& operator-=(const HermitianOperator& o) {
    m_ -= o.m_;
    return *this;
  }
  HermitianOperator& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    return a += b;
  }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) {
    return a -= b;
  }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }

 private:
  Mat8 m_;
};

/// Transposition of subsystem `subsystem` (1, 2 or 3); subsystem 0 is the
/// identity so that loops over T0..T3 read naturally. Works on any 8x8
/// matrix, Hermitian or not.
Mat8 partial_transpose(const Mat8& x, int subsystem);
HermitianOperator partial_transpose(const HermitianOperator& rho, int subsystem);

/// y (x)_s v: the tensor product with the qubit inserted as the middle
/// factor, so that x (x) y (x) z == y (x)_s (x (x) z).
Vec8 split_product(const Vec2& y, const Vec4& v);

/// x (x) y (x) z.
Vec8 product_vector(const Vec2& x, const Vec2& y, const Vec2& z);

/// The 2x2 Levi-Civita symbol [[0,1],[-1,0]].
Eigen::Matrix2d epsilon2();
/// E = eps (x) eps (x) eps, real antisymmetric with E^2 = -1.
RMat8 invariant_tensor_E();
/// eps (x) eps acting on the two-qubit factor; symmetric.
Eigen::Matrix4d epsilon_pair();

/// Pauli matrix sigma_mu, mu = 0..3 (sigma_0 = identity).
Mat2 pauli(int mu);
/// sigma_l (x) sigma_m (x) sigma_n.
Mat8 pauli_product(int l, int m, int n);

/// The 64 real coefficients a^{lmn} of A = a^{lmn} sigma_l (x) sigma_m (x) sigma_n.
struct LorentzTensor {
  std::array<double, 64> coeffs{};

  double& operator()(int l, int m, int n) { return coeffs[16 * l + 4 * m + n]; }
  double operator()(int l, int m, int n) const { return coeffs[16 * l + 4 * m + n]; }

  /// Copy with every index lowered by g = diag(1, -1, -1, -1).
  LorentzTensor lowered() const;
};

LorentzTensor pauli_decompose(const HermitianOperator& a);
HermitianOperator pauli_reconstruct(const LorentzTensor& t);

/// Ranks of rho, rho^T1, rho^T2, rho^T3 with the diagnostic eigenvalue data
/// used to decide them.
struct PptProfile {
  PerTranspose<int> ranks{};
  /// Largest discarded |eigenvalue| relative to the largest eigenvalue.
  PerTranspose<double> margins{};
  /// Smallest eigenvalue of each transpose (unit-trace scale).
  PerTranspose<double> min_eigenvalues{};
  double tolerance = 0.0;
  bool is_ppt = false;

  /// Ranks sorted ascending, the key used by census tables.
  PerTranspose<int> sorted_ranks() const;
  int square_sum() const;
  /// Square sum at most the three-qubit extremality bound 3*8^2 + 1 = 193.
  bool extremality_compatible() const { return square_sum() <= 193; }
  bool all_ranks(int r) const;
};

/// Rank profile of rho. The matrix is scaled to unit trace internally.
/// Throws NotAState when rho itself has an eigenvalue below -psd_tol.
PptProfile ppt_profile(const HermitianOperator& rho, const Tolerances& tol = {});

/// Smallest eigenvalue over rho and its three single partial transposes.
double min_ppt_eigenvalue(const HermitianOperator& rho);

/// (V1 (x) V2 (x) V3) rho (V1 (x) V2 (x) V3)^dagger. Throws SingularFactor
/// when any |det Vi| < 1e-12.
HermitianOperator product_transform(const HermitianOperator& rho, const Mat2& v1,
                                    const Mat2& v2, const Mat2& v3);
Mat8 product_matrix(const Mat2& v1, const Mat2& v2, const Mat2& v3);

/// Factors of a 2x2x2 product vector, when v is one (within rel_tol on the
/// singular values of each bipartite reshape).
std::optional<std::array<Vec2, 3>> factor_full_product(const Vec8& v, double rel_tol = 1e-7);
bool is_full_product(const Vec8& v, double rel_tol = 1e-7);

/// The W and GHZ vectors (unnormalized).
Vec8 w_vector();
Vec8 ghz_vector();

}  // namespace pptatlas
