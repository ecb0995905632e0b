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

#include "pptatlas/qstate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "pptatlas/errors.hpp"
#include "pptatlas/linalg.hpp"

namespace pptatlas {

HermitianOperator HermitianOperator::normalized() const {
  const double tr = trace();
  if (std::abs(tr) < 1e-300) throw InvalidInput("cannot normalize a traceless operator");
  return HermitianOperator(m_ / tr);
}

double HermitianOperator::inner(const HermitianOperator& other) const {
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (m_.array() * other.m_.conjugate().array()).sum().real();
}

Mat8 partial_transpose(const Mat8& x, int subsystem) {
  if (subsystem == 0) return x;
  if (subsystem < 0 || subsystem > 3) throw InvalidInput("subsystem must be in 0..3");
  const int bit = 1 << (3 - subsystem);
  Mat8 out;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      const int si = (i & ~bit) | (j & bit);
      const int sj = (j & ~bit) | (i & bit);
      out(i, j) = x(si, sj);
    }
  }
  return out;
}

HermitianOperator partial_transpose(const HermitianOperator& rho, int subsystem) {
  // The index permutation maps Hermitian matrices to Hermitian matrices
  // exactly, so the symmetrizing constructor is a bitwise no-op here.
  return HermitianOperator(partial_transpose(rho.matrix(), subsystem));
}

Vec8 split_product(const Vec2& y, const Vec4& v) {
  const cplx c = y(0), d = y(1);
  const cplx p = v(0), q = v(1), r = v(2), s = v(3);
  Vec8 out;
  out << c * p, c * q, d * p, d * q, c * r, c * s, d * r, d * s;
  return out;
}

Vec8 product_vector(const Vec2& x, const Vec2& y, const Vec2& z) {
  Vec8 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) out(4 * a + 2 * b + c) = x(a) * y(b) * z(c);
  return out;
}

Eigen::Matrix2d epsilon2() {
  Eigen::Matrix2d e;
  e << 0, 1, -1, 0;
  return e;
}

Eigen::Matrix4d epsilon_pair() {
  const Eigen::Matrix2d e = epsilon2();
  Eigen::Matrix4d out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = e(i, j) * e;
  return out;
}

RMat8 invariant_tensor_E() {
  const Eigen::Matrix2d e = epsilon2();
  const Eigen::Matrix4d ee = epsilon_pair();
  RMat8 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<4, 4>(4 * i, 4 * j) = e(i, j) * ee;
  return out;
}

Mat2 pauli(int mu) {
  Mat2 s;
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw InvalidInput("Pauli index must be in 0..3");
  }
  return s;
}

namespace {

const std::array<Mat8, 64>& pauli_table() {
  static const std::array<Mat8, 64> table = [] {
    std::array<Mat8, 64> t;
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) t[16 * l + 4 * m + n] = kron(pauli(l), kron(pauli(m), pauli(n)));
    return t;
  }();
  return table;
}

constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

}  // namespace

Mat8 pauli_product(int l, int m, int n) { return pauli_table()[16 * l + 4 * m + n]; }

LorentzTensor LorentzTensor::lowered() const {
  LorentzTensor out;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) out(l, m, n) = metric(l) * metric(m) * metric(n) * (*this)(l, m, n);
  return out;
}

LorentzTensor pauli_decompose(const HermitianOperator& a) {
  const auto& table = pauli_table();
  LorentzTensor t;
  for (int k = 0; k < 64; ++k) {
    // Tr(A P) with P Hermitian.
    t.coeffs[k] = (a.matrix().array() * table[k].conjugate().array()).sum().real() / 8.0;
  }
  return t;
}

HermitianOperator pauli_reconstruct(const LorentzTensor& t) {
  const auto& table = pauli_table();
  Mat8 m = Mat8::Zero();
  for (int k = 0; k < 64; ++k) m += t.coeffs[k] * table[k];
  return HermitianOperator(m);
}

PerTranspose<int> PptProfile::sorted_ranks() const {
  auto r = ranks;
  std::sort(r.begin(), r.end());
  return r;
}

int PptProfile::square_sum() const {
  int s = 0;
  for (int r : ranks) s += r * r;
  return s;
}

bool PptProfile::all_ranks(int r) const {
  return std::all_of(ranks.begin(), ranks.end(), [r](int x) { return x == r; });
}

PptProfile ppt_profile(const HermitianOperator& rho, const Tolerances& tol) {
  const HermitianOperator unit = rho.normalized();
  PptProfile p;
  p.tolerance = tol.rank_tol;
  p.is_ppt = true;
  for (int i = 0; i < 4; ++i) {
    const RVec8 ev = hermitian_eigenvalues(partial_transpose(unit.matrix(), i));
    const double top = ev.cwiseAbs().maxCoeff();
    const double cut = tol.rank_tol * top;
    int rank = 0;
    double discarded = 0.0;
    for (int k = 0; k < kDim; ++k) {
      const double mag = std::abs(ev(k));
      if (mag > cut) {
        ++rank;
      } else {
        discarded = std::max(discarded, mag / top);
      }
    }
    p.ranks[i] = rank;
    p.margins[i] = discarded;
    p.min_eigenvalues[i] = ev(0);
    if (ev(0) < -tol.psd_tol) {
      if (i == 0) throw NotAState("operator has a negative eigenvalue " + std::to_string(ev(0)));
      p.is_ppt = false;
    }
  }
  return p;
}

double min_ppt_eigenvalue(const HermitianOperator& rho) {
  double lo = hermitian_eigenvalues(rho.matrix())(0);
  for (int i = 1; i < 4; ++i)
    lo = std::min(lo, hermitian_eigenvalues(partial_transpose(rho.matrix(), i))(0));
  return lo;
}

Mat8 product_matrix(const Mat2& v1, const Mat2& v2, const Mat2& v3) {
  return kron(v1, kron(v2, v3));
}

HermitianOperator product_transform(const HermitianOperator& rho, const Mat2& v1,
                                    const Mat2& v2, const Mat2& v3) {
  for (const Mat2* v : {&v1, &v2, &v3}) {
    if (std::abs(v->determinant()) < 1e-12) throw SingularFactor("product factor is singular");
  }
  const Mat8 v = product_matrix(v1, v2, v3);
  return HermitianOperator(v * rho.matrix() * v.adjoint());
}

namespace {

// Rank-one split of a rows x cols reshape: returns (left, right) with
// m == left * right^T when the second singular value is negligible.
template <int R, int C>
std::optional<std::pair<Eigen::Matrix<cplx, R, 1>, Eigen::Matrix<cplx, C, 1>>> rank_one_split(
    const Eigen::Matrix<cplx, R, C>& m, double rel_tol) {
  Eigen::JacobiSVD<Eigen::Matrix<cplx, R, C>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0 || s(1) > rel_tol * s(0)) return std::nullopt;
  Eigen::Matrix<cplx, R, 1> left = svd.matrixU().col(0);
  Eigen::Matrix<cplx, C, 1> right = (left.adjoint() * m).transpose();
  return std::make_pair(left, right);
}

}  // namespace

std::optional<std::array<Vec2, 3>> factor_full_product(const Vec8& v, double rel_tol) {
  Eigen::Matrix<cplx, 2, 4> first;
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 4; ++k) first(a, k) = v(4 * a + k);
  auto outer = rank_one_split<2, 4>(first, rel_tol);
  if (!outer) return std::nullopt;
  Eigen::Matrix<cplx, 2, 2> rest;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) rest(b, c) = outer->second(2 * b + c);
  auto inner = rank_one_split<2, 2>(rest, rel_tol);
  if (!inner) return std::nullopt;
  std::array<Vec2, 3> factors{outer->first, inner->first, inner->second};
  if ((product_vector(factors[0], factors[1], factors[2]) - v).norm() > 1e3 * rel_tol * v.norm())
    return std::nullopt;
  return factors;
}

bool is_full_product(const Vec8& v, double rel_tol) {
  return factor_full_product(v, rel_tol).has_value();
}

Vec8 w_vector() {
  Vec8 v;
  v << 0, 1, 1, 0, 1, 0, 0, 0;
  return v;
}

Vec8 ghz_vector() {
  Vec8 v;
  v << 1, 0, 0, 0, 0, 0, 0, 1;
  return v;
}

}  // namespace pptatlas
