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

#include "pptatlas/prodvec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pptatlas/errors.hpp"
#include "pptatlas/linalg.hpp"
#include "pptatlas/sampling.hpp"

namespace pptatlas {

namespace {

using Mat4 = Eigen::Matrix4cd;

// Rows of psi holding qubit value 0 and 1 of the split qubit, ordered by the
// index of the remaining two qubits.
struct CutRows {
  std::array<int, 4> top;
  std::array<int, 4> bottom;
};

CutRows cut_rows(Bipartition b) {
  switch (b) {
    case Bipartition::Q1_Q23:
      return {{0, 1, 2, 3}, {4, 5, 6, 7}};
    case Bipartition::Q2_Q13:
      return {{0, 1, 4, 5}, {2, 3, 6, 7}};
    case Bipartition::Q3_Q12:
      return {{0, 2, 4, 6}, {1, 3, 5, 7}};
  }
  throw InvalidInput("unknown bipartition");
}

Mat4 pick_rows(const Mat8x4& psi, const std::array<int, 4>& rows) {
  Mat4 m;
  for (int r = 0; r < 4; ++r) m.row(r) = psi.row(rows[r]);
  return m;
}

// Best qubit (x) rest split of a unit vector; returns the relative size of
// the discarded singular value.
double split(Bipartition b, const Vec8& phi, Vec2& qubit, Vec4& rest) {
  const CutRows rows = cut_rows(b);
  Eigen::Matrix<cplx, 2, 4> r;
  for (int k = 0; k < 4; ++k) {
    r(0, k) = phi(rows.top[k]);
    r(1, k) = phi(rows.bottom[k]);
  }
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 2, 4>> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  qubit = svd.matrixU().col(0);
  // Phase convention: the first non-negligible qubit component is real positive.
  const int lead = std::abs(qubit(0)) > 1e-12 ? 0 : 1;
  const cplx phase = std::abs(qubit(lead)) / qubit(lead);
  qubit *= phase;
  rest = (s(0) / phase) * svd.matrixV().col(0).conjugate();
  return s(0) > 0 ? s(1) / s(0) : 1.0;
}

bool distinct(const Eigen::Vector4cd& mu, double sep) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double scale = std::max({1.0, std::abs(mu(i)), std::abs(mu(j))});
      if (std::abs(mu(i) - mu(j)) < sep * scale) return false;
    }
  return true;
}

bool try_pencil(const Mat8x4& psi, const Mat8x4& solve_psi, Bipartition b, const PencilOptions& options,
                std::vector<BipartiteProduct>& out) {
  const CutRows rows = cut_rows(b);
  const Mat4 a = pick_rows(solve_psi, rows.top);
  const Mat4 bm = pick_rows(solve_psi, rows.bottom);
  Eigen::JacobiSVD<Mat4> svd(bm);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0 || s(3) < options.min_condition * s(0)) return false;
  Eigen::ComplexEigenSolver<Mat4> solver(bm.fullPivLu().solve(a));
  if (solver.info() != Eigen::Success || !distinct(solver.eigenvalues(), options.min_separation)) return false;

  out.clear();
  for (int k = 0; k < 4; ++k) {
    BipartiteProduct p;
    p.bipartition = b;
    p.alpha = solver.eigenvectors().col(k);
    Vec8 phi = psi * p.alpha;
    const double n = phi.norm();
    if (n < 1e-12) return false;
    p.alpha /= n;
    p.vector = phi / n;
    if (split(b, p.vector, p.qubit, p.rest) > 1e-6) return false;
    p.vector = bipartite_glue(b, p.qubit, p.rest);
    p.mu_infinite = std::abs(p.qubit(1)) < 1e-12;
    p.mu = p.mu_infinite ? cplx(std::numeric_limits<double>::infinity(), 0) : p.qubit(0) / p.qubit(1);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const BipartiteProduct& l, const BipartiteProduct& r) {
    if (l.mu_infinite != r.mu_infinite) return r.mu_infinite;
    const double al = std::abs(l.mu), ar = std::abs(r.mu);
    if (std::abs(al - ar) > 1e-9 * std::max(1.0, std::max(al, ar))) return al < ar;
    return std::arg(l.mu) < std::arg(r.mu);
  });
  return true;
}

double det2(const Vec2& a, const Vec2& b) { return std::abs(a(0) * b(1) - a(1) * b(0)); }
cplx cdet2(const Vec2& a, const Vec2& b) { return a(0) * b(1) - a(1) * b(0); }

}  // namespace

SubspaceBasis::SubspaceBasis(const Mat8x4& columns) {
  Eigen::JacobiSVD<Mat8x4> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0 || s(3) < 1e-10 * s(0)) throw InvalidInput("subspace columns are not linearly independent");
  // QR keeps the span of each leading set of columns, unlike the SVD frame.
  Eigen::HouseholderQR<Mat8x4> qr(columns);
  psi_ = qr.householderQ() * Mat8x4::Identity();
}

double SubspaceBasis::residual(const Vec8& v) const {
  return (v - psi_ * (psi_.adjoint() * v)).norm() / v.norm();
}

std::string to_string(Bipartition b) {
  switch (b) {
    case Bipartition::Q1_Q23:
      return "1|23";
    case Bipartition::Q2_Q13:
      return "2|13";
    case Bipartition::Q3_Q12:
      return "3|12";
  }
  return "?";
}

int split_qubit(Bipartition b) { return static_cast<int>(b) + 1; }

Vec8 bipartite_glue(Bipartition b, const Vec2& qubit, const Vec4& rest) {
  const CutRows rows = cut_rows(b);
  Vec8 v;
  for (int k = 0; k < 4; ++k) {
    v(rows.top[k]) = qubit(0) * rest(k);
    v(rows.bottom[k]) = qubit(1) * rest(k);
  }
  return v;
}

std::vector<BipartiteProduct> product_vectors_in_subspace(const SubspaceBasis& basis, Bipartition b,
                                                          const PencilOptions& options) {
  std::vector<BipartiteProduct> out;
  if (try_pencil(basis.psi(), basis.psi(), b, options, out)) return out;
  Rng rng(options.seed);
  for (int attempt = 0; attempt < options.max_transforms; ++attempt) {
    const auto v = random_sl2_triple(rng, 3.0);
    const Mat8x4 transformed = product_matrix(v[0], v[1], v[2]) * basis.psi();
    if (try_pencil(basis.psi(), transformed, b, options, out)) return out;
  }
  throw DegeneratePencil("pencil for bipartition " + to_string(b) + " stayed singular or degenerate after " +
                         std::to_string(options.max_transforms) + " random product transforms");
}

std::vector<ProductVectorTriple> full_products_in_subspace(const SubspaceBasis& basis,
                                                           const PencilOptions& options, double rel_tol) {
  std::vector<ProductVectorTriple> out;
  for (const BipartiteProduct& p : product_vectors_in_subspace(basis, Bipartition::Q1_Q23, options)) {
    const auto f = factor_full_product(p.vector, rel_tol);
    if (f) out.push_back({(*f)[0], (*f)[1], (*f)[2]});
  }
  return out;
}

bool same_ray(const VecX& a, const VecX& b, double tol) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return false;
  return 1.0 - std::abs(a.dot(b)) / (na * nb) < tol;
}

cplx cross_ratio(const Quadruple& x) {
  return -(cdet2(x[0], x[2]) * cdet2(x[1], x[3])) / (cdet2(x[0], x[3]) * cdet2(x[1], x[2]));
}

QuadrupleStandardForm standard_form_quadruple(const Quadruple& x) {
  Quadruple xn;
  for (int i = 0; i < 4; ++i) {
    const double n = x[i].norm();
    if (n == 0.0) throw DegenerateQuadruple("zero vector in quadruple");
    xn[i] = x[i] / n;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (det2(xn[i], xn[j]) < 1e-10)
        throw DegenerateQuadruple("vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " are parallel");

  Mat2 u;
  u << xn[1](1), -xn[1](0), -xn[0](1), xn[0](0);
  const Vec2 y3 = u * xn[2];
  const Vec2 y4 = u * xn[3];
  const cplx t1 = y3(1) / y3(0);
  const cplx t2 = y4(0) / y4(1);
  Mat2 v;
  v << -t1, 0, 0, 1;

  QuadrupleStandardForm sf;
  sf.transform = v * u;
  sf.t = -t1 * t2;
  const int pick[4] = {0, 1, 0, 1};
  for (int i = 0; i < 4; ++i) sf.scales[i] = (sf.transform * x[i])(pick[i]);
  sf.cross_ratio = cross_ratio(x);
  return sf;
}

OrthogonalPairing orthogonal_pairing(const Quadruple& x) {
  const std::array<std::array<int, 4>, 3> orders{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  OrthogonalPairing best;
  double best_arg = std::numeric_limits<double>::infinity();
  for (const auto& order : orders) {
    const Quadruple q{x[order[0]], x[order[1]], x[order[2]], x[order[3]]};
    const QuadrupleStandardForm sf = standard_form_quadruple(q);
    const double a = std::abs(std::arg(sf.t));
    if (a < best_arg) {
      best_arg = a;
      best.ordering = order;
      best.parameter = sf.t;
      Mat2 w;
      w << 1, 0, 0, std::sqrt(sf.t);
      best.transform = w * sf.transform;
    }
  }
  return best;
}

std::array<ProductVectorTriple, 4> upb_standard(double theta1, double theta2, double theta3) {
  for (double th : {theta1, theta2, theta3})
    if (std::abs(std::sin(th)) < 1e-8 || std::abs(std::cos(th)) < 1e-8)
      throw DegenerateAngles("UPB angle " + std::to_string(th) + " makes two factors parallel");
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const double c3 = std::cos(theta3), s3 = std::sin(theta3);
  const Vec2 x[4] = {Vec2(1, 0), Vec2(0, 1), Vec2(c1, -s1), Vec2(s1, c1)};
  const Vec2 y[4] = {Vec2(1, 0), Vec2(c2, -s2), Vec2(0, 1), Vec2(s2, c2)};
  const Vec2 z[4] = {Vec2(1, 0), Vec2(c3, -s3), Vec2(s3, c3), Vec2(0, 1)};
  std::array<ProductVectorTriple, 4> upb;
  for (int i = 0; i < 4; ++i) upb[i] = {x[i], y[i], z[i]};
  return upb;
}

HermitianOperator upb_state(const std::array<ProductVectorTriple, 4>& upb) {
  std::array<Vec8, 4> psi;
  for (int i = 0; i < 4; ++i) psi[i] = upb[i].vector();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(psi[i].dot(psi[j]) - (i == j ? 1.0 : 0.0)) > 1e-10)
        throw NotOrthonormal("UPB vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " are not orthonormal");
  Mat8 rho = Mat8::Identity();
  for (const Vec8& p : psi) rho -= p * p.adjoint();
  return HermitianOperator(rho / 4.0);
}

}  // namespace pptatlas
