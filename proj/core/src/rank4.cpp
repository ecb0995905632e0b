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

#include "pptatlas/rank4.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pptatlas/errors.hpp"
#include "pptatlas/extremal.hpp"
#include "pptatlas/invariants.hpp"
#include "pptatlas/linalg.hpp"

namespace pptatlas {

namespace {

constexpr double kType1MinFaceGap = 1e-4;

Mat8 weighted_sum(const Mat8x4& v, const RVec4& w) {
  Mat8 m = Mat8::Zero();
  for (int k = 0; k < 4; ++k) m += w(k) * v.col(k) * v.col(k).adjoint();
  return m;
}

double quadratic_form(const RVec4& v) { return epsilon_form(v, v); }

}  // namespace

Mat8 BiseparableTriple::from_e() const { return weighted_sum(e, lambda); }
Mat8 BiseparableTriple::from_f() const { return weighted_sum(f, mu); }
Mat8 BiseparableTriple::from_g() const { return weighted_sum(g, nu); }

double BiseparableTriple::decomposition_gap() const {
  const Mat8 a = from_e(), b = from_f(), c = from_g();
  return std::max({(a - b).norm(), (a - c).norm(), (b - c).norm()});
}

std::string to_string(Rank4Type type) { return type == Rank4Type::TypeI ? "TypeI" : "TypeII"; }

Rank4Type classify_type(const HermitianOperator& rho, const Tolerances& tol) {
  const PptProfile p = ppt_profile(rho, tol);
  if (!p.is_ppt || !p.all_ranks(4)) throw NotRank4("classify_type: profile is not PPT 4444");
  const double tr = rho.trace();
  return quadratic_invariant(rho).value() < tol.i2_zero_tol * tr * tr ? Rank4Type::TypeII : Rank4Type::TypeI;
}

double epsilon_form(const RVec4& a, const RVec4& b) { return a.dot(epsilon_pair() * b); }

TypeIState type1_from_matrix(const RMat4& u_in) {
  constexpr double kMinForm = 1e-10;
  RMat4 u = u_in;
  TypeIParams p;
  const double q3 = quadratic_form(u.col(2));
  const double q4 = quadratic_form(u.col(3));
  if (std::abs(q4) < kMinForm) throw DegenerateDraw("type1: u4 has a vanishing quadratic form");
  p.t1 = q3 / q4;

  // Rescale u_i by alpha so that q_i alpha^2 = -rest; flip the first two
  // components first when the signs do not allow it.
  auto fix = [&](int col, double rest, bool& flipped, double& alpha) {
    double q = quadratic_form(u.col(col));
    if (std::abs(q) < kMinForm || std::abs(rest) < kMinForm)
      throw DegenerateDraw("type1: a quadratic form vanishes");
    double a2 = -rest / q;
    if (a2 < 0) {
      u(0, col) = -u(0, col);
      u(1, col) = -u(1, col);
      flipped = true;
      q = quadratic_form(u.col(col));
      a2 = -rest / q;
    }
    alpha = std::sqrt(a2);
    u.col(col) *= alpha;
  };
  fix(0, q3 + p.t1 * p.t1 * q4, p.u1_flipped, p.alpha1);
  fix(1, q3 + q4, p.u2_flipped, p.alpha2);
  p.u = u;

  // e_i = x_i (x) u_i with x = [[1, 0, 1, t1], [0, 1, -1, 1]].
  const double x[2][4] = {{1, 0, 1, p.t1}, {0, 1, -1, 1}};
  Eigen::Matrix<double, 8, 8> rho = Eigen::Matrix<double, 8, 8>::Zero();
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix<double, 8, 1> e;
    e << x[0][i] * u.col(i), x[1][i] * u.col(i);
    rho += e * e.transpose();
  }
  rho /= rho.trace();
  return {HermitianOperator(rho.cast<cplx>()), p};
}

TypeIState construct_type1(Rng& rng) {
  for (int draw = 0; draw < 64; ++draw) {
    RMat4 u;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) u(i, j) = rng.normal();
    TypeIState s;
    try {
      s = type1_from_matrix(u);
    } catch (const DegenerateDraw&) {
      continue;
    }
    const Eigensystem8 es = hermitian_eigen(s.state.matrix());
    const SubspaceBasis range(es.vectors.rightCols<4>());
    Quadruple y, z;
    try {
      const auto py = product_vectors_in_subspace(range, Bipartition::Q2_Q13);
      const auto pz = product_vectors_in_subspace(range, Bipartition::Q3_Q12);
      for (int k = 0; k < 4; ++k) {
        y[k] = py[k].qubit;
        z[k] = pz[k].qubit;
      }
      s.params.t2 = standard_form_quadruple(y).t;
      s.params.t3 = standard_form_quadruple(z).t;
    } catch (const Error&) {
      continue;
    }
    // Draws close to a nonextremal configuration are too ill-conditioned for
    // the face test; treat them as degenerate.
    const Eigen::SelfAdjointEigenSolver<RMat64> face(face_operators(s.state).sum(), Eigen::EigenvaluesOnly);
    if (face.eigenvalues()(kHermDim - 2) > 4.0 - kType1MinFaceGap) continue;
    return s;
  }
  throw DegenerateDraw("construct_type1: 64 degenerate draws");
}

ParameterCount type1_parameter_count(const RMat4& u, double step, double rel_tol) {
  const TypeIState base = type1_from_matrix(u);
  auto coords = [](const HermitianOperator& rho) {
    const LorentzTensor t = pauli_decompose(rho);
    return Eigen::Map<const RVec64>(t.coeffs.data());
  };
  RMatX family(64, 16);
  for (int k = 0; k < 16; ++k) {
    RMat4 up = u, um = u;
    up(k / 4, k % 4) += step;
    um(k / 4, k % 4) -= step;
    family.col(k) = (coords(type1_from_matrix(up).state) - coords(type1_from_matrix(um).state)) / (2 * step);
  }
  // d/ds of V rho V^T / Tr for V = 1 (x) exp(sG) (x) 1 and 1 (x) 1 (x) exp(sG).
  const Mat8& rho = base.state.matrix();
  const Mat2 gens[3] = {(Mat2() << 1, 0, 0, -1).finished(), (Mat2() << 0, 1, 0, 0).finished(),
                        (Mat2() << 0, 0, 1, 0).finished()};
  RMatX orbit(64, 6);
  for (int q = 0; q < 2; ++q)
    for (int k = 0; k < 3; ++k) {
      const Mat8 gen = q == 0 ? Mat8(kron(Mat2::Identity(), kron(gens[k], Mat2::Identity())))
                        : Mat8(kron(Mat2::Identity(), kron(Mat2::Identity(), gens[k])));
      Mat8 d = gen * rho + rho * gen.adjoint();
      d -= d.trace() * rho;
      orbit.col(3 * q + k) = coords(HermitianOperator(d));
    }
  RMatX both(64, 22);
  both << family, orbit;
  ParameterCount c;
  c.family_rank = numerical_rank(family, rel_tol);
  c.orbit_rank = numerical_rank(orbit, rel_tol);
  c.classes = numerical_rank(both, rel_tol) - c.orbit_rank;
  return c;
}

Mat4 type2_u(cplx t) {
  Mat4 u;
  u << 0, t, t, t,  //
      1, 0, 1, -t,  //
      -1, 0, 1, -t, //
      0, 1, -1, -1;
  return u;
}

namespace {

void check_type2_parameter(cplx t) {
  if (std::abs(t) < 1e-12 || std::abs(1.0 + t) < 1e-12)
    throw InvalidParameter("type2: t must avoid 0 and -1");
}

}  // namespace

TypeIIState construct_type2(cplx t) {
  check_type2_parameter(t);
  TypeIIState s;
  s.params.t = t;
  const double at = std::abs(t), a1 = std::abs(1.0 + t);
  s.params.lambda << at * at * a1 * a1, a1 * a1, at * at, 1.0;
  s.params.a = 1.0 / (5 * std::pow(at, 4) + 10 * at * at + 1 + (3 * at * at + 1) * a1 * a1);

  // e_i = x_i (x) u_i, f_j = x_j (x)_s u_j, g_k = u_k (x) x_k with x in
  // standard form at t1 = t.
  const Mat4 u = type2_u(t);
  Eigen::Matrix<cplx, 2, 4> x;
  x << 1, 0, 1, t, 0, 1, -1, 1;
  BiseparableTriple& tr = s.triple;
  for (int i = 0; i < 4; ++i) {
    const Vec2 xi = x.col(i);
    const Vec4 ui = u.col(i);
    tr.e.col(i) = kron(xi, ui);
    tr.f.col(i) = split_product(xi, ui);
    tr.g.col(i) = kron(ui, xi);
  }
  tr.lambda = tr.mu = tr.nu = s.params.a * s.params.lambda;
  const double gap = tr.decomposition_gap();
  if (gap > 1e-8) throw Error("construct_type2: the three decompositions disagree by " + std::to_string(gap));
  s.state = HermitianOperator(tr.from_e());
  return s;
}

PtWitness type2_pt_witness(cplx t, int eps1, int eps2) {
  check_type2_parameter(t);
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
    throw InvalidParameter("type2_pt_witness: signs must be +1 or -1");
  const double at = std::abs(t), a1 = std::abs(1.0 + t);
  const double e1 = eps1, e2 = eps2;
  const cplx tc = std::conj(t);
  const double m = 1.0 - e1 * at + e2 * a1;
  PtWitness w;
  w.w << -e1 * tc * m, at * (tc + e1 * at), at + e1 * tc, at * m;
  const double scale = std::max(1.0, at * at + at);
  if (std::abs(w.w.determinant()) < 1e-12 * scale * scale)
    throw InvalidParameter("type2_pt_witness: W is singular for these signs");

  const Mat4 u = type2_u(t);
  const Mat4 ww = kron(w.w, w.w);
  for (int i = 0; i < 4; ++i) {
    const Vec4 ui = u.col(i);
    w.c[i] = ui.conjugate().dot(ww * ui) / ui.squaredNorm();
  }
  const Mat8 rho = construct_type2(t).state.matrix();
  const Mat8 v = kron(Mat2::Identity(), ww);
  const Mat8 lhs = v * partial_transpose(rho, 1) * v.adjoint();
  w.b = rho.trace().real() / lhs.trace().real();
  return w;
}

SubspaceBasis isotropic_subspace(Rng& rng) {
  const RMat8 e = invariant_tensor_E();
  Mat8x4 psi;
  for (int k = 0; k < 4; ++k) {
    // Constraints psi_i^dagger psi = 0 and psi_i^T E psi = 0 for i < k.
    Vec8 v;
    if (k == 0) {
      v = rng.complex_gaussian_vector(8);
    } else {
      MatX c(2 * k, 8);
      for (int i = 0; i < k; ++i) {
        c.row(2 * i) = psi.col(i).adjoint();
        c.row(2 * i + 1) = psi.col(i).transpose() * e;
      }
      const MatX n = null_space(c);
      v = n * rng.complex_gaussian_vector(static_cast<int>(n.cols()));
    }
    psi.col(k) = v.normalized();
  }
  return SubspaceBasis(psi);
}

}  // namespace pptatlas
