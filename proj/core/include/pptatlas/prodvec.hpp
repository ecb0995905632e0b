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
#include <string>
#include <vector>

#include "pptatlas/qstate.hpp"
#include "pptatlas/rng.hpp"

namespace pptatlas {

/// Four orthonormal columns spanning a subspace of C^8.
class SubspaceBasis {
 public:
  /// Orthonormalizes the columns. Throws InvalidInput unless they have rank 4.
  explicit SubspaceBasis(const Mat8x4& columns);

  const Mat8x4& psi() const { return psi_; }
  Mat8 projector() const { return psi_ * psi_.adjoint(); }
  /// |v - P v| / |v|.
  double residual(const Vec8& v) const;

 private:
  Mat8x4 psi_;
};

/// Split of C^8 into one qubit and the remaining two.
enum class Bipartition { Q1_Q23, Q2_Q13, Q3_Q12 };

std::string to_string(Bipartition b);
/// The qubit (1, 2 or 3) that is split off.
int split_qubit(Bipartition b);

/// phi = psi alpha = x (x) u, y (x)_s v, or w (x) z depending on the cut.
struct BipartiteProduct {
  Bipartition bipartition = Bipartition::Q1_Q23;
  /// Unit vector in the subspace.
  Vec8 vector;
  /// Unit qubit factor and four-dimensional cofactor, vector = qubit * rest.
  Vec2 qubit;
  Vec4 rest;
  /// Pencil eigenvalue qubit(0) / qubit(1); infinite when qubit(1) = 0.
  cplx mu;
  bool mu_infinite = false;
  /// vector = psi * alpha for the subspace basis.
  Vec4 alpha;
};

/// Glues (qubit, rest) according to the bipartition.
Vec8 bipartite_glue(Bipartition b, const Vec2& qubit, const Vec4& rest);

struct PencilOptions {
  /// Smallest singular value ratio of the B-type matrix accepted as regular.
  double min_condition = 1e-6;
  /// Eigenvalues closer than this (relative) count as repeated.
  double min_separation = 1e-6;
  int max_transforms = 5;
  std::uint64_t seed = 0x5eed;
};

/// Solves the pencil (A - mu B) alpha = 0 of one bipartition. Returns the four
/// solutions ordered by |mu|, then arg mu. Throws DegeneratePencil when no
/// random product transform gives a regular pencil with distinct
/// eigenvalues.
std::vector<BipartiteProduct> product_vectors_in_subspace(const SubspaceBasis& basis, Bipartition b,
                                                          const PencilOptions& options = {});

/// A full product x (x) y (x) z.
struct ProductVectorTriple {
  Vec2 x;
  Vec2 y;
  Vec2 z;
  Vec8 vector() const { return product_vector(x, y, z); }
};

/// Solutions of the 1|23 pencil that also factor fully.
std::vector<ProductVectorTriple> full_products_in_subspace(const SubspaceBasis& basis,
                                                           const PencilOptions& options = {},
                                                           double rel_tol = 1e-7);

/// 1 - |<a,b>| / (|a| |b|) below tol.
bool same_ray(const VecX& a, const VecX& b, double tol = 1e-8);

/// z = [[1,0,1,t],[0,1,-1,1]] = transform * x * diag(1/scales).
struct QuadrupleStandardForm {
  cplx t;
  Mat2 transform;
  std::array<cplx, 4> scales{};
  /// Position of each standard-form column in the input quadruple.
  std::array<int, 4> ordering{0, 1, 2, 3};
  /// -det13 det24 / (det14 det23), computed directly from the input.
  cplx cross_ratio;
  /// Parameters of the two alternative forms: t' = -1 - t, t'' = -1 - 1/t.
  cplx t_prime() const { return -1.0 - t; }
  cplx t_double_prime() const { return -1.0 - 1.0 / t; }
};

using Quadruple = std::array<Vec2, 4>;

/// Throws DegenerateQuadruple if some |det(x_i, x_j)| < 1e-10 after
/// normalizing the columns.
QuadrupleStandardForm standard_form_quadruple(const Quadruple& x);

/// -det(x1,x3) det(x2,x4) / (det(x1,x4) det(x2,x3)).
cplx cross_ratio(const Quadruple& x);

/// The pairing (q1 q2)(q3 q4) of a permuted quadruple that a linear map makes
/// real and pairwise orthogonal, with w = [[1,0,1,r],[0,1,-r,1]], r = sqrt(p).
struct OrthogonalPairing {
  std::array<int, 4> ordering{};
  /// Standard-form parameter of the permuted quadruple, real positive when exact.
  cplx parameter;
  /// transform * x[ordering[k]] is proportional to column k of w.
  Mat2 transform;
};

/// Chooses among t, t', t'' the one closest to the positive real axis.
OrthogonalPairing orthogonal_pairing(const Quadruple& x);

/// Unextendible product basis in real standard form with angles theta_i.
/// Throws DegenerateAngles if some sin or cos is below 1e-8 in magnitude.
std::array<ProductVectorTriple, 4> upb_standard(double theta1, double theta2, double theta3);

/// (1 - sum psi_i psi_i^dagger) / 4. Throws NotOrthonormal.
HermitianOperator upb_state(const std::array<ProductVectorTriple, 4>& upb);

}  // namespace pptatlas
