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

// Rank-4444 entangled PPT states. Such a state is separable across every
// bipartition, so its range has three product-vector bases
//   e_i = x_i (x) u_i,   f_j = y_j (x)_s v_j,   g_k = w_k (x) z_k
// and rho is a positive combination of the projectors of each basis.

#pragma once

#include <array>
#include <string>

#include "pptatlas/config.hpp"
#include "pptatlas/prodvec.hpp"
#include "pptatlas/qstate.hpp"
#include "pptatlas/rng.hpp"

namespace pptatlas {

using RMat4 = Eigen::Matrix4d;
using RVec4 = Eigen::Vector4d;

/// Three bases of one four-dimensional range with the weights that give
/// rho = sum lambda_i e_i e_i^dagger = sum mu_j f_j f_j^dagger = sum nu_k g_k g_k^dagger.
struct BiseparableTriple {
  Mat8x4 e;
  Mat8x4 f;
  Mat8x4 g;
  RVec4 lambda = RVec4::Zero();
  RVec4 mu = RVec4::Zero();
  RVec4 nu = RVec4::Zero();

  Mat8 from_e() const;
  Mat8 from_f() const;
  Mat8 from_g() const;
  /// Largest Frobenius distance between the three sums.
  double decomposition_gap() const;
};

/// Smallest singular values of the 1|23 vs 2|13 and 1|23 vs 3|12 projector
/// sets of a subspace, with unit-norm product vectors.
struct CompatibilityGaps {
  double sigma_ef = 0.0;
  double sigma_eg = 0.0;
  /// Right singular vectors: (lambda, -mu) and (lambda, -nu).
  Eigen::Matrix<double, 8, 1> null_ef;
  Eigen::Matrix<double, 8, 1> null_eg;
  BiseparableTriple triple;

  /// sqrt(8) min_k |null_k|: near 0 when the dependence only involves some
  /// projectors, as when e_i = f_j is a full product vector.
  static double spread(const Eigen::Matrix<double, 8, 1>& null);
  /// Each sigma divided by the spread of its null vector, which keeps the
  /// search away from subspaces that contain a product vector.
  double objective() const { return sigma_ef / spread(null_ef) + sigma_eg / spread(null_eg); }
};

/// Throws DegeneratePencil when a bipartition has no four isolated solutions.
CompatibilityGaps compatibility_gaps(const SubspaceBasis& basis);

struct BiseparableOptions {
  /// Objective evaluations per attempt.
  long max_evaluations = 40000;
  int max_attempts = 64;
  /// Both smallest singular values must fall below this.
  double accept = 1e-9;
  /// Smallest spread of both null vectors accepted as a full dependence.
  double min_spread = 1e-3;
  double initial_step = 1e-1;
  double min_step = 1e-14;
  /// An attempt is abandoned once the step falls below this times the objective.
  double stall_ratio = 1e-4;
};

struct BiseparableResult {
  HermitianOperator state;
  /// Weights for unit-norm columns, scaled so that sum lambda_i = 1.
  BiseparableTriple triple;
  int attempts = 0;
  /// Converged subspaces rejected for mixed-sign weights.
  int sign_rejections = 0;
  /// Attempts that did not converge within max_evaluations.
  int stalls = 0;
  /// Converged attempts whose two null vectors disagree on lambda.
  int inconsistent = 0;
  long evaluations = 0;
};

/// (1+1) evolution strategy over four-dimensional subspaces minimizing
/// sigma_ef + sigma_eg, restarted until all three weight sets are positive.
/// Throws MaxIterations after max_attempts.
BiseparableResult construct_biseparable(Rng& rng, const BiseparableOptions& options = {});

enum class Rank4Type { TypeI, TypeII };

std::string to_string(Rank4Type type);

/// TypeII iff I2 < tol.i2_zero_tol (Tr rho)^2. Throws NotRank4 unless rho
/// is PPT with profile 4444.
Rank4Type classify_type(const HermitianOperator& rho, const Tolerances& tol = {});

struct TypeIParams {
  /// Columns u_1..u_4 after the sign fixes and rescaling.
  RMat4 u = RMat4::Zero();
  double t1 = 0.0;
  /// Standard-form parameters of the y and z quadruples.
  cplx t2;
  cplx t3;
  bool u1_flipped = false;
  bool u2_flipped = false;
  double alpha1 = 1.0;
  double alpha2 = 1.0;
};

struct TypeIState {
  HermitianOperator state;
  TypeIParams params;
};

/// Builds rho = [[A, B], [B, C]] from a real 4x4 matrix, choosing t1, alpha_1
/// and alpha_2 so that rho equals its three partial transposes. The result
/// has unit trace. Throws DegenerateDraw when a needed quadratic form
/// u_i^T (eps (x) eps) u_i is below 1e-10 in magnitude.
TypeIState type1_from_matrix(const RMat4& u);

/// type1_from_matrix on Gaussian draws; fills t2, t3. Redraws (at most 64
/// times) degenerate draws and draws whose second eigenvalue of sum P_i is
/// within 1e-4 of 4, i.e. nearly nonextremal ones.
TypeIState construct_type1(Rng& rng);

/// u_i^T (eps (x) eps) u_j.
double epsilon_form(const RVec4& a, const RVec4& b);

/// Local dimension count of the type I family at u.
struct ParameterCount {
  /// Rank of d rho / d u (16 real inputs).
  int family_rank = 0;
  /// Rank of the tangent of the real SL(2) x SL(2) orbit on qubits 2 and 3.
  int orbit_rank = 0;
  /// rank([family | orbit]) - orbit_rank.
  int classes = 0;
};

ParameterCount type1_parameter_count(const RMat4& u, double step = 1e-5, double rel_tol = 1e-6);

struct TypeIIParams {
  cplx t;
  RVec4 lambda = RVec4::Zero();
  double a = 0.0;
};

struct TypeIIState {
  HermitianOperator state;
  TypeIIParams params;
  /// Unnormalized e, f, g with weights a * lambda.
  BiseparableTriple triple;
};

/// The 4x4 matrix whose columns u_1..u_4 are pairwise eps (x) eps orthogonal.
Mat4 type2_u(cplx t);

/// rho(t) = a sum lambda_i e_i e_i^dagger, checked against the f and g
/// decompositions (throws Error on a gap above 1e-8). Throws
/// InvalidParameter for t within 1e-12 of 0 or -1.
TypeIIState construct_type2(cplx t);

struct PtWitness {
  Mat2 w;
  /// b V rho^T1 V^dagger = rho^* with V = 1 (x) W (x) W.
  double b = 0.0;
  /// (W (x) W) u_i = C_i u_i^*.
  std::array<cplx, 4> c{};
};

/// Throws InvalidParameter for an invalid t, signs other than +-1, or a
/// singular W (which happens for real t >= 0 with signs (-1, -1)).
PtWitness type2_pt_witness(cplx t, int eps1, int eps2);

/// Orthonormal psi_1..psi_4 with psi_i^T E psi_j = 0 for all i, j.
SubspaceBasis isotropic_subspace(Rng& rng);

}  // namespace pptatlas
