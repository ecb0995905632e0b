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

#include "pptatlas/invariants.hpp"

#include <gtest/gtest.h>

#include "pptatlas/linalg.hpp"
#include "pptatlas/sampling.hpp"
#include "test_support.hpp"

namespace pptatlas {
namespace {

using testing::rel_diff;

// Independent tensor: coefficients Tr(rho s_l s_m s_n)/8 from explicitly
// spelled Pauli matrices and test-local Kronecker products.
struct OracleTensor {
  double up[4][4][4];
  double down[4][4][4];
};

OracleTensor oracle_tensor(const Mat8& rho) {
  const cplx I(0, 1);
  Mat2 s[4];
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -I, I, 0;
  s[3] << 1, 0, 0, -1;
  const double g[4] = {1, -1, -1, -1};
  OracleTensor t{};
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        Mat8 p;
        for (int r = 0; r < 8; ++r)
          for (int c = 0; c < 8; ++c)
            p(r, c) = s[l](r >> 2, c >> 2) * s[m]((r >> 1) & 1, (c >> 1) & 1) * s[n](r & 1, c & 1);
        t.up[l][m][n] = (rho * p).trace().real() / 8.0;
        t.down[l][m][n] = g[l] * g[m] * g[n] * t.up[l][m][n];
      }
  return t;
}

std::array<double, 4> oracle_quartics(const Mat8& rho) {
  const OracleTensor t = oracle_tensor(rho);
  const auto& U = t.up;
  const auto& D = t.down;
  std::array<double, 4> q{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int la = 0; la < 4; ++la)
        for (int al = 0; al < 4; ++al)
          for (int be = 0; be < 4; ++be)
            for (int ga = 0; ga < 4; ++ga) {
              q[0] += U[mu][nu][la] * D[mu][nu][ga] * U[al][be][ga] * D[al][be][la];
              q[1] += U[mu][nu][la] * D[mu][be][la] * U[al][be][ga] * D[al][nu][ga];
              q[2] += U[mu][nu][la] * D[mu][be][ga] * U[al][be][ga] * D[al][nu][la];
              // rho_mu^{beta gamma} lowers only mu; rho^alpha_{nu gamma} lowers nu, gamma.
              const double g[4] = {1, -1, -1, -1};
              q[3] += U[mu][nu][la] * (g[mu] * U[mu][be][ga]) * (g[nu] * g[ga] * U[al][nu][ga]) *
                      D[al][be][la];
            }
  return q;
}

// (1/8) sum_ij l_i l_j |eta_i^T E eta_j|^2 from the eigendecomposition.
double eigen_oracle_i2(const HermitianOperator& rho) {
  const Eigensystem8 es = hermitian_eigen(rho.matrix());
  const Mat8 e = invariant_tensor_E().cast<cplx>();
  double sum = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const cplx x = es.vectors.col(i).transpose() * e * es.vectors.col(j);
      sum += es.values(i) * es.values(j) * std::norm(x);
    }
  return sum / 8.0;
}

TEST(QuadraticInvariant, MaximallyMixed) {
  const QuadraticInvariant q = quadratic_invariant(HermitianOperator::maximally_mixed());
  EXPECT_NEAR(q.value(), 1.0 / 64.0, 1e-15);
  EXPECT_TRUE(q.consistent());
}

TEST(QuadraticInvariant, ProductStateVanishes) {
  const QuadraticInvariant q = quadratic_invariant(HermitianOperator::projector(Vec8::Unit(0)));
  EXPECT_NEAR(q.value(), 0.0, 1e-15);
}

TEST(QuadraticInvariant, PureStatesVanish) {
  // E is antisymmetric, so psi^T E psi = 0 for every pure state.
  Rng rng(20);
  EXPECT_NEAR(quadratic_invariant(HermitianOperator::projector(ghz_vector())).value(), 0.0, 1e-15);
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_NEAR(quadratic_invariant(random_density_matrix(rng, 1)).value(), 0.0, 1e-14);
}

TEST(QuadraticInvariant, RoutesAgreeAndMatchEigenOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator rho = random_ppt_state(rng);
    const QuadraticInvariant q = quadratic_invariant(rho);
    EXPECT_TRUE(q.consistent());
    EXPECT_GE(q.value(), -1e-12);
    EXPECT_LT(rel_diff(q.value(), eigen_oracle_i2(rho)), 1e-10);
  }
}

TEST(QuadraticInvariant, NonNegativeOnPositiveOperators) {
  Rng rng(22);
  for (int rank = 1; rank <= 8; ++rank)
    for (int trial = 0; trial < 10; ++trial)
      EXPECT_GE(quadratic_invariant(random_density_matrix(rng, rank)).value(), -1e-12);
}

TEST(QuarticInvariants, MaximallyMixedEqualsI2Squared) {
  const auto q = quartic_invariants(HermitianOperator::maximally_mixed());
  for (double v : q) EXPECT_NEAR(v, 1.0 / 4096.0, 1e-18);
}

TEST(QuarticInvariants, MatchIndependentContraction) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const HermitianOperator rho = random_density_matrix(rng);
    const auto q = quartic_invariants(rho);
    const auto o = oracle_quartics(rho.matrix());
    for (int k = 0; k < 4; ++k) EXPECT_LT(rel_diff(q[k], o[k]), 1e-11) << k;
  }
}

TEST(QuarticInvariants, InvariantUnderPartialTranspose) {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator rho = random_ppt_state(rng);
    const auto q = quartic_invariants(rho);
    const double i2 = quadratic_invariant(rho).value();
    for (int s = 1; s <= 3; ++s) {
      const HermitianOperator t = partial_transpose(rho, s);
      const auto qt = quartic_invariants(t);
      for (int k = 0; k < 4; ++k) EXPECT_LT(rel_diff(q[k], qt[k]), 1e-9);
      EXPECT_LT(rel_diff(i2, quadratic_invariant(t).value()), 1e-9);
    }
  }
}

TEST(QuarticInvariants, InvariantUnderUnitDeterminantProducts) {
  Rng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator rho = random_ppt_state(rng);
    const auto q = quartic_invariants(rho);
    const double i2 = quadratic_invariant(rho).value();
    const auto v = random_sl2_triple(rng, 3.0);
    const HermitianOperator t = product_transform(rho, v[0], v[1], v[2]);
    const auto qt = quartic_invariants(t);
    for (int k = 0; k < 4; ++k) EXPECT_LT(rel_diff(q[k], qt[k]), 1e-8);
    EXPECT_LT(rel_diff(i2, quadratic_invariant(t).value()), 1e-8);
  }
}

TEST(Fingerprint, ScaleIndependent) {
  Rng rng(26);
  const HermitianOperator rho = random_ppt_state(rng);
  const InvariantFingerprint a = fingerprint(rho);
  const InvariantFingerprint b = fingerprint(7.0 * rho);
  EXPECT_FALSE(a.degenerate);
  for (int k = 0; k < 4; ++k) EXPECT_LT(rel_diff(a.normalized_quartics[k], b.normalized_quartics[k]), 1e-10);
  EXPECT_TRUE(fingerprints_match(a, b, 1e-10));
}

TEST(Fingerprint, SeparatesDistinctStates) {
  Rng rng(27);
  const InvariantFingerprint a = fingerprint(random_ppt_state(rng));
  const InvariantFingerprint b = fingerprint(random_density_matrix(rng, 4));
  EXPECT_FALSE(fingerprints_match(a, b, 1e-6));
}

TEST(Fingerprint, MatchesAfterProductTransformWithoutRenormalizing) {
  Rng rng(28);
  const HermitianOperator rho = random_ppt_state(rng);
  const auto v = random_sl2_triple(rng, 3.0);
  EXPECT_TRUE(fingerprints_match(fingerprint(rho), fingerprint(product_transform(rho, v[0], v[1], v[2])), 1e-8));
}

TEST(Fingerprint, DegenerateFlagForProductState) {
  const InvariantFingerprint f = fingerprint(HermitianOperator::projector(Vec8::Unit(0)));
  EXPECT_TRUE(f.degenerate);
}

}  // namespace
}  // namespace pptatlas
