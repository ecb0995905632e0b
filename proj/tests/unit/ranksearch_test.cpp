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

#include "pptatlas/ranksearch.hpp"

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "pptatlas/errors.hpp"
#include "pptatlas/extremal.hpp"
#include "pptatlas/linalg.hpp"
#include "pptatlas/sampling.hpp"
#include "test_support.hpp"

namespace pptatlas {
namespace {

RMatX finite_difference_jacobian(const RankTargetProblem& p, const RVecX& x, double h) {
  RMatX fd(p.num_equations(), p.dim());
  for (int j = 0; j < p.dim(); ++j) {
    RVecX xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    fd.col(j) = (eigen_residual(p, xp) - eigen_residual(p, xm)) / (2 * h);
  }
  return fd;
}

TEST(RankTargetProblem, EquationCount) {
  EXPECT_EQ(RankTargetProblem({8, 8, 8, 8}).num_equations(), 0);
  EXPECT_EQ(RankTargetProblem({4, 4, 4, 4}).num_equations(), 16);
  EXPECT_EQ(RankTargetProblem({5, 6, 7, 8}).num_equations(), 6);
  EXPECT_THROW(RankTargetProblem({0, 4, 4, 4}), InvalidInput);
}

TEST(EigenResidual, FullRankTargetsAreEmpty) {
  Rng rng(51);
  const RankTargetProblem p({8, 8, 8, 8});
  EXPECT_EQ(eigen_residual(p, p.start_from(random_density_matrix(rng))).size(), 0);
}

TEST(EigenResidual, ListsLowestEigenvaluesInTransposeOrder) {
  Rng rng(52);
  const RankTargetProblem p({6, 7, 8, 5});
  const HermitianOperator rho = random_density_matrix(rng);
  const RVecX mu = eigen_residual(p, p.start_from(rho));
  ASSERT_EQ(mu.size(), 6);
  const auto e0 = testing::sorted_real_eigenvalues(rho.matrix());
  const auto e1 = testing::sorted_real_eigenvalues(partial_transpose(rho.matrix(), 1));
  const auto e3 = testing::sorted_real_eigenvalues(partial_transpose(rho.matrix(), 3));
  const double expected[6] = {e0[0], e0[1], e1[0], e3[0], e3[1], e3[2]};
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(mu(k), expected[k], 1e-12);
}

TEST(Jacobian, DiagonalStateIsExact) {
  // Diagonal rho with distinct entries; the diagonal basis element s3 s3 s3
  // moves eigenvalues linearly.
  Mat8 d = Mat8::Zero();
  for (int k = 0; k < 8; ++k) d(k, k) = 0.02 * (k + 1);
  const RankTargetProblem p({6, 8, 8, 8});
  const RVecX x = p.coordinates(HermitianOperator(d));
  const JacobianResult j = jacobian(p, x);
  const int idx = 63;  // sigma_3 sigma_3 sigma_3 / sqrt 8
  const RMatX fd = finite_difference_jacobian(p, x, 1e-3);
  EXPECT_NEAR(j.matrix(0, idx), fd(0, idx), 1e-12);
  EXPECT_NEAR(j.matrix(1, idx), fd(1, idx), 1e-12);
  EXPECT_FALSE(j.degenerate);
}

TEST(Jacobian, MatchesFiniteDifferences) {
  Rng rng(53);
  const RankTargetProblem p({5, 6, 5, 7});
  for (int trial = 0; trial < 10; ++trial) {
    const RVecX x = p.start_from(random_density_matrix(rng));
    const JacobianResult j = jacobian(p, x);
    ASSERT_FALSE(j.degenerate);
    EXPECT_LT((j.matrix - finite_difference_jacobian(p, x, 1e-6)).cwiseAbs().maxCoeff(), 1e-4);
  }
}

TEST(Jacobian, FlagsNearDegeneracy) {
  Mat8 d = Mat8::Zero();
  for (int k = 0; k < 8; ++k) d(k, k) = 0.02 * (k + 1);
  d(1, 1) = d(0, 0) + 1e-8;
  const RankTargetProblem p({6, 8, 8, 8});
  EXPECT_TRUE(jacobian(p, p.coordinates(HermitianOperator(d))).degenerate);
}

TEST(CgSolve, ZeroResidualGivesZeroStep) {
  RMatX b = RMatX::Random(10, 20);
  EXPECT_EQ(cg_solve(b, RVecX::Zero(10)).norm(), 0.0);
}

TEST(CgSolve, MatchesPseudoinverseOnFullRankSystem) {
  Rng rng(54);
  RMatX b(30, 12);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 12; ++j) b(i, j) = rng.normal();
  RVecX mu(30);
  for (int i = 0; i < 30; ++i) mu(i) = rng.normal();
  const RVecX dx = cg_solve(b, mu);
  const RVecX oracle = -b.completeOrthogonalDecomposition().solve(mu);
  EXPECT_LT((dx - oracle).norm(), 1e-9);
}

TEST(CgSolve, SingularSystemGivesMinimumNormSolution) {
  Rng rng(55);
  RMatX b(8, 20);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 20; ++j) b(i, j) = rng.normal();
  RVecX mu(8);
  for (int i = 0; i < 8; ++i) mu(i) = rng.normal();
  const RVecX dx = cg_solve(b, mu);
  const RVecX oracle = -b.completeOrthogonalDecomposition().solve(mu);
  EXPECT_LT((dx - oracle).norm(), 1e-9);
  EXPECT_LT((b * dx + mu).norm(), 1e-9);
}

TEST(CgStep, IteratedStepsReachTargets6666) {
  int converged = 0;
  for (int seed = 0; seed < 10; ++seed) {
    Rng rng(600 + seed);
    const RankTargetProblem p({6, 6, 6, 6});
    RVecX x = p.start_from(random_ppt_state(rng));
    double f = eigen_residual(p, x).squaredNorm();
    for (int it = 0; it < 200 && f > 1e-20; ++it) {
      const RVecX dx = cg_step(p, x);
      double t = 1.0;
      for (int h = 0; h < 30; ++h, t *= 0.5) {
        const double ft = eigen_residual(p, x + t * dx).squaredNorm();
        if (ft < f) {
          x += t * dx;
          f = ft;
          break;
        }
      }
    }
    if (f < 1e-20) ++converged;
  }
  EXPECT_GE(converged, 6);
}

TEST(SearchRanks, ReachesRequestedProfiles) {
  for (const PerTranspose<int> targets : {PerTranspose<int>{5, 5, 5, 5}, PerTranspose<int>{6, 6, 6, 7},
                                          PerTranspose<int>{7, 7, 7, 7}, PerTranspose<int>{8, 8, 8, 8}}) {
    Rng rng(56);
    SearchOptions options;
    options.require_exact_profile = true;
    const SearchResult r = search_ranks(RankTargetProblem(targets), rng, options);
    EXPECT_TRUE(r.matches_targets);
    EXPECT_TRUE(r.profile.is_ppt);
    EXPECT_LT(r.objective, 1e-18);
    EXPECT_NEAR(r.state.trace(), 1.0, 1e-12);
  }
}

TEST(SearchRanks, SquareSumMinimizationFinds5555) {
  int matched = 0;
  for (int seed = 0; seed < 5; ++seed) {
    Rng rng(700 + seed);
    const SearchResult r = minimize_sq(RankTargetProblem({5, 5, 5, 5}), rng, 20000);
    EXPECT_TRUE(r.profile.is_ppt);
    if (r.matches_targets) ++matched;
  }
  EXPECT_GE(matched, 3);
}

TEST(SearchRanks, SymmetricBasisRankFourIsExtremal) {
  Rng rng(57);
  SearchOptions options;
  options.require_exact_profile = true;
  const SearchResult r =
      search_ranks(RankTargetProblem({4, 4, 4, 4}, HermitianBasis::fully_symmetric()), rng, options);
  for (int s = 1; s <= 3; ++s) EXPECT_LT((partial_transpose(r.state.matrix(), s) - r.state.matrix()).norm(), 1e-12);
  EXPECT_TRUE(is_extremal(r.state).extremal);
}

TEST(SearchRanks, TwoTransposeSymmetricStatesArePpt) {
  Rng rng(58);
  SearchOptions options;
  options.require_exact_profile = true;
  const SearchResult r =
      search_ranks(RankTargetProblem({5, 5, 5, 5}, HermitianBasis::t1t2_symmetric()), rng, options);
  const Mat8 rho = r.state.matrix();
  EXPECT_LT((partial_transpose(rho, 1) - rho).norm(), 1e-12);
  EXPECT_LT((partial_transpose(rho, 2) - rho).norm(), 1e-12);
  const RVec8 a = hermitian_eigenvalues(rho);
  const RVec8 b = hermitian_eigenvalues(partial_transpose(rho, 3));
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SearchRanks, AsymmetricCombinationFails) {
  Rng rng(59);
  SearchOptions options;
  options.budget = 3000;
  options.require_exact_profile = true;
  EXPECT_THROW(search_ranks(RankTargetProblem({5, 5, 6, 8}), rng, options), BudgetExhausted);
}

TEST(SearchMethodNames, RoundTrip) {
  EXPECT_EQ(search_method_from_string("sq"), SearchMethod::SquareSum);
  EXPECT_EQ(to_string(SearchMethod::ConjugateGradient), "cg");
  EXPECT_THROW(search_method_from_string("lbfgs"), InvalidInput);
}

TEST(SymmetricGenerator, TransposeSumIsSymmetricAndReal) {
  Rng rng(60);
  for (int trial = 0; trial < 5; ++trial) {
    const HermitianOperator rho = symmetric_state_generator({}, rng);
    for (int s = 1; s <= 3; ++s) EXPECT_EQ(partial_transpose(rho.matrix(), s), rho.matrix());
    EXPECT_EQ(rho.max_imag(), 0.0);
    EXPECT_GE(hermitian_eigenvalues(rho.matrix())(0), 0.0);
  }
}

TEST(SymmetricGenerator, RankFourIsExtremalRankSevenIsNot) {
  Rng rng(61);
  SymmetricOptions four;
  four.method = SymmetricMethod::RankTargeted;
  four.rank = 4;
  for (int trial = 0; trial < 3; ++trial) {
    const HermitianOperator rho = symmetric_state_generator(four, rng);
    EXPECT_EQ(ppt_profile(rho).ranks, (PerTranspose<int>{4, 4, 4, 4}));
    EXPECT_TRUE(is_extremal(rho).extremal);
  }
  SymmetricOptions seven = four;
  seven.rank = 7;
  const HermitianOperator rho = symmetric_state_generator(seven, rng);
  EXPECT_EQ(ppt_profile(rho).ranks, (PerTranspose<int>{7, 7, 7, 7}));
  EXPECT_FALSE(is_extremal(rho).extremal);
}

}  // namespace
}  // namespace pptatlas
