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

#include <string>

#include "pptatlas/config.hpp"
#include "pptatlas/hermitian_basis.hpp"
#include "pptatlas/qstate.hpp"
#include "pptatlas/rng.hpp"

namespace pptatlas {

/// rho(x) = sum_j x_j M_j with the N - m_i lowest eigenvalues of every
/// rho^{T_i} driven to zero. Coordinate 0 multiplies 1/sqrt(8) and is held
/// fixed so the trace stays 1.
class RankTargetProblem {
 public:
  RankTargetProblem(PerTranspose<int> targets, HermitianBasis basis = HermitianBasis::full());

  const PerTranspose<int>& targets() const { return targets_; }
  const HermitianBasis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }
  /// 4N - sum m_i.
  int num_equations() const { return num_equations_; }

  HermitianOperator state(const RVecX& x) const { return basis_.compose(x); }
  RVecX coordinates(const HermitianOperator& rho) const { return basis_.coordinates(rho); }
  /// Unit-trace projection of rho onto the basis span.
  RVecX start_from(const HermitianOperator& rho) const;

 private:
  PerTranspose<int> targets_;
  HermitianBasis basis_;
  int num_equations_ = 0;
};

/// mu(x): for i = 0..3 in order, the N - m_i lowest eigenvalues of rho^{T_i}.
RVecX eigen_residual(const RankTargetProblem& problem, const RVecX& x);

struct JacobianResult {
  /// N_e x dim, rows d mu_i / d x_j = psi_k^dagger M_j^{T_i} psi_k.
  RMatX matrix;
  RVecX residual;
  /// Smallest gap between a targeted eigenvalue and its spectral neighbours.
  double min_gap = 0.0;
  /// min_gap below 1e-6: first-order perturbation theory is unreliable.
  bool degenerate = false;
};

JacobianResult jacobian(const RankTargetProblem& problem, const RVecX& x);

/// Conjugate gradients on B^T B dx = -B^T mu from dx = 0.
RVecX cg_solve(const RMatX& b, const RVecX& mu, double rel_tol = 1e-12, int max_iterations = 64);

/// One linearized step over every coordinate except the frozen trace one.
/// B linearizes the full low block U^dagger rho^{T_i} U of each transpose
/// (diagonal entries are the rows of `jacobian`), which keeps the model
/// valid when targeted eigenvalues are nearly degenerate.
RVecX cg_step(const RankTargetProblem& problem, const RVecX& x);

enum class SearchMethod { SquareSum, ConjugateGradient };

std::string to_string(SearchMethod method);
SearchMethod search_method_from_string(const std::string& name);

struct SearchOptions {
  SearchMethod method = SearchMethod::ConjugateGradient;
  /// Residual evaluations across all restarts.
  long budget = 20000;
  /// Objective below which a run counts as converged.
  double success_threshold = 1e-18;
  /// Polishing continues toward this value while progress is made.
  double polish_threshold = 1e-26;
  int max_halvings = 30;
  int max_steps_per_start = 400;
  /// Start from G G^dagger shifted toward the identity until PPT.
  bool ppt_shifted_start = true;
  /// Restart instead of returning a solution with lower ranks than targeted.
  bool require_exact_profile = false;
};

struct SearchResult {
  RVecX x;
  HermitianOperator state;
  PptProfile profile;
  double objective = 0.0;
  long evaluations = 0;
  int restarts = 0;
  int steps = 0;
  /// Converged runs discarded because their ranks fell below the targets.
  int degenerations = 0;
  /// Sorted profile equals the sorted targets.
  bool matches_targets = false;
};

/// Runs restarts until a converged PPT solution is found. The result may
/// have lower ranks than requested. Throws BudgetExhausted.
SearchResult search_ranks(const RankTargetProblem& problem, Rng& rng, const SearchOptions& options = {},
                          const Tolerances& tol = {});

/// BFGS on f = |mu|^2 with gradient 2 B^T mu.
SearchResult minimize_sq(const RankTargetProblem& problem, Rng& rng, long budget, const Tolerances& tol = {});

/// Damped Gauss-Newton with conjugate-gradient inner solves.
SearchResult minimize_cg(const RankTargetProblem& problem, Rng& rng, long budget, const Tolerances& tol = {});

}  // namespace pptatlas
