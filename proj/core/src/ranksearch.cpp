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

#include <algorithm>
#include <cmath>
#include <limits>

#include "pptatlas/errors.hpp"
#include "pptatlas/linalg.hpp"
#include "pptatlas/sampling.hpp"

namespace pptatlas {

namespace {

const double kTraceCoordinate = 1.0 / std::sqrt(8.0);

struct Evaluation {
  RVecX mu;
  RMatX jac;
  double min_gap = std::numeric_limits<double>::infinity();
};

Evaluation evaluate(const RankTargetProblem& problem, const RVecX& x, bool with_jacobian) {
  Evaluation ev;
  ev.mu.resize(problem.num_equations());
  if (with_jacobian) ev.jac.resize(problem.num_equations(), problem.dim());
  const Mat8 rho = problem.state(x).matrix();
  int row = 0;
  for (int i = 0; i < 4; ++i) {
    const int n = kDim - problem.targets()[i];
    if (n == 0) continue;
    const Eigensystem8 es = hermitian_eigen(partial_transpose(rho, i));
    for (int k = 0; k < n; ++k, ++row) {
      ev.mu(row) = es.values(k);
      if (!with_jacobian) continue;
      const Vec8 psi = es.vectors.col(k);
      const HermitianOperator deriv(partial_transpose(Mat8(psi * psi.adjoint()), i));
      ev.jac.row(row) = problem.basis().coordinates(deriv).transpose();
      if (k > 0) ev.min_gap = std::min(ev.min_gap, es.values(k) - es.values(k - 1));
      if (k + 1 < kDim) ev.min_gap = std::min(ev.min_gap, es.values(k + 1) - es.values(k));
    }
  }
  return ev;
}

double objective(const RVecX& mu) { return mu.squaredNorm(); }

// Tr(M_j X) for every basis element, X not necessarily Hermitian.
VecX complex_coordinates(const HermitianBasis& basis, const Mat8& x) {
  VecX c(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) c(k) = (basis.element(k).transpose().array() * x.array()).sum();
  return c;
}

// Linearization of the whole low block U^dagger rho^{T_i} U of each transpose.
// Its Frobenius norm equals |mu|, and unlike single eigenvalues it stays
// smooth when targeted eigenvalues cross.
struct BlockModel {
  RMatX jac;
  RVecX residual;
};

BlockModel block_model(const RankTargetProblem& problem, const RVecX& x) {
  int rows = 0;
  for (int i = 0; i < 4; ++i) rows += (kDim - problem.targets()[i]) * (kDim - problem.targets()[i]);
  BlockModel model;
  model.jac.resize(rows, problem.dim());
  model.residual = RVecX::Zero(rows);
  const Mat8 rho = problem.state(x).matrix();
  const double root2 = std::sqrt(2.0);
  int row = 0;
  for (int i = 0; i < 4; ++i) {
    const int n = kDim - problem.targets()[i];
    if (n == 0) continue;
    const Eigensystem8 es = hermitian_eigen(partial_transpose(rho, i));
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        // u_a^dagger M^{T_i} u_b = Tr(M (u_b u_a^dagger)^{T_i}).
        const Mat8 outer = es.vectors.col(b) * es.vectors.col(a).adjoint();
        const VecX c = complex_coordinates(problem.basis(), partial_transpose(outer, i));
        if (a == b) {
          model.residual(row) = es.values(a);
          model.jac.row(row++) = c.real().transpose();
        } else {
          model.jac.row(row++) = root2 * c.real().transpose();
          model.jac.row(row++) = root2 * c.imag().transpose();
        }
      }
    }
  }
  return model;
}

RVecX random_start(const RankTargetProblem& problem, Rng& rng, bool ppt_shifted) {
  const HermitianOperator rho = ppt_shifted ? random_ppt_state(rng) : random_density_matrix(rng);
  return problem.start_from(rho);
}

bool acceptable(const RankTargetProblem& problem, const RVecX& x, const Tolerances& tol, SearchResult& out) {
  const HermitianOperator unit = problem.state(x).normalized();
  for (int i = 0; i < 4; ++i)
    if (hermitian_eigenvalues(partial_transpose(unit.matrix(), i))(0) < -tol.psd_tol) return false;
  out.x = x;
  out.state = unit;
  out.profile = ppt_profile(unit, tol);
  out.matches_targets = out.profile.sorted_ranks() == [&] {
    PerTranspose<int> t = problem.targets();
    std::sort(t.begin(), t.end());
    return t;
  }();
  return true;
}

class Budget {
 public:
  explicit Budget(long limit) : limit_(limit) {}
  bool take() {
    if (used_ >= limit_) return false;
    ++used_;
    return true;
  }
  long used() const { return used_; }

 private:
  long limit_;
  long used_ = 0;
};

// One damped Gauss-Newton run. Returns the final objective.
double gauss_newton_run(const RankTargetProblem& problem, RVecX& x, Budget& budget,
                        const SearchOptions& options, int& steps) {
  if (!budget.take()) return std::numeric_limits<double>::infinity();
  RVecX mu = eigen_residual(problem, x);
  double f = objective(mu);
  for (int step = 0; step < options.max_steps_per_start && f >= options.polish_threshold; ++step) {
    if (!budget.take()) break;
    BlockModel model = block_model(problem, x);
    model.jac.col(0).setZero();
    const RVecX dx = cg_solve(model.jac, model.residual);
    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h, t *= 0.5) {
      if (!budget.take()) break;
      const RVecX trial = x + t * dx;
      const RVecX mu_trial = eigen_residual(problem, trial);
      const double f_trial = objective(mu_trial);
      if (f_trial < f) {
        const bool slow = f < options.success_threshold && f_trial > 0.25 * f;
        x = trial;
        mu = mu_trial;
        f = f_trial;
        accepted = !slow;
        ++steps;
        break;
      }
    }
    if (!accepted) break;
  }
  return f;
}

// BFGS with Armijo backtracking over the free coordinates.
double bfgs_run(const RankTargetProblem& problem, RVecX& x, Budget& budget, const SearchOptions& options,
                int& steps) {
  const int d = problem.dim();
  auto grad = [&](const RVecX& at, RVecX& g, double& f) {
    const JacobianResult j = jacobian(problem, at);
    f = objective(j.residual);
    g = 2.0 * j.matrix.transpose() * j.residual;
    g(0) = 0.0;
  };
  if (!budget.take()) return std::numeric_limits<double>::infinity();
  RVecX g;
  double f;
  grad(x, g, f);
  RMatX h = RMatX::Identity(d, d);
  h(0, 0) = 0.0;
  bool scaled = false;
  int stalls = 0;
  for (int step = 0; f >= options.polish_threshold && stalls < 3; ++step) {
    RVecX p = -(h * g);
    if (p.dot(g) >= 0) {
      h = RMatX::Identity(d, d);
      h(0, 0) = 0.0;
      p = -g;
    }
    double t = 1.0;
    bool accepted = false;
    RVecX x_new, g_new;
    double f_new = 0.0;
    for (int k = 0; k <= options.max_halvings; ++k, t *= 0.5) {
      if (!budget.take()) return f;
      x_new = x + t * p;
      grad(x_new, g_new, f_new);
      if (f_new <= f + 1e-4 * t * p.dot(g)) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // Reset curvature and retry along the gradient before giving up.
      h = RMatX::Identity(d, d);
      h(0, 0) = 0.0;
      ++stalls;
      continue;
    }
    const RVecX s = x_new - x;
    const RVecX y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      if (!scaled) {
        h *= sy / y.squaredNorm();
        h(0, 0) = 0.0;
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const RVecX hy = h * y;
      h += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) - rho * (hy * s.transpose() + s * hy.transpose());
    }
    if (f < options.success_threshold && f_new > 0.5 * f) ++stalls;
    x = x_new;
    g = g_new;
    f = f_new;
    ++steps;
  }
  return f;
}

SearchResult run_search(const RankTargetProblem& problem, Rng& rng, const SearchOptions& options,
                        const Tolerances& tol) {
  Budget budget(options.budget);
  SearchResult result;
  int restarts = 0;
  while (budget.used() < options.budget) {
    RVecX x = random_start(problem, rng, options.ppt_shifted_start);
    int steps = 0;
    const double f = options.method == SearchMethod::ConjugateGradient
                         ? gauss_newton_run(problem, x, budget, options, steps)
                         : bfgs_run(problem, x, budget, options, steps);
    if (f < options.success_threshold && acceptable(problem, x, tol, result)) {
      if (!result.matches_targets && options.require_exact_profile) {
        ++result.degenerations;
        ++restarts;
        continue;
      }
      result.objective = f;
      result.evaluations = budget.used();
      result.restarts = restarts;
      result.steps = steps;
      return result;
    }
    ++restarts;
  }
  throw BudgetExhausted("no PPT state with the requested ranks within " + std::to_string(options.budget) +
                        " evaluations (" + std::to_string(restarts) + " starts, " +
                        std::to_string(result.degenerations) + " lower-rank solutions)");
}

}  // namespace

RankTargetProblem::RankTargetProblem(PerTranspose<int> targets, HermitianBasis basis)
    : targets_(targets), basis_(std::move(basis)) {
  for (int m : targets_) {
    if (m < 1 || m > kDim) throw InvalidInput("target rank " + std::to_string(m) + " outside 1..8");
    num_equations_ += kDim - m;
  }
  if (basis_.pauli_index(0) != 0) throw InvalidInput("basis must contain the identity as element 0");
}

RVecX RankTargetProblem::start_from(const HermitianOperator& rho) const {
  RVecX x = basis_.coordinates(rho.normalized());
  x(0) = kTraceCoordinate;
  return x;
}

RVecX eigen_residual(const RankTargetProblem& problem, const RVecX& x) { return evaluate(problem, x, false).mu; }

JacobianResult jacobian(const RankTargetProblem& problem, const RVecX& x) {
  Evaluation ev = evaluate(problem, x, true);
  JacobianResult j;
  j.matrix = std::move(ev.jac);
  j.residual = std::move(ev.mu);
  j.min_gap = ev.min_gap;
  j.degenerate = ev.min_gap < 1e-6;
  return j;
}

RVecX cg_solve(const RMatX& b, const RVecX& mu, double rel_tol, int max_iterations) {
  const RVecX rhs = -(b.transpose() * mu);
  RVecX dx = RVecX::Zero(b.cols());
  const double target = rel_tol * rhs.norm();
  if (rhs.norm() == 0.0) return dx;
  RVecX r = rhs;
  RVecX p = r;
  double rr = r.squaredNorm();
  for (int k = 0; k < max_iterations && std::sqrt(rr) > target; ++k) {
    const RVecX bp = b * p;
    const double pap = bp.squaredNorm();
    if (pap <= 0.0) break;
    const double alpha = rr / pap;
    dx += alpha * p;
    r -= alpha * (b.transpose() * bp);
    const double rr_new = r.squaredNorm();
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  return dx;
}

RVecX cg_step(const RankTargetProblem& problem, const RVecX& x) {
  BlockModel model = block_model(problem, x);
  model.jac.col(0).setZero();
  return cg_solve(model.jac, model.residual);
}

std::string to_string(SearchMethod method) { return method == SearchMethod::SquareSum ? "sq" : "cg"; }

SearchMethod search_method_from_string(const std::string& name) {
  if (name == "sq") return SearchMethod::SquareSum;
  if (name == "cg") return SearchMethod::ConjugateGradient;
  throw InvalidInput("unknown search method '" + name + "' (expected sq or cg)");
}

SearchResult search_ranks(const RankTargetProblem& problem, Rng& rng, const SearchOptions& options,
                          const Tolerances& tol) {
  if (options.budget <= 0) throw InvalidInput("budget must be positive");
  return run_search(problem, rng, options, tol);
}

SearchResult minimize_sq(const RankTargetProblem& problem, Rng& rng, long budget, const Tolerances& tol) {
  SearchOptions options;
  options.method = SearchMethod::SquareSum;
  options.budget = budget;
  return search_ranks(problem, rng, options, tol);
}

SearchResult minimize_cg(const RankTargetProblem& problem, Rng& rng, long budget, const Tolerances& tol) {
  SearchOptions options;
  options.method = SearchMethod::ConjugateGradient;
  options.budget = budget;
  return search_ranks(problem, rng, options, tol);
}

}  // namespace pptatlas
