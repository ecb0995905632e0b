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

#include <string>

#include "pptatlas/errors.hpp"
#include "pptatlas/extremal.hpp"
#include "pptatlas/linalg.hpp"
#include "pptatlas/ranksearch.hpp"
#include "pptatlas/sampling.hpp"

namespace pptatlas {

namespace {

HermitianOperator transpose_sum(Rng& rng, const SymmetricOptions& options, const Tolerances& tol) {
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const MatX g = rng.complex_gaussian_matrix(kDim, kDim);
    const Mat8 a = g * g.adjoint();
    Mat8 sum = Mat8::Zero();
    for (int mask = 0; mask < 8; ++mask) {
      Mat8 t = a;
      for (int s = 1; s <= 3; ++s)
        if (mask & (1 << (s - 1))) t = partial_transpose(t, s);
      sum += t;
    }
    // Equal in exact arithmetic; averaging with each transpose makes the
    // symmetry hold bit for bit.
    Mat8 real = sum.real().cast<cplx>();
    for (int s = 1; s <= 3; ++s) real = (0.5 * (real + partial_transpose(real, s))).eval();
    const HermitianOperator rho(real);
    const RVec8 ev = hermitian_eigenvalues(rho.matrix());
    if (ev(0) > tol.psd_tol * ev(kDim - 1)) return rho.normalized();
  }
  throw MinimizationFailed("no positive transpose sum in " + std::to_string(options.max_attempts) + " draws");
}

HermitianOperator rank_targeted(Rng& rng, const SymmetricOptions& options, const Tolerances& tol) {
  if (options.rank < 4 || options.rank > 8) throw InvalidInput("symmetric rank must be in 4..8");
  const int m = options.rank;
  RankTargetProblem problem({m, m, m, m}, HermitianBasis::fully_symmetric());
  SearchOptions search;
  search.budget = options.budget;
  search.success_threshold = 1e-18;
  search.require_exact_profile = true;
  try {
    const SearchResult r = search_ranks(problem, rng, search, tol);
    // Exactly real and symmetric: recompose from the symmetric coordinates.
    return HermitianOperator(Mat8(r.state.matrix().real().cast<cplx>())).normalized();
  } catch (const BudgetExhausted& e) {
    throw MinimizationFailed(std::string("rank-targeted symmetric search: ") + e.what());
  }
}

}  // namespace

HermitianOperator symmetric_state_generator(const SymmetricOptions& options, Rng& rng, const Tolerances& tol) {
  switch (options.method) {
    case SymmetricMethod::TransposeSum:
      return transpose_sum(rng, options, tol);
    case SymmetricMethod::RankTargeted:
      return rank_targeted(rng, options, tol);
  }
  throw InvalidInput("unknown symmetric method");
}

}  // namespace pptatlas
