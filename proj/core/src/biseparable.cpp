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

#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "pptatlas/errors.hpp"
#include "pptatlas/rank4.hpp"

namespace pptatlas {

namespace {

using RVec8d = Eigen::Matrix<double, 8, 1>;

Mat8x4 product_basis(const SubspaceBasis& basis, Bipartition b) {
  const auto sols = product_vectors_in_subspace(basis, b);
  Mat8x4 m;
  for (int k = 0; k < 4; ++k) m.col(k) = sols[k].vector;
  return m;
}

// Real 128-vector of v v^dagger: real parts, then imaginary parts.
void projector_column(const Vec8& v, Eigen::Ref<RVecX> out) {
  const Mat8 p = v * v.adjoint();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      out(8 * i + j) = p(i, j).real();
      out(64 + 8 * i + j) = p(i, j).imag();
    }
}

double smallest_singular(const Mat8x4& a, const Mat8x4& b, RVec8d& null) {
  RMatX m(128, 8);
  for (int k = 0; k < 4; ++k) {
    projector_column(a.col(k), m.col(k));
    projector_column(b.col(k), m.col(4 + k));
  }
  Eigen::JacobiSVD<RMatX> svd(m, Eigen::ComputeFullV);
  null = svd.matrixV().col(7);
  return svd.singularValues()(7);
}

Mat8x4 frame(const Mat8& unitary, const Eigen::Matrix<cplx, 4, 4>& x) {
  Mat8x4 top = Mat8x4::Zero();
  top.topRows<4>().setIdentity();
  top.bottomRows<4>() = x;
  return unitary * top;
}

}  // namespace

double CompatibilityGaps::spread(const Eigen::Matrix<double, 8, 1>& null) {
  return std::sqrt(8.0) * null.cwiseAbs().minCoeff();
}

CompatibilityGaps compatibility_gaps(const SubspaceBasis& basis) {
  CompatibilityGaps g;
  g.triple.e = product_basis(basis, Bipartition::Q1_Q23);
  g.triple.f = product_basis(basis, Bipartition::Q2_Q13);
  g.triple.g = product_basis(basis, Bipartition::Q3_Q12);
  g.sigma_ef = smallest_singular(g.triple.e, g.triple.f, g.null_ef);
  g.sigma_eg = smallest_singular(g.triple.e, g.triple.g, g.null_eg);
  return g;
}

BiseparableResult construct_biseparable(Rng& rng, const BiseparableOptions& options) {
  BiseparableResult r;
  auto objective = [&](const Mat8& q, const Eigen::Matrix<cplx, 4, 4>& x, CompatibilityGaps& out) {
    ++r.evaluations;
    try {
      out = compatibility_gaps(SubspaceBasis(frame(q, x)));
      return out.objective();
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  for (r.attempts = 1; r.attempts <= options.max_attempts; ++r.attempts) {
    // Subspaces near span(Q[:, :4]) as Q [1; X], X complex 4x4.
    const Mat8 q = rng.complex_gaussian_matrix(8, 8).householderQr().householderQ();
    Eigen::Matrix<cplx, 4, 4> x = Eigen::Matrix<cplx, 4, 4>::Zero();
    CompatibilityGaps best;
    double f = objective(q, x, best);
    double step = options.initial_step;
    long evals = 1;
    // (1+1) strategy with the one-fifth success rule.
    while ((best.sigma_ef >= options.accept || best.sigma_eg >= options.accept) &&
           evals < options.max_evaluations && step > options.min_step && step > options.stall_ratio * f) {
      Eigen::Matrix<cplx, 4, 4> trial = x;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) trial(i, j) += step * rng.complex_normal();
      CompatibilityGaps cand;
      const double ft = objective(q, trial, cand);
      ++evals;
      if (ft < f) {
        x = trial;
        f = ft;
        best = cand;
        step *= 1.5;
      } else {
        step *= std::pow(1.5, -0.25);
      }
    }
    if (best.sigma_ef >= options.accept || best.sigma_eg >= options.accept ||
        CompatibilityGaps::spread(best.null_ef) < options.min_spread ||
        CompatibilityGaps::spread(best.null_eg) < options.min_spread) {
      ++r.stalls;
      continue;
    }

    // Weights from the null vectors; the eg vector is rescaled to share lambda.
    RVec4 lambda = best.null_ef.head<4>(), mu = -best.null_ef.tail<4>();
    const RVec4 lambda2 = best.null_eg.head<4>();
    const double s = lambda.dot(lambda2) / lambda2.squaredNorm();
    RVec4 nu = -s * best.null_eg.tail<4>();
    if ((s * lambda2 - lambda).norm() > 1e-6 * lambda.norm()) {
      ++r.inconsistent;
      continue;
    }
    if (lambda.maxCoeff() < 0) {
      lambda = -lambda;
      mu = -mu;
      nu = -nu;
    }
    if (lambda.minCoeff() <= 0 || mu.minCoeff() <= 0 || nu.minCoeff() <= 0) {
      ++r.sign_rejections;
      continue;
    }
    BiseparableTriple t = best.triple;
    t.lambda = lambda;
    t.mu = mu;
    t.nu = nu;
    const double tr = t.from_e().trace().real();
    t.lambda /= tr;
    t.mu /= tr;
    t.nu /= tr;
    const HermitianOperator rho(t.from_e());
    const PptProfile p = ppt_profile(rho);
    if (!p.is_ppt || !p.all_ranks(4)) {
      ++r.sign_rejections;
      continue;
    }
    r.state = rho;
    r.triple = t;
    return r;
  }
  r.attempts = options.max_attempts;
  throw MaxIterations("construct_biseparable: no positive compatible subspace within the attempt limit");
}

}  // namespace pptatlas
