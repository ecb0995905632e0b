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

#include "pptatlas/extremal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "pptatlas/errors.hpp"
#include "pptatlas/hermitian_basis.hpp"
#include "pptatlas/linalg.hpp"

namespace pptatlas {

namespace {

const double kSqrt8 = std::sqrt(8.0);

// Eigenvectors of rho^{T_i} above the rank cut, with their eigenvalues.
struct RangeFrame {
  MatX vectors;
  RVecX values;
};

RangeFrame range_frame(const Mat8& m, const Tolerances& tol) {
  const Eigensystem8 es = hermitian_eigen(m);
  const double cut = tol.rank_tol * es.values.cwiseAbs().maxCoeff();
  std::vector<int> keep;
  for (int k = 0; k < kDim; ++k)
    if (es.values(k) > cut) keep.push_back(k);
  RangeFrame f;
  f.vectors.resize(kDim, static_cast<Eigen::Index>(keep.size()));
  f.values.resize(static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    f.vectors.col(j) = es.vectors.col(keep[j]);
    f.values(j) = es.values(keep[j]);
  }
  return f;
}

const std::array<HermitianOperator, 64>& pauli_elements() {
  static const std::array<HermitianOperator, 64> table = [] {
    std::array<HermitianOperator, 64> t;
    const HermitianBasis full = HermitianBasis::full();
    for (int k = 0; k < 64; ++k) t[k] = HermitianOperator(full.element(k));
    return t;
  }();
  return table;
}

void require_ppt(const HermitianOperator& rho, const Tolerances& tol) {
  for (int i = 0; i < 4; ++i) {
    const double lo = hermitian_eigenvalues(partial_transpose(rho.matrix(), i))(0);
    if (lo < -tol.psd_tol * std::max(1.0, std::abs(rho.trace())))
      throw NotPpt("partial transpose " + std::to_string(i) + " has eigenvalue " + std::to_string(lo));
  }
}

}  // namespace

RMat64 FaceOperators::sum() const {
  return projectors[0] + projectors[1] + projectors[2] + projectors[3];
}

FaceOperators face_operators(const HermitianOperator& rho, const Tolerances& tol) {
  const HermitianOperator unit = rho.normalized();
  require_ppt(unit, tol);
  FaceOperators ops;
  const auto& elements = pauli_elements();
  for (int i = 0; i < 4; ++i) {
    const RangeFrame f = range_frame(partial_transpose(unit.matrix(), i), tol);
    const Mat8 p = f.vectors * f.vectors.adjoint();
    for (int k = 0; k < 64; ++k) {
      const Mat8 bt = partial_transpose(elements[k].matrix(), i);
      const HermitianOperator image(partial_transpose(Mat8(p * bt * p), i));
      ops.projectors[i].col(k) = hermitian_coordinates(image);
    }
    // Exactly symmetric in an orthonormal basis; remove rounding asymmetry.
    ops.projectors[i] = 0.5 * (ops.projectors[i] + ops.projectors[i].transpose()).eval();
  }
  return ops;
}

FaceSolutionSpace face_solution_space(const HermitianOperator& rho, const Tolerances& tol) {
  const HermitianOperator unit = rho.normalized();
  const FaceOperators ops = face_operators(unit, tol);
  Eigen::SelfAdjointEigenSolver<RMat64> solver(ops.sum());
  std::vector<int> picked;
  for (int k = 0; k < 64; ++k)
    if (std::abs(solver.eigenvalues()(k) - 4.0) < tol.face_eig_window) picked.push_back(k);

  FaceSolutionSpace face;
  face.eigenspace_dimension = static_cast<int>(picked.size());
  if (picked.empty()) return face;

  // v -> v - Tr(v) rho kills the rho direction and keeps the rest traceless.
  const RVec64 r = hermitian_coordinates(unit);
  RMatX traceless(64, static_cast<Eigen::Index>(picked.size()));
  for (size_t j = 0; j < picked.size(); ++j) {
    const RVec64 v = solver.eigenvectors().col(picked[j]);
    traceless.col(j) = v - kSqrt8 * v(0) * r;
  }
  Eigen::JacobiSVD<RMatX> svd(traceless, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) < 1e-6) break;
    face.basis.push_back(from_hermitian_coordinates(svd.matrixU().col(j)));
  }
  return face;
}

ExtremalityReport is_extremal(const HermitianOperator& rho, const Tolerances& tol) {
  ExtremalityReport report;
  const FaceSolutionSpace face = face_solution_space(rho, tol);
  report.profile = ppt_profile(rho, tol);
  report.face_dimension = face.dimension();
  report.extremal = face.dimension() == 0;
  return report;
}

FaceChord face_chord(const HermitianOperator& rho, const HermitianOperator& sigma, const Tolerances& tol) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const RangeFrame f = range_frame(partial_transpose(rho.matrix(), i), tol);
    const MatX s = f.vectors.adjoint() * partial_transpose(sigma.matrix(), i) * f.vectors;
    const RVecX d = f.values.cwiseSqrt().cwiseInverse();
    const MatX k = d.asDiagonal() * s * d.asDiagonal();
    Eigen::SelfAdjointEigenSolver<MatX> solver(0.5 * (k + k.adjoint()), Eigen::EigenvaluesOnly);
    const double kmin = solver.eigenvalues().minCoeff();
    const double kmax = solver.eigenvalues().maxCoeff();
    if (kmin < 0) hi = std::min(hi, -1.0 / kmin);
    if (kmax > 0) lo = std::max(lo, -1.0 / kmax);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidInput("direction does not leave the PPT set; is it traceless?");
  FaceChord chord;
  chord.eps_minus = lo;
  chord.eps_plus = hi;
  chord.minus = rho + lo * sigma;
  chord.plus = rho + hi * sigma;
  return chord;
}

HermitianOperator random_face_direction(const FaceSolutionSpace& face, Rng& rng) {
  if (face.basis.empty()) throw InvalidInput("face has no directions");
  HermitianOperator sigma;
  for (const HermitianOperator& b : face.basis) sigma += rng.normal() * b;
  const double n = sigma.frobenius_norm();
  return (1.0 / n) * sigma;
}

DescentResult descend_to_extremal(const HermitianOperator& rho, Rng& rng, const Tolerances& tol,
                                  const DescentOptions& options) {
  DescentResult result;
  result.state = rho.normalized();
  require_ppt(result.state, tol);
  FaceSolutionSpace face = face_solution_space(result.state, tol);
  result.path.push_back(ppt_profile(result.state, tol));
  result.face_dimensions.push_back(face.dimension());

  for (int iter = 0; face.dimension() > 0; ++iter) {
    if (iter >= options.max_iterations)
      throw MaxIterations("descent did not reach an extremal point in " +
                          std::to_string(options.max_iterations) + " steps");
    bool advanced = false;
    for (int attempt = 0; attempt < options.direction_retries && !advanced; ++attempt) {
      const HermitianOperator sigma = random_face_direction(face, rng);
      const FaceChord chord = face_chord(result.state, sigma, tol);
      const HermitianOperator next = chord.plus.normalized();
      if (min_ppt_eigenvalue(next) < -tol.psd_tol) continue;
      FaceSolutionSpace next_face = face_solution_space(next, tol);
      if (next_face.dimension() >= face.dimension()) continue;
      result.state = next;
      face = std::move(next_face);
      advanced = true;
    }
    if (!advanced)
      throw MaxIterations("face dimension " + std::to_string(face.dimension()) + " did not decrease after " +
                          std::to_string(options.direction_retries) + " directions");
    result.path.push_back(ppt_profile(result.state, tol));
    result.face_dimensions.push_back(face.dimension());
  }
  return result;
}

RankSquareBound rank_square_bound(const std::vector<int>& ranks, int n_parties, int total_dim) {
  if (n_parties < 1 || n_parties > 20) throw BadArity("n_parties out of range");
  const size_t expected = size_t{1} << (n_parties - 1);
  if (ranks.size() != expected)
    throw BadArity("expected " + std::to_string(expected) + " ranks, got " + std::to_string(ranks.size()));
  RankSquareBound b;
  const long n2 = static_cast<long>(total_dim) * total_dim;
  b.bound = (static_cast<long>(expected) - 1) * n2 + 1;
  for (int m : ranks) {
    if (m < 1 || m > total_dim) throw InvalidInput("rank " + std::to_string(m) + " outside 1..N");
    b.square_sum += static_cast<long>(m) * m;
  }
  b.admissible = b.square_sum <= b.bound;
  return b;
}

}  // namespace pptatlas
