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
#include <vector>

#include "pptatlas/config.hpp"
#include "pptatlas/qstate.hpp"
#include "pptatlas/rng.hpp"

namespace pptatlas {

/// The maps P_i(s) = (P_i s^{T_i} P_i)^{T_i}, with P_i the projector onto the
/// range of rho^{T_i}, as 64x64 matrices in the normalized Pauli basis.
struct FaceOperators {
  std::array<RMat64, 4> projectors;
  RMat64 sum() const;
};

FaceOperators face_operators(const HermitianOperator& rho, const Tolerances& tol = {});

/// Traceless directions spanning the face of the PPT set containing rho in
/// its relative interior.
struct FaceSolutionSpace {
  /// Frobenius-orthonormal traceless Hermitian matrices.
  std::vector<HermitianOperator> basis;
  /// Number of eigenvalues of sum P_i within the window of 4, rho included.
  int eigenspace_dimension = 0;
  int dimension() const { return static_cast<int>(basis.size()); }
};

FaceSolutionSpace face_solution_space(const HermitianOperator& rho, const Tolerances& tol = {});

struct ExtremalityReport {
  bool extremal = false;
  int face_dimension = 0;
  PptProfile profile;
};

/// Throws NotPpt if rho fails the PPT test.
ExtremalityReport is_extremal(const HermitianOperator& rho, const Tolerances& tol = {});

/// Both ends of the chord rho + eps sigma through a face.
struct FaceChord {
  double eps_minus = 0.0;  // < 0
  double eps_plus = 0.0;   // > 0
  HermitianOperator minus;
  HermitianOperator plus;
};

/// Exact chord ends from the compressed spectra of each transpose on its
/// range: 1 + eps Lambda^{-1/2} S Lambda^{-1/2} >= 0. Sigma must lie in the face.
FaceChord face_chord(const HermitianOperator& rho, const HermitianOperator& sigma,
                     const Tolerances& tol = {});

/// Random unit direction sigma_0 = sum c_k b_k with Gaussian c over the face.
HermitianOperator random_face_direction(const FaceSolutionSpace& face, Rng& rng);

struct DescentOptions {
  int max_iterations = 128;
  /// Fresh directions tried when a step fails to shrink the face.
  int direction_retries = 8;
};

struct DescentResult {
  HermitianOperator state;
  /// Profile at every visited point, start first.
  std::vector<PptProfile> path;
  std::vector<int> face_dimensions;
};

/// Walks to the boundary along random face directions until the face is a
/// point. Throws NotPpt for a non-PPT start and MaxIterations on stalling.
DescentResult descend_to_extremal(const HermitianOperator& rho, Rng& rng, const Tolerances& tol = {},
                                  const DescentOptions& options = {});

struct SeparabilityEndpoint {
  HermitianOperator state;
  /// Convex weight of this endpoint in the decomposition of the input.
  double weight = 0.0;
  PptProfile profile;
  bool pure = false;
  bool product = false;
};

enum class SeparabilityVerdict { SeparableEvidence, EntangledEvidence };

struct SeparabilityReport {
  SeparabilityVerdict verdict = SeparabilityVerdict::EntangledEvidence;
  /// Endpoints of the last trial; for separable evidence a decomposition.
  std::vector<SeparabilityEndpoint> endpoints;
  int trials_run = 0;
  int face_dimension = 0;
  /// False when the split depth was exceeded and weights are approximate.
  bool decomposition_exact = true;
  /// A mixed extremal endpoint does not prove entanglement.
  bool may_be_false_negative = true;
};

struct ProbeOptions {
  /// Levels that split both ways; deeper nodes descend one way only.
  int max_depth = 8;
  /// Endpoints closer than this in Frobenius norm are merged.
  double merge_distance = 1e-7;
};

/// Splits rho along +/- sigma recursively and inspects the extremal leaves.
SeparabilityReport separability_probe(const HermitianOperator& rho, Rng& rng, int n_trials,
                                      const Tolerances& tol = {}, const ProbeOptions& options = {});

struct RankSquareBound {
  long bound = 0;
  long square_sum = 0;
  bool admissible = false;
};

/// (2^{n-1} - 1) N^2 + 1. Throws BadArity unless ranks.size() == 2^{n-1}.
RankSquareBound rank_square_bound(const std::vector<int>& ranks, int n_parties, int total_dim);

enum class SymmetricMethod { TransposeSum, RankTargeted };

struct SymmetricOptions {
  SymmetricMethod method = SymmetricMethod::TransposeSum;
  int rank = 8;
  int budget = 40000;
  int max_attempts = 64;
};

/// State with rho = rho^{T1} = rho^{T2} = rho^{T3}. Throws MinimizationFailed.
HermitianOperator symmetric_state_generator(const SymmetricOptions& options, Rng& rng,
                                            const Tolerances& tol = {});

}  // namespace pptatlas
