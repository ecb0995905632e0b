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
#include <vector>

#include "pptatlas/qstate.hpp"

namespace pptatlas {

/// Orthonormal basis (w.r.t. Tr(AB)) of a real subspace of 8x8 Hermitian
/// matrices, built from normalized Pauli products sigma_l (x) sigma_m (x)
/// sigma_n / sqrt(8). Element 0 is always 1/sqrt(8).
///
/// In this basis every partial transposition is diagonal: T_i flips the
/// sign of each product carrying sigma_2 in slot i. Subspaces invariant
/// under a set of transpositions are therefore coordinate subspaces.
class HermitianBasis {
 public:
  /// All 64 elements.
  static HermitianBasis full();
  /// rho = rho^T1 = rho^T2 = rho^T3: no sigma_2 anywhere, 27 elements.
  static HermitianBasis fully_symmetric();
  /// rho = rho^T1 = rho^T2: no sigma_2 in slots 1 and 2, 36 elements.
  static HermitianBasis t1t2_symmetric();
  static HermitianBasis by_name(const std::string& name);

  int dim() const { return static_cast<int>(indices_.size()); }
  const std::string& name() const { return name_; }
  /// Pauli index 16 l + 4 m + n of element k.
  int pauli_index(int k) const { return indices_[k]; }
  const Mat8& element(int k) const;

  /// Coordinates Tr(B_k H), projecting H onto the subspace.
  RVecX coordinates(const HermitianOperator& h) const;
  HermitianOperator compose(const RVecX& x) const;

 private:
  HermitianBasis(std::string name, std::vector<int> indices);

  std::string name_;
  std::vector<int> indices_;
};

/// Coordinates of H in the full normalized Pauli basis.
RVec64 hermitian_coordinates(const HermitianOperator& h);
HermitianOperator from_hermitian_coordinates(const RVec64& c);

/// Sign (+1/-1) of Pauli element `index` under partial transposition
/// `subsystem` (0 gives +1).
double transpose_sign(int index, int subsystem);

}  // namespace pptatlas
