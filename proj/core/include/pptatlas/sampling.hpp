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

#include "pptatlas/qstate.hpp"
#include "pptatlas/rng.hpp"

namespace pptatlas {

/// Random element of SL(2,C) with every |entry| <= max_entry.
Mat2 random_sl2(Rng& rng, double max_entry = 10.0);
std::array<Mat2, 3> random_sl2_triple(Rng& rng, double max_entry = 10.0);

Vec2 random_qubit(Rng& rng);
/// Normalized x (x) y (x) z with Gaussian factors.
Vec8 random_product_vector(Rng& rng);

/// G G^dagger / Tr with G an 8 x rank complex Gaussian matrix.
HermitianOperator random_density_matrix(Rng& rng, int rank = kDim);

/// Full-rank unit-trace PPT state: a random density matrix mixed with the
/// identity just enough that every single partial transpose is positive
/// with minimum eigenvalue at least `margin`.
HermitianOperator random_ppt_state(Rng& rng, double margin = 1e-3);

/// Unit-trace mixture of `terms` random pure product states with random
/// positive weights.
HermitianOperator random_separable_state(Rng& rng, int terms);

}  // namespace pptatlas
