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

#include "pptatlas/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace pptatlas {

Mat2 random_sl2(Rng& rng, double max_entry) {
  for (;;) {
    Mat2 g;
    g << rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), rng.complex_normal();
    const cplx det = g.determinant();
    if (std::abs(det) < 1e-3) continue;
    g /= std::sqrt(det);
    if (g.cwiseAbs().maxCoeff() <= max_entry) return g;
  }
}

std::array<Mat2, 3> random_sl2_triple(Rng& rng, double max_entry) {
  return {random_sl2(rng, max_entry), random_sl2(rng, max_entry), random_sl2(rng, max_entry)};
}

Vec2 random_qubit(Rng& rng) {
  Vec2 v(rng.complex_normal(), rng.complex_normal());
  return v.normalized();
}

Vec8 random_product_vector(Rng& rng) {
  const Vec2 x = random_qubit(rng);
  const Vec2 y = random_qubit(rng);
  const Vec2 z = random_qubit(rng);
  return product_vector(x, y, z);
}

HermitianOperator random_density_matrix(Rng& rng, int rank) {
  const MatX g = rng.complex_gaussian_matrix(kDim, rank);
  return HermitianOperator(Mat8(g * g.adjoint())).normalized();
}

HermitianOperator random_ppt_state(Rng& rng, double margin) {
  const HermitianOperator rho = random_density_matrix(rng);
  const double lo = min_ppt_eigenvalue(rho);
  // (lo + s) / (1 + 8 s) >= margin after renormalizing.
  const double shift = std::max(0.0, (margin - lo) / (1.0 - kDim * margin));
  return (rho + shift * HermitianOperator::identity()).normalized();
}

HermitianOperator random_separable_state(Rng& rng, int terms) {
  HermitianOperator rho;
  for (int k = 0; k < terms; ++k) {
    const double w = 0.2 + rng.uniform();
    rho += w * HermitianOperator::projector(random_product_vector(rng));
  }
  return rho.normalized();
}

}  // namespace pptatlas
