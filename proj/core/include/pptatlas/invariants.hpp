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

// Lorentz invariants of three-qubit density matrices.
//
// A local SL(2,C) transformation on qubit k acts as a proper Lorentz
// transformation on the k-th index of the Pauli coefficient tensor
// a^{lmn}, and the transposition T_k acts as a parity inversion on it.
// Contracting every index against the same slot of another copy of the
// tensor with g = diag(1,-1,-1,-1) gives quantities invariant under both.

#pragma once

#include <array>

#include "pptatlas/qstate.hpp"

namespace pptatlas {

struct QuadraticInvariant {
  /// a^{lmn} a_{lmn}.
  double contraction = 0.0;
  /// -(1/8) Tr(rho^T E rho E).
  double trace_form = 0.0;

  double value() const { return contraction; }
  /// The two routes agree within 1e-10 relative (absolute at small scale).
  bool consistent() const;
};

QuadraticInvariant quadratic_invariant(const HermitianOperator& rho);

/// Tr(A^T E B E): the bilinear form behind the quadratic invariant.
double trace_form(const HermitianOperator& a, const HermitianOperator& b);

/// I41, I42, I43, I44 in that order.
std::array<double, 4> quartic_invariants(const HermitianOperator& rho);

struct InvariantFingerprint {
  double i2 = 0.0;
  std::array<double, 4> quartics{};
  /// I4x / I2^2, or I4x / (Tr rho)^4 when `degenerate`.
  std::array<double, 4> normalized_quartics{};
  /// I2 / (Tr rho)^2.
  double normalized_i2 = 0.0;
  /// I2 < 1e-12 (Tr rho)^2: the quartic ratios are undefined.
  bool degenerate = false;
};

InvariantFingerprint fingerprint(const HermitianOperator& rho);

/// Relative agreement of the normalized quartics within rel_tol. For
/// nondegenerate fingerprints these ratios are SL(2,C)^3 invariant and
/// independent of normalization; I2 / (Tr rho)^2 is not, so it is left out.
bool fingerprints_match(const InvariantFingerprint& a, const InvariantFingerprint& b,
                        double rel_tol);

}  // namespace pptatlas
