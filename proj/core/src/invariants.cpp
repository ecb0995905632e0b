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

#include "pptatlas/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "pptatlas/errors.hpp"

namespace pptatlas {

namespace {

constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

// Sum over six Lorentz indices (slot-1 pair i,a; slot-2 pair j,b; slot-3
// pair k,c) of g-weighted products of four tensor entries. `Pick` maps the
// six indices to the four index triples. Terms grow with the condition of
// an SL transform while the sum does not, so products and the sum use
// extended precision.
template <typename Pick>
double six_index_contraction(const LorentzTensor& t, Pick pick) {
  long double sum = 0.0L;
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 4; ++a)
      for (int j = 0; j < 4; ++j)
        for (int b = 0; b < 4; ++b)
          for (int k = 0; k < 4; ++k)
            for (int c = 0; c < 4; ++c) {
              const double w = kMetric[i] * kMetric[a] * kMetric[j] * kMetric[b] * kMetric[k] * kMetric[c];
              sum += w * pick(t, i, a, j, b, k, c);
            }
  return static_cast<double>(sum);
}

}  // namespace

bool QuadraticInvariant::consistent() const {
  const double scale = std::max({std::abs(contraction), std::abs(trace_form), 1e-300});
  return std::abs(contraction - trace_form) <= 1e-10 * std::max(scale, 1e-6);
}

double trace_form(const HermitianOperator& a, const HermitianOperator& b) {
  const Mat8 e = invariant_tensor_E().cast<cplx>();
  return (a.matrix().transpose() * e * b.matrix() * e).trace().real();
}

QuadraticInvariant quadratic_invariant(const HermitianOperator& rho) {
  const LorentzTensor up = pauli_decompose(rho);
  const LorentzTensor down = up.lowered();
  QuadraticInvariant q;
  for (int k = 0; k < 64; ++k) q.contraction += up.coeffs[k] * down.coeffs[k];
  q.trace_form = -trace_form(rho, rho) / 8.0;
  return q;
}

std::array<double, 4> quartic_invariants(const HermitianOperator& rho) {
  const LorentzTensor t = pauli_decompose(rho);
  // Slot-1 indices (mu, alpha), slot-2 (nu, beta), slot-3 (lambda, gamma).
  // I41 = r^{mu nu lambda} r_{mu nu gamma} r^{alpha beta gamma} r_{alpha beta lambda}
  const double i41 = six_index_contraction(t, [](const LorentzTensor& r, int mu, int al, int nu, int be,
                                                 int la, int ga) -> long double {
    return static_cast<long double>(r(mu, nu, la)) * r(mu, nu, ga) * r(al, be, ga) * r(al, be, la);
  });
  // I42 = r^{mu nu lambda} r_{mu beta lambda} r^{alpha beta gamma} r_{alpha nu gamma}
  const double i42 = six_index_contraction(t, [](const LorentzTensor& r, int mu, int al, int nu, int be,
                                                 int la, int ga) -> long double {
    return static_cast<long double>(r(mu, nu, la)) * r(mu, be, la) * r(al, be, ga) * r(al, nu, ga);
  });
  // I43 = r^{mu nu lambda} r_{mu beta gamma} r^{alpha beta gamma} r_{alpha nu lambda}
  const double i43 = six_index_contraction(t, [](const LorentzTensor& r, int mu, int al, int nu, int be,
                                                 int la, int ga) -> long double {
    return static_cast<long double>(r(mu, nu, la)) * r(mu, be, ga) * r(al, be, ga) * r(al, nu, la);
  });
  // I44 = r^{mu nu lambda} r_mu^{beta gamma} r^alpha_{nu gamma} r_{alpha beta lambda}
  const double i44 = six_index_contraction(t, [](const LorentzTensor& r, int mu, int al, int nu, int be,
                                                 int la, int ga) -> long double {
    return static_cast<long double>(r(mu, nu, la)) * r(mu, be, ga) * r(al, nu, ga) * r(al, be, la);
  });
  return {i41, i42, i43, i44};
}

InvariantFingerprint fingerprint(const HermitianOperator& rho) {
  const double tr = rho.trace();
  if (std::abs(tr) < 1e-300) throw InvalidInput("fingerprint of a traceless operator");
  InvariantFingerprint f;
  f.i2 = quadratic_invariant(rho).value();
  f.quartics = quartic_invariants(rho);
  const double tr2 = tr * tr;
  f.normalized_i2 = f.i2 / tr2;
  f.degenerate = f.i2 < 1e-12 * tr2;
  const double denom = f.degenerate ? tr2 * tr2 : f.i2 * f.i2;
  for (int k = 0; k < 4; ++k) f.normalized_quartics[k] = f.quartics[k] / denom;
  return f;
}

bool fingerprints_match(const InvariantFingerprint& a, const InvariantFingerprint& b,
                        double rel_tol) {
  if (a.degenerate != b.degenerate) return false;
  auto close = [rel_tol](double x, double y) {
    return std::abs(x - y) <= rel_tol * std::max({std::abs(x), std::abs(y), 1e-12});
  };
  for (int k = 0; k < 4; ++k)
    if (!close(a.normalized_quartics[k], b.normalized_quartics[k])) return false;
  return true;
}

}  // namespace pptatlas
