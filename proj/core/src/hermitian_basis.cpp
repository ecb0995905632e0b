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

#include "pptatlas/hermitian_basis.hpp"

#include <cmath>

#include "pptatlas/errors.hpp"

namespace pptatlas {

namespace {

const std::array<Mat8, 64>& normalized_paulis() {
  static const std::array<Mat8, 64> table = [] {
    std::array<Mat8, 64> t;
    const double s = 1.0 / std::sqrt(8.0);
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) t[16 * l + 4 * m + n] = s * pauli_product(l, m, n);
    return t;
  }();
  return table;
}

int slot(int index, int subsystem) { return (index >> (2 * (3 - subsystem))) & 3; }

std::vector<int> indices_without_sigma2(std::initializer_list<int> slots) {
  std::vector<int> out;
  for (int k = 0; k < 64; ++k) {
    bool keep = true;
    for (int s : slots) keep = keep && slot(k, s) != 2;
    if (keep) out.push_back(k);
  }
  return out;
}

}  // namespace

double transpose_sign(int index, int subsystem) {
  if (subsystem == 0) return 1.0;
  return slot(index, subsystem) == 2 ? -1.0 : 1.0;
}

HermitianBasis::HermitianBasis(std::string name, std::vector<int> indices)
    : name_(std::move(name)), indices_(std::move(indices)) {}

HermitianBasis HermitianBasis::full() { return {"full", indices_without_sigma2({})}; }

HermitianBasis HermitianBasis::fully_symmetric() {
  return {"fully-symmetric", indices_without_sigma2({1, 2, 3})};
}

HermitianBasis HermitianBasis::t1t2_symmetric() {
  return {"t1t2-symmetric", indices_without_sigma2({1, 2})};
}

HermitianBasis HermitianBasis::by_name(const std::string& name) {
  if (name == "full") return full();
  if (name == "fully-symmetric") return fully_symmetric();
  if (name == "t1t2-symmetric") return t1t2_symmetric();
  throw InvalidInput("unknown basis '" + name + "'");
}

const Mat8& HermitianBasis::element(int k) const { return normalized_paulis()[indices_[k]]; }

RVecX HermitianBasis::coordinates(const HermitianOperator& h) const {
  RVecX x(dim());
  for (int k = 0; k < dim(); ++k)
    x(k) = (h.matrix().array() * element(k).conjugate().array()).sum().real();
  return x;
}

HermitianOperator HermitianBasis::compose(const RVecX& x) const {
  Mat8 m = Mat8::Zero();
  for (int k = 0; k < dim(); ++k) m += x(k) * element(k);
  return HermitianOperator(m);
}

RVec64 hermitian_coordinates(const HermitianOperator& h) {
  const auto& table = normalized_paulis();
  RVec64 c;
  for (int k = 0; k < 64; ++k) c(k) = (h.matrix().array() * table[k].conjugate().array()).sum().real();
  return c;
}

HermitianOperator from_hermitian_coordinates(const RVec64& c) {
  const auto& table = normalized_paulis();
  Mat8 m = Mat8::Zero();
  for (int k = 0; k < 64; ++k) m += c(k) * table[k];
  return HermitianOperator(m);
}

}  // namespace pptatlas
