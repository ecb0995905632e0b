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

#include <cstdint>
#include <random>
#include <string_view>

#include "pptatlas/types.hpp"

namespace pptatlas {

/// Seedable random source with platform-independent output.
///
/// std::mt19937_64 is bit-exact across standard libraries, but the
/// std::*_distribution adaptors are not. Uniform and Gaussian variates are
/// therefore derived here directly from the raw 64-bit stream, so a seed
/// reproduces the same campaign on any toolchain.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/u53/marsaglia-polar";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  cplx complex_normal();

  /// Integer uniform on [0, n).
  std::uint64_t below(std::uint64_t n);

  VecX complex_gaussian_vector(int n);
  MatX complex_gaussian_matrix(int rows, int cols);
  RMatX gaussian_matrix(int rows, int cols);

  /// Seed for the index-th worker of a campaign rooted at `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pptatlas
