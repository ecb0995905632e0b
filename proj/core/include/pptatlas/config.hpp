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

namespace pptatlas {

/// Numerical thresholds shared by every module. All of them can be
/// overridden from the command line (`--tol-*`) or the environment.
struct Tolerances {
  /// Eigenvalues below rank_tol * (largest eigenvalue) count as zero.
  double rank_tol = 1e-8;
  /// I2 below i2_zero_tol * (Tr rho)^2 counts as a vanishing invariant.
  double i2_zero_tol = 1e-10;
  /// Minimum eigenvalue accepted as nonnegative (unit-trace scale).
  double psd_tol = 1e-9;
  /// Eigenvalues of the summed face projector within this window of 4
  /// belong to the face.
  double face_eig_window = 1e-6;
};

}  // namespace pptatlas
