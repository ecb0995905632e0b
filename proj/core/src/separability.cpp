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

#include <cmath>

#include "pptatlas/errors.hpp"
#include "pptatlas/extremal.hpp"
#include "pptatlas/linalg.hpp"

namespace pptatlas {

namespace {

class Probe {
 public:
  Probe(Rng& rng, const Tolerances& tol, const ProbeOptions& options)
      : rng_(rng), tol_(tol), options_(options) {}

  void visit(const HermitianOperator& state, double weight, int depth) {
    const FaceSolutionSpace face = face_solution_space(state, tol_);
    if (face.dimension() == 0) {
      add(state, weight);
      return;
    }
    if (depth >= options_.max_depth) {
      // Beyond the split depth the weights are no longer a decomposition.
      exact_ = false;
      add(descend_to_extremal(state, rng_, tol_).state, weight);
      return;
    }
    const HermitianOperator sigma = random_face_direction(face, rng_);
    const FaceChord chord = face_chord(state, sigma, tol_);
    const double span = chord.eps_plus - chord.eps_minus;
    visit(chord.plus.normalized(), weight * (-chord.eps_minus / span), depth + 1);
    visit(chord.minus.normalized(), weight * (chord.eps_plus / span), depth + 1);
  }

  std::vector<SeparabilityEndpoint> take() { return std::move(endpoints_); }
  bool exact() const { return exact_; }

 private:
  void add(const HermitianOperator& state, double weight) {
    for (SeparabilityEndpoint& e : endpoints_) {
      if ((e.state.matrix() - state.matrix()).norm() < options_.merge_distance) {
        e.weight += weight;
        return;
      }
    }
    SeparabilityEndpoint e;
    e.state = state;
    e.weight = weight;
    e.profile = ppt_profile(state, tol_);
    e.pure = e.profile.ranks[0] == 1;
    if (e.pure) {
      const Eigensystem8 es = hermitian_eigen(state.matrix());
      e.product = is_full_product(es.vectors.col(kDim - 1));
    }
    endpoints_.push_back(std::move(e));
  }

  Rng& rng_;
  const Tolerances& tol_;
  const ProbeOptions& options_;
  std::vector<SeparabilityEndpoint> endpoints_;
  bool exact_ = true;
};

}  // namespace

SeparabilityReport separability_probe(const HermitianOperator& rho, Rng& rng, int n_trials,
                                      const Tolerances& tol, const ProbeOptions& options) {
  if (n_trials < 1) throw InvalidInput("n_trials must be positive");
  const HermitianOperator unit = rho.normalized();
  SeparabilityReport report;
  report.face_dimension = face_solution_space(unit, tol).dimension();
  for (int trial = 0; trial < n_trials; ++trial) {
    Probe probe(rng, tol, options);
    probe.visit(unit, 1.0, 0);
    report.endpoints = probe.take();
    report.trials_run = trial + 1;
    report.decomposition_exact = probe.exact();
    bool all_product = true;
    for (const SeparabilityEndpoint& e : report.endpoints) all_product = all_product && e.pure && e.product;
    if (all_product) {
      report.verdict = SeparabilityVerdict::SeparableEvidence;
      report.may_be_false_negative = false;
      return report;
    }
    // An extremal mixed input gives the same answer on every trial.
    if (report.face_dimension == 0) break;
  }
  report.verdict = SeparabilityVerdict::EntangledEvidence;
  report.may_be_false_negative = true;
  return report;
}

}  // namespace pptatlas
