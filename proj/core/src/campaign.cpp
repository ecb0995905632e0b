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

#include "pptatlas/campaign.hpp"

#include "pptatlas/errors.hpp"
#include "pptatlas/sampling.hpp"

namespace pptatlas {

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<DescentRun> extremal_campaign(std::uint64_t seed, long runs, int threads, const DescentOptions& options,
                                          const Tolerances& tol) {
  return run_campaign<DescentRun>(seed, runs, threads, [&](long i, Rng& rng) {
    DescentRun r;
    r.index = i;
    r.seed = Rng::derive(seed, static_cast<std::uint64_t>(i));
    try {
      r.result = descend_to_extremal(random_ppt_state(rng), rng, tol, options);
      r.ok = true;
    } catch (const SearchFailure& e) {
      r.error = e.what();
    }
    return r;
  });
}

std::vector<RankRun> rank_campaign(const std::vector<RankKey>& targets, std::uint64_t seed, long runs_per_target,
                                   int threads, const SearchOptions& options, const Tolerances& tol) {
  const long total = static_cast<long>(targets.size()) * runs_per_target;
  return run_campaign<RankRun>(seed, total, threads, [&](long i, Rng& rng) {
    RankRun r;
    r.targets = targets[i / runs_per_target];
    r.index = i;
    r.seed = Rng::derive(seed, static_cast<std::uint64_t>(i));
    try {
      r.result = search_ranks(RankTargetProblem(r.targets), rng, options, tol);
      r.extremal = is_extremal(r.result.state, tol).extremal;
      r.ok = true;
    } catch (const SearchFailure& e) {
      r.error = e.what();
    }
    return r;
  });
}

CensusReport census_of(const std::vector<DescentRun>& runs) {
  CensusReport c;
  for (const DescentRun& r : runs)
    if (r.ok) c.add(ppt_profile(r.result.state), true);
  return c;
}

CensusReport census_of(const std::vector<RankRun>& runs) {
  CensusReport c;
  for (const RankRun& r : runs) {
    if (r.ok) {
      c.add(r.result.profile, r.extremal);
    } else {
      c.add_failure(r.targets);
    }
  }
  return c;
}

}  // namespace pptatlas
