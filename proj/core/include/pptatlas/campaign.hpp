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

// Seeded campaigns. Run i uses Rng(Rng::derive(seed, i)) and results are
// merged in index order, so the output does not depend on the thread count.

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "pptatlas/census.hpp"
#include "pptatlas/extremal.hpp"
#include "pptatlas/ranksearch.hpp"
#include "pptatlas/rng.hpp"

namespace pptatlas {

/// std::thread::hardware_concurrency(), at least 1.
int default_threads();

/// Calls fn(index, rng) for index = 0..runs-1 on up to `threads` workers.
/// The first exception (by index) is rethrown after all workers finish.
template <typename Result, typename Fn>
std::vector<Result> run_campaign(std::uint64_t seed, long runs, int threads, Fn fn) {
  std::vector<Result> results(static_cast<std::size_t>(runs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(runs));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < runs; i = next++) {
      try {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
        results[i] = fn(i, rng);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(std::max(1L, runs))));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

struct DescentRun {
  long index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  DescentResult result;
  std::string error;
};

/// Descents from random PPT states.
std::vector<DescentRun> extremal_campaign(std::uint64_t seed, long runs, int threads,
                                          const DescentOptions& options = {}, const Tolerances& tol = {});

struct RankRun {
  RankKey targets{};
  long index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  SearchResult result;
  bool extremal = false;
  std::string error;
};

/// `runs_per_target` searches for each target, with run seeds derived from
/// (seed, target position * runs_per_target + run).
std::vector<RankRun> rank_campaign(const std::vector<RankKey>& targets, std::uint64_t seed, long runs_per_target,
                                   int threads, const SearchOptions& options = {}, const Tolerances& tol = {});

/// Census of extremal endpoints.
CensusReport census_of(const std::vector<DescentRun>& runs);
/// Census of rank-search outcomes: successes by reached profile, failures by
/// requested targets.
CensusReport census_of(const std::vector<RankRun>& runs);

}  // namespace pptatlas
