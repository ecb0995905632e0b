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

// Subcommand implementations behind the pptatlas tool. Each returns its
// report and writes files only when an output path is given.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pptatlas/campaign.hpp"
#include "pptatlas/census.hpp"
#include "pptatlas/record.hpp"
#include "pptatlas/ranksearch.hpp"

namespace pptatlas::tools {

struct CommonOptions {
  std::uint64_t seed = 1;
  long runs = 1;
  long budget = 20000;
  int threads = 1;
  Tolerances tol;
  /// Empty: print to stdout only.
  std::filesystem::path out;
};

struct SearchExtremalOutput {
  std::vector<StateRecord> records;
  CensusReport census;
  long failures = 0;
};

/// Seeded descents from random PPT states. With `out`, writes
/// out/records.jsonl and out/census.csv.
SearchExtremalOutput cmd_search_extremal(const CommonOptions& options);

struct SearchRanksOutput {
  std::vector<StateRecord> records;
  /// One message per failed run.
  std::vector<std::string> failures;
  bool success() const { return !records.empty(); }
};

/// `runs` budgeted searches for `targets`. With `out`, writes one JSON
/// record (runs = 1) or out as JSON lines.
SearchRanksOutput cmd_search_ranks(const RankKey& targets, SearchMethod method, bool exact,
                                   const CommonOptions& options);

enum class Family { Upb, TypeI, TypeII };

struct ConstructSpec {
  Family family = Family::TypeII;
  std::array<double, 3> theta{};
  cplx t{1.0, 0.0};
};

/// Builds and annotates one state. type1 uses options.seed.
StateRecord cmd_construct(const ConstructSpec& spec, const CommonOptions& options);

/// Re-annotates a stored record with the given tolerances.
StateRecord cmd_classify(const std::filesystem::path& in, const CommonOptions& options);

/// Budgeted exact-profile rank searches for each target (`runs` each);
/// a target counts as confirmed when some run reaches it.
CensusReport cmd_census(const std::vector<RankKey>& targets, const CommonOptions& options);

/// JSON lines of the records, in order.
std::string to_jsonl(const std::vector<StateRecord>& records);

}  // namespace pptatlas::tools
