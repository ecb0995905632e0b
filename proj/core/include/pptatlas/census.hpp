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

#include <map>
#include <set>
#include <string>

#include "pptatlas/qstate.hpp"

namespace pptatlas {

using RankKey = PerTranspose<int>;

/// "5568" for {5, 5, 6, 8}. Throws InvalidInput unless four digits 1..8.
RankKey parse_rank_key(const std::string& s);
std::string to_string(const RankKey& k);
/// Ascending copy.
RankKey sorted_key(RankKey k);

/// The sorted rank combinations for which three-qubit PPT states are known
/// (the reference census).
const std::set<RankKey>& reference_combinations();
bool in_reference(const RankKey& sorted);
/// Reference entries with square sum <= 193 where only nonextremal states were
/// found: 2222, 3333 and 5688.
const std::set<RankKey>& nonextremal_only_combinations();
/// 5688: extremal states allowed by the bound but their existence is open.
bool extremal_existence_unresolved(const RankKey& sorted);
/// "", "nonextremal_only" or "unresolved".
std::string reference_note(const RankKey& sorted);

struct CensusEntry {
  RankKey ranks{};
  long found = 0;
  long extremal = 0;
  int square_sum = 0;
  /// square_sum <= 193.
  bool admissible = false;
  bool in_reference = false;
  /// Rank-search census only: requested but never reached within budget.
  long failures = 0;
};

class CensusReport {
 public:
  void add(const PptProfile& profile, bool extremal);
  /// Records a budgeted search for `sorted` that found nothing.
  void add_failure(const RankKey& sorted);

  const std::map<RankKey, CensusEntry>& entries() const { return entries_; }
  long total() const;
  /// Every extremal entry has square sum <= 193.
  bool bound_respected() const;

  /// One line per combination, sorted by key:
  /// ranks,found,extremal,failures,square_sum,admissible,reference,note
  std::string to_csv() const;

 private:
  CensusEntry& entry(const RankKey& sorted);
  std::map<RankKey, CensusEntry> entries_;
};

}  // namespace pptatlas
