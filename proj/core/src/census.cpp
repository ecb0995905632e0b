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

#include "pptatlas/census.hpp"

#include <algorithm>
#include <sstream>

#include "pptatlas/errors.hpp"

namespace pptatlas {

RankKey parse_rank_key(const std::string& s) {
  if (s.size() != 4) throw InvalidInput("rank key '" + s + "' must have four digits");
  RankKey k{};
  for (int i = 0; i < 4; ++i) {
    if (s[i] < '1' || s[i] > '8') throw InvalidInput("rank key '" + s + "' has a digit outside 1..8");
    k[i] = s[i] - '0';
  }
  return k;
}

std::string to_string(const RankKey& k) {
  std::string s;
  for (int r : k) s += static_cast<char>('0' + r);
  return s;
}

RankKey sorted_key(RankKey k) {
  std::sort(k.begin(), k.end());
  return k;
}

const std::set<RankKey>& reference_combinations() {
  static const std::set<RankKey> table = [] {
    std::set<RankKey> t;
    for (const char* s : {"1111", "2222", "3333", "4444", "5555", "5556", "5557", "5558", "5566",
                          "5567", "5577", "5578", "5666", "5667", "5668", "5677", "5678", "5688",
                          "5777", "5778", "5788", "6666", "6667", "6668", "6677", "6678", "6688",
                          "6777", "6778", "6788", "6888", "7777", "7778", "7788", "7888", "8888"})
      t.insert(parse_rank_key(s));
    return t;
  }();
  return table;
}

bool in_reference(const RankKey& sorted) { return reference_combinations().count(sorted) > 0; }

const std::set<RankKey>& nonextremal_only_combinations() {
  static const std::set<RankKey> s{parse_rank_key("2222"), parse_rank_key("3333"), parse_rank_key("5688")};
  return s;
}

bool extremal_existence_unresolved(const RankKey& sorted) { return sorted == parse_rank_key("5688"); }

std::string reference_note(const RankKey& sorted) {
  if (extremal_existence_unresolved(sorted)) return "unresolved";
  if (nonextremal_only_combinations().count(sorted)) return "nonextremal_only";
  return "";
}

CensusEntry& CensusReport::entry(const RankKey& sorted) {
  auto [it, inserted] = entries_.try_emplace(sorted);
  if (inserted) {
    CensusEntry& e = it->second;
    e.ranks = sorted;
    for (int r : sorted) e.square_sum += r * r;
    e.admissible = e.square_sum <= 193;
    e.in_reference = in_reference(sorted);
  }
  return it->second;
}

void CensusReport::add(const PptProfile& profile, bool extremal) {
  CensusEntry& e = entry(profile.sorted_ranks());
  ++e.found;
  if (extremal) ++e.extremal;
}

void CensusReport::add_failure(const RankKey& sorted) { ++entry(sorted_key(sorted)).failures; }

long CensusReport::total() const {
  long n = 0;
  for (const auto& [k, e] : entries_) n += e.found;
  return n;
}

bool CensusReport::bound_respected() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second.extremal == 0 || kv.second.admissible; });
}

std::string CensusReport::to_csv() const {
  std::ostringstream out;
  out << "ranks,found,extremal,failures,square_sum,admissible,reference,note\n";
  for (const auto& [k, e] : entries_) {
    out << to_string(k) << ',' << e.found << ',' << e.extremal << ',' << e.failures << ',' << e.square_sum << ','
        << (e.admissible ? "yes" : "no") << ',' << (e.in_reference ? "yes" : "no") << ',' << reference_note(k) << '\n';
  }
  return out.str();
}

}  // namespace pptatlas
