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
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pptatlas/config.hpp"
#include "pptatlas/extremal.hpp"
#include "pptatlas/invariants.hpp"
#include "pptatlas/qstate.hpp"
#include "pptatlas/rank4.hpp"

namespace pptatlas {

struct Provenance {
  /// Constructor or search method, e.g. "descent", "search-ranks/cg", "type2".
  std::string source;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  Tolerances tolerances;
  std::string rng = "mt19937_64";
  std::string version = PPTATLAS_VERSION;
  /// Set for states from the explicit rank-4 constructions.
  std::string hypothesis;
};

struct Classification {
  /// Present when the separability probe was run.
  std::optional<SeparabilityVerdict> separability;
  /// Present for PPT states with profile 4444.
  std::optional<Rank4Type> type;
};

struct StateRecord {
  HermitianOperator state;
  PptProfile profile;
  InvariantFingerprint fingerprint;
  bool extremal = false;
  int face_dimension = 0;
  Classification classification;
  Provenance provenance;
};

struct AnnotateOptions {
  bool run_probe = true;
  int probe_trials = 4;
  std::uint64_t probe_seed = 1;
};

/// Computes profile, fingerprint, extremality, type and (optionally) the
/// separability verdict of rho.
StateRecord annotate(const HermitianOperator& rho, Provenance provenance, const AnnotateOptions& options = {});

std::string to_string(SeparabilityVerdict v);

nlohmann::json to_json(const StateRecord& r);
/// Throws InvalidInput on missing or malformed fields.
StateRecord record_from_json(const nlohmann::json& j);

/// Doubles are written in shortest round-trip form, so reading back gives
/// the same bits.
std::string dump_record(const StateRecord& r);
void write_record(const std::filesystem::path& path, const StateRecord& r);
/// Throws InvalidInput when the file cannot be read or parsed.
StateRecord read_record(const std::filesystem::path& path);

nlohmann::json tolerances_to_json(const Tolerances& t);
Tolerances tolerances_from_json(const nlohmann::json& j);

}  // namespace pptatlas
