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

#include "commands.hpp"

#include <fstream>

#include "pptatlas/errors.hpp"
#include "pptatlas/prodvec.hpp"
#include "pptatlas/rank4.hpp"

namespace pptatlas::tools {

namespace {

constexpr const char* kHypothesis = "reproduces-generic-family";

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

Provenance provenance(const std::string& source, const CommonOptions& options) {
  Provenance p;
  p.source = source;
  p.tolerances = options.tol;
  return p;
}

}  // namespace

std::string to_jsonl(const std::vector<StateRecord>& records) {
  std::string s;
  for (const StateRecord& r : records) s += to_json(r).dump() + "\n";
  return s;
}

SearchExtremalOutput cmd_search_extremal(const CommonOptions& options) {
  const auto runs = extremal_campaign(options.seed, options.runs, options.threads, {}, options.tol);
  SearchExtremalOutput out;
  for (const DescentRun& r : runs) {
    if (!r.ok) {
      ++out.failures;
      continue;
    }
    Provenance p = provenance("descent", options);
    p.seed = r.seed;
    p.parameters = {{"campaign_seed", options.seed}, {"run", r.index}, {"face_dimensions", r.result.face_dimensions}};
    AnnotateOptions a;
    a.probe_seed = r.seed;
    out.records.push_back(annotate(r.result.state, std::move(p), a));
    out.census.add(out.records.back().profile, out.records.back().extremal);
  }
  if (!options.out.empty()) {
    write_text(options.out / "records.jsonl", to_jsonl(out.records));
    write_text(options.out / "census.csv", out.census.to_csv());
  }
  return out;
}

SearchRanksOutput cmd_search_ranks(const RankKey& targets, SearchMethod method, bool exact,
                                   const CommonOptions& options) {
  SearchOptions so;
  so.method = method;
  so.budget = options.budget;
  so.require_exact_profile = exact;
  const auto runs = rank_campaign({targets}, options.seed, options.runs, options.threads, so, options.tol);
  SearchRanksOutput out;
  for (const RankRun& r : runs) {
    if (!r.ok) {
      out.failures.push_back("run " + std::to_string(r.index) + ": " + r.error);
      continue;
    }
    Provenance p = provenance("search-ranks/" + to_string(method), options);
    p.seed = r.seed;
    p.parameters = {{"targets", to_string(targets)},
                    {"campaign_seed", options.seed},
                    {"run", r.index},
                    {"budget", options.budget},
                    {"evaluations", r.result.evaluations},
                    {"restarts", r.result.restarts},
                    {"objective", r.result.objective},
                    {"matches_targets", r.result.matches_targets}};
    AnnotateOptions a;
    a.probe_seed = r.seed;
    out.records.push_back(annotate(r.result.state, std::move(p), a));
  }
  if (!options.out.empty() && out.success())
    write_text(options.out, options.runs == 1 ? dump_record(out.records.front()) : to_jsonl(out.records));
  return out;
}

StateRecord cmd_construct(const ConstructSpec& spec, const CommonOptions& options) {
  StateRecord rec;
  switch (spec.family) {
    case Family::Upb: {
      Provenance p = provenance("upb", options);
      p.parameters = {{"theta", spec.theta}};
      rec = annotate(upb_state(upb_standard(spec.theta[0], spec.theta[1], spec.theta[2])), std::move(p));
      break;
    }
    case Family::TypeI: {
      Rng rng(options.seed);
      const TypeIState s = construct_type1(rng);
      Provenance p = provenance("type1", options);
      p.seed = options.seed;
      p.hypothesis = kHypothesis;
      p.parameters = {{"t1", s.params.t1},
                      {"t2", {s.params.t2.real(), s.params.t2.imag()}},
                      {"t3", {s.params.t3.real(), s.params.t3.imag()}},
                      {"u1_flipped", s.params.u1_flipped},
                      {"u2_flipped", s.params.u2_flipped}};
      rec = annotate(s.state, std::move(p));
      break;
    }
    case Family::TypeII: {
      const TypeIIState s = construct_type2(spec.t);
      Provenance p = provenance("type2", options);
      p.hypothesis = kHypothesis;
      p.parameters = {{"t", {spec.t.real(), spec.t.imag()}},
                      {"lambda", {s.params.lambda(0), s.params.lambda(1), s.params.lambda(2), s.params.lambda(3)}},
                      {"a", s.params.a}};
      rec = annotate(s.state, std::move(p));
      break;
    }
  }
  if (!options.out.empty()) write_text(options.out, dump_record(rec));
  return rec;
}

StateRecord cmd_classify(const std::filesystem::path& in, const CommonOptions& options) {
  const StateRecord stored = read_record(in);
  Provenance p = stored.provenance;
  p.tolerances = options.tol;
  StateRecord rec = annotate(stored.state, std::move(p));
  if (!options.out.empty()) write_text(options.out, dump_record(rec));
  return rec;
}

CensusReport cmd_census(const std::vector<RankKey>& targets, const CommonOptions& options) {
  SearchOptions so;
  so.budget = options.budget;
  so.require_exact_profile = true;
  const CensusReport c = census_of(rank_campaign(targets, options.seed, options.runs, options.threads, so, options.tol));
  if (!options.out.empty()) write_text(options.out, c.to_csv());
  return c;
}

}  // namespace pptatlas::tools
