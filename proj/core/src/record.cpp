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

#include "pptatlas/record.hpp"

#include <fstream>
#include <sstream>

#include "pptatlas/errors.hpp"

namespace pptatlas {

using nlohmann::json;

std::string to_string(SeparabilityVerdict v) {
  return v == SeparabilityVerdict::SeparableEvidence ? "separable_evidence" : "entangled_evidence";
}

namespace {

SeparabilityVerdict verdict_from_string(const std::string& s) {
  if (s == "separable_evidence") return SeparabilityVerdict::SeparableEvidence;
  if (s == "entangled_evidence") return SeparabilityVerdict::EntangledEvidence;
  throw InvalidInput("unknown separability verdict '" + s + "'");
}

Rank4Type type_from_string(const std::string& s) {
  if (s == "TypeI") return Rank4Type::TypeI;
  if (s == "TypeII") return Rank4Type::TypeII;
  throw InvalidInput("unknown rank-4 type '" + s + "'");
}

template <typename T, std::size_t N>
json array_json(const std::array<T, N>& a) {
  return json(std::vector<T>(a.begin(), a.end()));
}

template <typename T, std::size_t N>
std::array<T, N> array_from(const json& j) {
  if (!j.is_array() || j.size() != N) throw InvalidInput("expected an array of " + std::to_string(N));
  std::array<T, N> a{};
  for (std::size_t i = 0; i < N; ++i) a[i] = j[i].get<T>();
  return a;
}

json matrix_json(const Mat8& m) {
  json rows = json::array();
  for (int i = 0; i < 8; ++i) {
    json row = json::array();
    for (int k = 0; k < 8; ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

Mat8 matrix_from(const json& j) {
  if (!j.is_array() || j.size() != 8) throw InvalidInput("matrix must have 8 rows");
  Mat8 m;
  for (int i = 0; i < 8; ++i) {
    if (!j[i].is_array() || j[i].size() != 8) throw InvalidInput("matrix rows must have 8 entries");
    for (int k = 0; k < 8; ++k) {
      const json& e = j[i][k];
      if (!e.is_array() || e.size() != 2) throw InvalidInput("matrix entries are [re, im] pairs");
      m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

}  // namespace

json tolerances_to_json(const Tolerances& t) {
  return {{"rank_tol", t.rank_tol},
          {"i2_zero_tol", t.i2_zero_tol},
          {"psd_tol", t.psd_tol},
          {"face_eig_window", t.face_eig_window}};
}

Tolerances tolerances_from_json(const json& j) {
  Tolerances t;
  t.rank_tol = j.at("rank_tol").get<double>();
  t.i2_zero_tol = j.at("i2_zero_tol").get<double>();
  t.psd_tol = j.at("psd_tol").get<double>();
  t.face_eig_window = j.at("face_eig_window").get<double>();
  return t;
}

StateRecord annotate(const HermitianOperator& rho, Provenance provenance, const AnnotateOptions& options) {
  const Tolerances& tol = provenance.tolerances;
  StateRecord r;
  r.state = rho;
  r.profile = ppt_profile(rho, tol);
  r.fingerprint = fingerprint(rho);
  if (r.profile.is_ppt) {
    const ExtremalityReport e = is_extremal(rho, tol);
    r.extremal = e.extremal;
    r.face_dimension = e.face_dimension;
    if (r.profile.all_ranks(4)) r.classification.type = classify_type(rho, tol);
    if (options.run_probe) {
      Rng rng(options.probe_seed);
      r.classification.separability = separability_probe(rho, rng, options.probe_trials, tol).verdict;
    }
  }
  r.provenance = std::move(provenance);
  return r;
}

json to_json(const StateRecord& r) {
  json j;
  j["matrix"] = matrix_json(r.state.matrix());
  j["profile"] = {{"ranks", array_json(r.profile.ranks)},
                  {"margins", array_json(r.profile.margins)},
                  {"min_eigenvalues", array_json(r.profile.min_eigenvalues)},
                  {"tolerance", r.profile.tolerance},
                  {"is_ppt", r.profile.is_ppt},
                  {"square_sum", r.profile.square_sum()}};
  const InvariantFingerprint& f = r.fingerprint;
  j["fingerprint"] = {{"i2", f.i2},
                      {"quartics", array_json(f.quartics)},
                      {"normalized_quartics", array_json(f.normalized_quartics)},
                      {"normalized_i2", f.normalized_i2},
                      {"degenerate", f.degenerate}};
  j["extremal"] = r.extremal;
  j["face_dimension"] = r.face_dimension;
  json c = json::object();
  c["separability"] = r.classification.separability ? json(to_string(*r.classification.separability)) : json();
  c["type"] = r.classification.type ? json(to_string(*r.classification.type)) : json();
  j["classification"] = c;
  const Provenance& p = r.provenance;
  json pj = {{"source", p.source},         {"parameters", p.parameters}, {"tolerances", tolerances_to_json(p.tolerances)},
             {"rng", p.rng},               {"version", p.version}};
  pj["seed"] = p.seed ? json(*p.seed) : json();
  if (!p.hypothesis.empty()) pj["hypothesis"] = p.hypothesis;
  j["provenance"] = pj;
  return j;
}

StateRecord record_from_json(const json& j) {
  try {
    StateRecord r;
    r.state = HermitianOperator(matrix_from(j.at("matrix")));
    const json& p = j.at("profile");
    r.profile.ranks = array_from<int, 4>(p.at("ranks"));
    r.profile.margins = array_from<double, 4>(p.at("margins"));
    r.profile.min_eigenvalues = array_from<double, 4>(p.at("min_eigenvalues"));
    r.profile.tolerance = p.at("tolerance").get<double>();
    r.profile.is_ppt = p.at("is_ppt").get<bool>();
    const json& f = j.at("fingerprint");
    r.fingerprint.i2 = f.at("i2").get<double>();
    r.fingerprint.quartics = array_from<double, 4>(f.at("quartics"));
    r.fingerprint.normalized_quartics = array_from<double, 4>(f.at("normalized_quartics"));
    r.fingerprint.normalized_i2 = f.at("normalized_i2").get<double>();
    r.fingerprint.degenerate = f.at("degenerate").get<bool>();
    r.extremal = j.at("extremal").get<bool>();
    r.face_dimension = j.at("face_dimension").get<int>();
    const json& c = j.at("classification");
    if (!c.at("separability").is_null())
      r.classification.separability = verdict_from_string(c.at("separability").get<std::string>());
    if (!c.at("type").is_null()) r.classification.type = type_from_string(c.at("type").get<std::string>());
    const json& pv = j.at("provenance");
    r.provenance.source = pv.at("source").get<std::string>();
    r.provenance.parameters = pv.at("parameters");
    if (!pv.at("seed").is_null()) r.provenance.seed = pv.at("seed").get<std::uint64_t>();
    r.provenance.tolerances = tolerances_from_json(pv.at("tolerances"));
    r.provenance.rng = pv.at("rng").get<std::string>();
    r.provenance.version = pv.at("version").get<std::string>();
    r.provenance.hypothesis = pv.value("hypothesis", "");
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed state record: ") + e.what());
  }
}

std::string dump_record(const StateRecord& r) { return to_json(r).dump(2) + "\n"; }

void write_record(const std::filesystem::path& path, const StateRecord& r) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << dump_record(r);
  if (!out) throw Error("failed writing " + path.string());
}

StateRecord read_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return record_from_json(j);
}

}  // namespace pptatlas
