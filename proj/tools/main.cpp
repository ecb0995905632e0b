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

// pptatlas: campaigns, constructions and classification of three-qubit PPT
// states. Exit codes: 0 success, 2 search failure, 3 invalid input, 1 other
// errors.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pptatlas/errors.hpp"

namespace {

using namespace pptatlas;
using namespace pptatlas::tools;

constexpr int kExitSearchFailure = 2;
constexpr int kExitInvalidInput = 3;

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse number '" + item + "'");
    }
  }
  return v;
}

std::vector<RankKey> parse_targets(const std::string& s) {
  std::vector<RankKey> keys;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) keys.push_back(parse_rank_key(item));
  if (keys.empty()) throw InvalidInput("no rank targets given");
  return keys;
}

// Adds the shared flags; env vars mirror them with the PPTATLAS_ prefix.
void add_common(CLI::App* cmd, CommonOptions& o, bool campaign) {
  cmd->add_option("--seed", o.seed, "RNG seed")->envname("PPTATLAS_SEED");
  if (campaign) {
    cmd->add_option("--runs", o.runs, "Number of seeded runs")->envname("PPTATLAS_RUNS")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "Residual evaluations per search")
        ->envname("PPTATLAS_BUDGET")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads")->envname("PPTATLAS_THREADS")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--tol-rank", o.tol.rank_tol, "Relative eigenvalue cut for ranks")->envname("PPTATLAS_TOL_RANK");
  cmd->add_option("--tol-i2", o.tol.i2_zero_tol, "Vanishing threshold for I2/(Tr rho)^2")->envname("PPTATLAS_TOL_I2");
  cmd->add_option("--tol-psd", o.tol.psd_tol, "Smallest eigenvalue accepted as nonnegative")
      ->envname("PPTATLAS_TOL_PSD");
  cmd->add_option("--tol-face", o.tol.face_eig_window, "Eigenvalue window of the face projector")
      ->envname("PPTATLAS_TOL_FACE");
  cmd->add_option("--out", o.out, "Output path")->envname("PPTATLAS_OUT");
}

int run(int argc, char** argv) {
  CLI::App app{"Three-qubit PPT state atlas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PPTATLAS_VERSION);

  CommonOptions extremal_opts;
  extremal_opts.runs = 10;
  auto* extremal = app.add_subcommand("search-extremal", "Descend from random PPT states to extremal ones");
  add_common(extremal, extremal_opts, true);

  CommonOptions ranks_opts;
  std::string ranks_targets, method = "cg";
  bool exact = false;
  auto* ranks = app.add_subcommand("search-ranks", "Search for a PPT state with given ranks");
  add_common(ranks, ranks_opts, true);
  ranks->add_option("--targets", ranks_targets, "Ranks of rho, rho^T1, rho^T2, rho^T3, e.g. 5555")->required();
  ranks->add_option("--method", method, "sq or cg")->check(CLI::IsMember({"sq", "cg"}));
  ranks->add_flag("--exact", exact, "Restart when the ranks fall below the targets");

  CommonOptions construct_opts;
  std::string theta = "0.7853981633974483,0.7853981633974483,0.7853981633974483", t_value = "1";
  auto* construct = app.add_subcommand("construct", "Build a rank-4 state from an explicit family");
  construct->require_subcommand(1);
  auto* upb = construct->add_subcommand("upb", "UPB state with angles theta1,theta2,theta3");
  upb->add_option("--theta", theta, "Comma-separated angles");
  add_common(upb, construct_opts, false);
  auto* type1 = construct->add_subcommand("type1", "Type I state from a seeded real draw");
  add_common(type1, construct_opts, false);
  auto* type2 = construct->add_subcommand("type2", "Type II state with complex parameter t");
  type2->add_option("--t", t_value, "re or re,im");
  add_common(type2, construct_opts, false);

  CommonOptions classify_opts;
  std::string in_path;
  auto* classify = app.add_subcommand("classify", "Annotate a stored state record");
  classify->add_option("--in", in_path, "State record (JSON)")->required();
  add_common(classify, classify_opts, false);

  CommonOptions census_opts;
  census_opts.runs = 2;
  census_opts.budget = 5000;
  std::string census_targets;
  bool reference = false;
  auto* census = app.add_subcommand("census", "Budgeted rank-search census of rank combinations (CSV)");
  add_common(census, census_opts, true);
  census->add_option("--targets", census_targets, "Comma-separated combinations, e.g. 4444,5556");
  census->add_flag("--reference", reference, "Use every combination of the reference census");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  if (*extremal) {
    const SearchExtremalOutput out = cmd_search_extremal(extremal_opts);
    std::cout << out.census.to_csv();
    return out.failures == 0 ? 0 : kExitSearchFailure;
  }
  if (*ranks) {
    const SearchRanksOutput out =
        cmd_search_ranks(parse_rank_key(ranks_targets), search_method_from_string(method), exact, ranks_opts);
    for (const std::string& f : out.failures) std::cerr << "search failed: " << f << "\n";
    if (!out.success()) return kExitSearchFailure;
    if (ranks_opts.out.empty()) std::cout << (ranks_opts.runs == 1 ? dump_record(out.records.front()) : to_jsonl(out.records));
    return 0;
  }
  if (*construct) {
    ConstructSpec spec;
    if (*upb) {
      const std::vector<double> v = parse_list(theta);
      if (v.size() != 3) throw InvalidInput("--theta needs three angles");
      spec.family = Family::Upb;
      spec.theta = {v[0], v[1], v[2]};
    } else if (*type1) {
      spec.family = Family::TypeI;
    } else {
      const std::vector<double> v = parse_list(t_value);
      if (v.empty() || v.size() > 2) throw InvalidInput("--t takes re or re,im");
      spec.family = Family::TypeII;
      spec.t = cplx(v[0], v.size() == 2 ? v[1] : 0.0);
    }
    const StateRecord rec = cmd_construct(spec, construct_opts);
    if (construct_opts.out.empty()) std::cout << dump_record(rec);
    return 0;
  }
  if (*classify) {
    const StateRecord rec = cmd_classify(in_path, classify_opts);
    if (classify_opts.out.empty()) std::cout << dump_record(rec);
    return 0;
  }
  std::vector<RankKey> keys;
  if (reference) {
    keys.assign(reference_combinations().begin(), reference_combinations().end());
  } else {
    keys = parse_targets(census_targets);
  }
  const CensusReport report = cmd_census(keys, census_opts);
  std::cout << report.to_csv();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SearchFailure& e) {
    std::cerr << "pptatlas: " << e.what() << "\n";
    return kExitSearchFailure;
  } catch (const Error& e) {
    // Library errors other than search failures reject the input.
    std::cerr << "pptatlas: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "pptatlas: " << e.what() << "\n";
    return 1;
  }
}
