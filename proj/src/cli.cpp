// Copyright 2026 The Authors.
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
//
// Subcommands compose through construction documents: the commands that
// build matroids print documents, the commands that measure them read
// documents, and "-" wires them together in a pipe.  Exit codes: 0 for
// success, 1 for data or verification errors, 2 for malformed invocations.

#include "matkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matkit/analysis.hpp"
#include "matkit/construction.hpp"
#include "matkit/errors.hpp"
#include "matkit/field.hpp"
#include "matkit/geometry.hpp"
#include "matkit/harness.hpp"
#include "matkit/matroid.hpp"
#include "matkit/verdict.hpp"

namespace matkit {

namespace {

struct GlobalOpts {
  std::string format = "table";
  std::string out_path;
  long long cap_flats = 0;  // 0 disables the cap
};

void emit(const GlobalOpts& g, std::ostream& out, const std::string& text) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path " + g.out_path);
  f << text;
}

std::string read_document_bytes(const std::string& file, std::istream& in) {
  if (file == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file " + file);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

ConstructionDocument load_document(const std::string& file, std::istream& in) {
  return parse_construction(read_document_bytes(file, in));
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// q values map onto the supported prime powers.
std::pair<int, int> field_shape_cli(int q) {
  switch (q) {
    case 2: return {2, 1};
    case 3: return {3, 1};
    case 4: return {2, 2};
    case 5: return {5, 1};
    default:
      throw UnsupportedSize("no supported field of order " + std::to_string(q) +
                            "; expected 2, 3, 4, or 5");
  }
}

std::string verdict_text(const AnalysisVerdict& v) {
  std::ostringstream out;
  out << to_string(v.kind) << "\n";
  if (!v.note.empty()) out << "note " << v.note << "\n";
  for (const MinorWitness& w : v.minors) {
    out << "points " << w.points << "\n";
    out << "contract " << w.contract_flat.to_string() << "\n";
    out << "line " << w.line_flat.to_string() << "\n";
  }
  for (size_t i = 0; i < v.sets.size(); ++i) {
    out << "set " << v.sets[i].to_string() << "\n";
  }
  if (!v.numbers.empty()) {
    out << "numbers";
    for (long long n : v.numbers) out << " " << n;
    out << "\n";
  }
  return out.str();
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"matroid construction, measurement, and verification"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write output to this path instead of stdout");
  app.add_option("--cap-flats", g.cap_flats, "cap the number of flats listed")
      ->check(CLI::PositiveNumber);

  // pg
  auto* pg_cmd = app.add_subcommand("pg", "emit a projective geometry document");
  int pg_q = 0;
  int pg_n = 0;
  pg_cmd->add_option("-q", pg_q, "field order")->required();
  pg_cmd->add_option("-n", pg_n, "rank")->required();

  // truncate
  auto* trunc_cmd = app.add_subcommand("truncate", "append truncation steps to a document");
  int trunc_k = 1;
  std::string trunc_file = "-";
  trunc_cmd->add_option("-k", trunc_k, "number of truncation steps")
      ->check(CLI::PositiveNumber);
  trunc_cmd->add_option("file", trunc_file, "construction document, - for stdin");

  // project
  auto* proj_cmd =
      app.add_subcommand("project", "append a principal extension on a flat plus a contraction");
  std::vector<int> proj_flat;
  std::string proj_file = "-";
  // Greedy lists swallow a trailing positional, so with an explicit FILE
  // the flat goes comma separated or the file comes first.
  proj_cmd->add_option("--flat", proj_flat, "members of the flat to extend on")
      ->required()
      ->expected(-1)
      ->delimiter(',');
  proj_cmd->add_option("file", proj_file, "construction document, - for stdin");

  // eps
  auto* eps_cmd = app.add_subcommand("eps", "count the points of a document's matroid");
  std::string eps_file = "-";
  eps_cmd->add_option("file", eps_file, "construction document, - for stdin");

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "rank of the matroid or of a given set");
  std::string rank_file = "-";
  std::vector<int> rank_set;
  rank_cmd->add_option("file", rank_file, "construction document, - for stdin");
  rank_cmd->add_option("--set", rank_set, "elements to rank")->expected(-1)->delimiter(',');

  // flats
  auto* flats_cmd = app.add_subcommand("flats", "list the flats of one rank");
  std::string flats_file = "-";
  int flats_k = 1;
  flats_cmd->add_option("file", flats_file, "construction document, - for stdin");
  flats_cmd->add_option("-k", flats_k, "flat rank")->required()->check(CLI::NonNegativeNumber);

  // check-line-minor
  auto* line_cmd = app.add_subcommand("check-line-minor", "search contractions for a long line");
  std::string line_file = "-";
  int line_m = 0;
  line_cmd->add_option("-m", line_m, "required line point count")
      ->required()
      ->check(CLI::PositiveNumber);
  line_cmd->add_option("file", line_file, "construction document, - for stdin");

  // fullness
  auto* full_cmd = app.add_subcommand("fullness", "classify density against the class threshold");
  std::string full_file = "-";
  int full_q = 0;
  int full_k = 0;
  full_cmd->add_option("-q", full_q, "field order")->required();
  full_cmd->add_option("-k", full_k, "truncation steps")->required()
      ->check(CLI::NonNegativeNumber);
  full_cmd->add_option("file", full_file, "construction document, - for stdin");

  // weakly-round
  auto* round_cmd = app.add_subcommand("weakly-round", "decide weak roundness");
  std::string round_file = "-";
  round_cmd->add_option("file", round_file, "construction document, - for stdin");

  // critical
  auto* crit_cmd = app.add_subcommand("critical", "list elements whose removal ends overfullness");
  std::string crit_file = "-";
  int crit_q = 0;
  int crit_k = 0;
  crit_cmd->add_option("-q", crit_q, "field order")->required();
  crit_cmd->add_option("-k", crit_k, "truncation steps")->required()
      ->check(CLI::NonNegativeNumber);
  crit_cmd->add_option("file", crit_file, "construction document, - for stdin");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run one named verification suite");
  std::string verify_suite;
  uint64_t verify_seed = 17;
  bool verify_big = false;
  bool verify_negative = false;
  int verify_instances = 0;
  verify_cmd->add_option("suite", verify_suite, "suite name, or 'list' to enumerate")->required();
  verify_cmd->add_option("--seed", verify_seed, "deterministic seed");
  verify_cmd->add_flag("--big", verify_big, "lift the default sampling caps");
  verify_cmd->add_flag("--negative-control", verify_negative,
                       "append an instance with a corrupted expectation");
  verify_cmd->add_option("--instances", verify_instances, "override the instance count")
      ->check(CLI::PositiveNumber);

  // atlas
  auto* atlas_cmd = app.add_subcommand("atlas", "catalog projection drops with examples");
  int atlas_q = 0;
  int atlas_k = 0;
  atlas_cmd->add_option("-q", atlas_q, "field order")->required();
  atlas_cmd->add_option("-k", atlas_k, "projection steps")->required()
      ->check(CLI::NonNegativeNumber);

  // growth-table
  auto* growth_cmd = app.add_subcommand("growth-table", "tabulate the class growth formula");
  int growth_q = 0;
  int growth_k = 0;
  int growth_n = 0;
  growth_cmd->add_option("-q", growth_q, "field order")->required();
  growth_cmd->add_option("-k", growth_k, "truncation steps")->required()
      ->check(CLI::NonNegativeNumber);
  growth_cmd->add_option("-n", growth_n, "largest rank to tabulate")
      ->required()
      ->check(CLI::PositiveNumber);

  // Global flags stay valid after a subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pg_cmd->parsed()) {
      auto [p, pe] = field_shape_cli(pg_q);
      if (pg_n < 2 || pg_n > 8) {
        throw UnsupportedSize("rank must lie in 2..8, got " + std::to_string(pg_n));
      }
      ConstructionDocument d = pg_document(p, pe, pg_n);
      replay_construction(d);  // reject size violations before printing
      emit(g, out, serialize_construction(d));
    } else if (trunc_cmd->parsed()) {
      ConstructionDocument d = load_document(trunc_file, in);
      for (int i = 0; i < trunc_k; ++i) add_truncate(d);
      replay_construction(d);
      emit(g, out, serialize_construction(d));
    } else if (proj_cmd->parsed()) {
      ConstructionDocument d = load_document(proj_file, in);
      MatroidHandle m = replay_construction(d);
      int added = m.universe();
      add_extend(d, ElementSet::from_vector(proj_flat));
      add_contract(d, ElementSet::from_vector({added}));
      replay_construction(d);  // a non-flat argument fails at its own step
      emit(g, out, serialize_construction(d));
    } else if (eps_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(eps_file, in));
      long long e = epsilon(m);
      if (g.format == "json") {
        Json j = Json::object();
        j["eps"] = e;
        emit(g, out, json_text(j));
      } else {
        emit(g, out, std::to_string(e) + "\n");
      }
    } else if (rank_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(rank_file, in));
      int r = rank_set.empty() ? m.rank() : m.rank(ElementSet::from_vector(rank_set));
      if (g.format == "json") {
        Json j = Json::object();
        j["rank"] = r;
        if (!rank_set.empty()) j["set"] = rank_set;
        emit(g, out, json_text(j));
      } else {
        emit(g, out, std::to_string(r) + "\n");
      }
    } else if (flats_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(flats_file, in));
      SearchBudget budget(500'000'000);
      std::vector<FlatRef> flats = flats_of_rank(m, flats_k, &budget);
      size_t listed = flats.size();
      if (g.cap_flats > 0 && static_cast<long long>(listed) > g.cap_flats) {
        listed = static_cast<size_t>(g.cap_flats);
      }
      if (g.format == "json") {
        Json j = Json::object();
        j["k"] = flats_k;
        j["count"] = flats.size();
        j["listed"] = listed;
        Json arr = Json::array();
        for (size_t i = 0; i < listed; ++i) arr.push_back(set_to_json(flats[i].members));
        j["flats"] = arr;
        emit(g, out, json_text(j));
      } else {
        std::ostringstream text;
        text << "count " << flats.size() << "\n";
        for (size_t i = 0; i < listed; ++i) text << flats[i].members.to_string() << "\n";
        if (listed < flats.size()) {
          text << "capped at " << listed << " of " << flats.size() << "\n";
        }
        emit(g, out, text.str());
      }
    } else if (line_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(line_file, in));
      SearchBudget budget(500'000'000);
      AnalysisVerdict v = line_minor(m, line_m, false, &budget);
      emit(g, out, g.format == "json" ? json_text(v.to_json()) : verdict_text(v));
    } else if (full_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(full_file, in));
      field_shape_cli(full_q);
      FullnessParams p{full_q, full_k};
      Fullness f = fullness(m, p);
      GrowthRateOracle oracle{full_q, full_k};
      long long e = epsilon(m);
      long long t = oracle.threshold(m.rank());
      if (g.format == "json") {
        Json j = Json::object();
        j["fullness"] = to_string(f);
        j["eps"] = e;
        j["threshold"] = t;
        emit(g, out, json_text(j));
      } else {
        emit(g, out, std::string(to_string(f)) + "\neps " + std::to_string(e) + "\nthreshold " +
                         std::to_string(t) + "\n");
      }
    } else if (round_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(round_file, in));
      SearchBudget budget(500'000'000);
      AnalysisVerdict v = weakly_round(m, &budget);
      emit(g, out, g.format == "json" ? json_text(v.to_json()) : verdict_text(v));
    } else if (crit_cmd->parsed()) {
      MatroidHandle m = replay_construction(load_document(crit_file, in));
      field_shape_cli(crit_q);
      FullnessParams p{crit_q, crit_k};
      SearchBudget budget(500'000'000);
      ElementSet crit = critical_elements(m, p, &budget);
      if (g.format == "json") {
        Json j = Json::object();
        j["critical"] = set_to_json(crit);
        j["count"] = crit.size();
        emit(g, out, json_text(j));
      } else {
        emit(g, out, crit.to_string() + "\ncount " + std::to_string(crit.size()) + "\n");
      }
    } else if (verify_cmd->parsed()) {
      if (verify_suite == "list") {
        std::ostringstream text;
        if (g.format == "json") {
          Json j = Json::array();
          for (const std::string& n : suite_names()) j.push_back(n);
          text << json_text(j);
        } else {
          for (const std::string& n : suite_names()) text << n << "\n";
        }
        emit(g, out, text.str());
        return 0;
      }
      Json config = Json::object();
      if (verify_big) config["big"] = true;
      if (verify_negative) config["negative_control"] = true;
      if (verify_instances > 0) config["instances"] = verify_instances;
      SuiteReport rep;
      try {
        rep = run_suite(verify_suite, verify_seed, config);
      } catch (const UnknownSuite& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
      emit(g, out, g.format == "json" ? json_text(rep.to_json()) : rep.to_text());
      return rep.exit_status();
    } else if (atlas_cmd->parsed()) {
      field_shape_cli(atlas_q);
      SearchBudget budget(500'000'000);
      std::vector<AtlasEntry> entries = projection_atlas(atlas_q, atlas_k, &budget);
      if (g.format == "json") {
        emit(g, out, json_text(atlas_to_json(entries)));
      } else {
        std::ostringstream text;
        text << "atlas q " << atlas_q << " k " << atlas_k << "\n";
        for (const AtlasEntry& e : entries) {
          text << "d " << e.d << "  eps_deleted " << e.eps_deleted << "  eps_contracted "
               << e.eps_contracted << "\n";
        }
        emit(g, out, text.str());
      }
    } else if (growth_cmd->parsed()) {
      field_shape_cli(growth_q);
      std::vector<GrowthRow> rows = growth_table(growth_q, growth_k, growth_n);
      if (g.format == "json") {
        emit(g, out, json_text(growth_table_to_json(growth_q, growth_k, rows)));
      } else {
        emit(g, out, growth_table_to_text(growth_q, growth_k, rows));
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace matkit
