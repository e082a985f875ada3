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

#include "matkit/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "matkit/construction.hpp"
#include "matkit/verdict.hpp"

using namespace matkit;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& stdin_bytes = "") {
  std::istringstream in(stdin_bytes);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli_main(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("pg piped into eps reproduces the geometry point count") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "4"});
  REQUIRE(doc.code == 0);
  CliRun eps = run_cli({"eps", "-"}, doc.out);
  CHECK(eps.code == 0);
  CHECK(eps.out == "15\n");
}

TEST_CASE("documents compose through truncate and project") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "3"});
  CliRun trunc = run_cli({"truncate", "-k", "1", "-"}, doc.out);
  REQUIRE(trunc.code == 0);
  CliRun eps = run_cli({"eps", "-"}, trunc.out);
  CHECK(eps.out == "7\n");  // the truncated plane keeps all seven points on a line
  CliRun rank = run_cli({"rank", "-"}, trunc.out);
  CHECK(rank.out == "2\n");

  CliRun doc4 = run_cli({"pg", "-q", "2", "-n", "4"});
  CliRun proj = run_cli({"project", "--flat", "0", "1", "2"}, doc4.out);
  REQUIRE(proj.code == 0);
  CliRun minor = run_cli({"check-line-minor", "-m", "5", "-"}, proj.out);
  CHECK(minor.code == 0);
  CHECK(minor.out.find("minor-found") == 0);
  CliRun minor_json = run_cli({"check-line-minor", "-m", "5", "--format", "json", "-"}, proj.out);
  Json parsed = Json::parse(minor_json.out);
  CHECK(parsed["verdict"] == "minor-found");
}

TEST_CASE("emitted documents are canonical and round-trip") {
  CliRun doc = run_cli({"pg", "-q", "3", "-n", "3"});
  ConstructionDocument d = parse_construction(doc.out);
  CHECK(serialize_construction(d) == doc.out);
}

TEST_CASE("eps, rank, and flats agree on one document") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "4"});
  CliRun projected = run_cli({"project", "--flat", "0", "1", "2"}, doc.out);
  for (const std::string& bytes : {doc.out, projected.out}) {
    CliRun eps = run_cli({"eps", "--format", "json", "-"}, bytes);
    CliRun pts = run_cli({"flats", "-k", "1", "--format", "json", "-"}, bytes);
    Json je = Json::parse(eps.out);
    Json jp = Json::parse(pts.out);
    // Points are exactly the rank-1 flats.
    CHECK(je["eps"].get<long long>() == jp["count"].get<long long>());
    CliRun rank = run_cli({"rank", "--format", "json", "-"}, bytes);
    Json jr = Json::parse(rank.out);
    CliRun top = run_cli({"flats", "-k", jr["rank"].dump(), "--format", "json", "-"}, bytes);
    Json jt = Json::parse(top.out);
    CHECK(jt["count"].get<long long>() == 1);  // the ground set is the unique spanning flat
  }
}

TEST_CASE("rank restricted to a set") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "4"});
  CliRun r = run_cli({"rank", "--set", "0", "1", "2"}, doc.out);
  CHECK(r.out == "2\n");  // those three ids form one line of the geometry
}

TEST_CASE("cap-flats truncates the listing but reports the true count") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "4"});
  CliRun capped = run_cli({"flats", "-k", "2", "--cap-flats", "3", "--format", "json", "-"},
                          doc.out);
  Json j = Json::parse(capped.out);
  CHECK(j["count"].get<int>() == 35);
  CHECK(j["listed"].get<int>() == 3);
  CHECK(j["flats"].size() == 3);
}

TEST_CASE("fullness and weakly-round report on piped documents") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "3"});
  CliRun f = run_cli({"fullness", "-q", "2", "-k", "0", "--format", "json", "-"}, doc.out);
  Json jf = Json::parse(f.out);
  CHECK(jf["fullness"] == "full");
  CHECK(jf["eps"].get<int>() == 7);
  CHECK(jf["threshold"].get<int>() == 7);
  CliRun w = run_cli({"weakly-round", "-"}, doc.out);
  CHECK(w.out.find("bound-holds") == 0);
}

TEST_CASE("critical rejects hosts that are not overfull") {
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "3"});
  CliRun c = run_cli({"critical", "-q", "2", "-k", "1", "-"}, doc.out);
  CHECK(c.code == 1);
  CHECK(c.err.find("error:") == 0);
}

TEST_CASE("verify runs a suite and exposes the exit contract") {
  CliRun ok = run_cli({"verify", "pg-density", "--seed", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("failed 0") != std::string::npos);
  CliRun json = run_cli({"verify", "pg-density", "--seed", "3", "--format", "json"});
  Json j = Json::parse(json.out);
  CHECK(j["suite"] == "pg-density");
  CHECK(j["failed"].get<int>() == 0);
  CHECK(j.contains("wall_ms"));
  CliRun neg = run_cli({"verify", "pg-density", "--negative-control"});
  CHECK(neg.code == 1);
  CliRun bad = run_cli({"verify", "no-such-suite"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("valid names") != std::string::npos);
  CliRun listed = run_cli({"verify", "list"});
  CHECK(listed.code == 0);
  CHECK(listed.out.find("kung-bound\n") != std::string::npos);
}

TEST_CASE("malformed invocations exit 2 with usage text") {
  CliRun none = run_cli({});
  CHECK(none.code == 2);
  CliRun unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CliRun missing = run_cli({"pg", "-q", "2"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("-n") != std::string::npos);
  CliRun badfmt = run_cli({"pg", "-q", "2", "-n", "3", "--format", "xml"});
  CHECK(badfmt.code == 2);
}

TEST_CASE("data errors exit 1 with a structured message") {
  CliRun badq = run_cli({"pg", "-q", "7", "-n", "3"});
  CHECK(badq.code == 1);
  CliRun garbage = run_cli({"eps", "-"}, "not json");
  CHECK(garbage.code == 1);
  CHECK(garbage.err.find("error:") == 0);
  // Projecting on a non-flat fails at the replay step that introduced it.
  CliRun doc = run_cli({"pg", "-q", "2", "-n", "4"});
  CliRun nonflat = run_cli({"project", "--flat", "0", "1"}, doc.out);
  CHECK(nonflat.code == 1);
  CHECK(nonflat.err.find("step") != std::string::npos);
}

TEST_CASE("help exits zero") {
  CliRun help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("atlas and growth-table print both formats") {
  CliRun a = run_cli({"atlas", "-q", "2", "-k", "1", "--format", "json"});
  Json ja = Json::parse(a.out);
  REQUIRE(ja.is_array());
  CHECK(ja.size() == 2);
  CHECK(ja[0]["d"].get<int>() == 0);
  CHECK(ja[1]["d"].get<int>() == 1);
  CliRun at = run_cli({"atlas", "-q", "2", "-k", "1"});
  CHECK(at.out.find("d 1") != std::string::npos);
  CliRun gt = run_cli({"growth-table", "-q", "2", "-k", "1", "-n", "5"});
  CHECK(gt.code == 0);
  CHECK(gt.out.find("threshold") != std::string::npos);
  CliRun gj = run_cli({"growth-table", "-q", "2", "-k", "1", "-n", "5", "--format", "json"});
  Json jg = Json::parse(gj.out);
  CHECK(jg["rows"].size() == 5);
  CHECK(jg["rows"][2]["eps"].get<int>() == 15);
}

TEST_CASE("out redirects the payload to a file") {
  std::string path = "cli_out_test.json";
  CliRun r = run_cli({"pg", "-q", "2", "-n", "3", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  ConstructionDocument d = parse_construction(buf.str());
  CHECK(d.geometry_rank == 3);
  std::remove(path.c_str());
}
