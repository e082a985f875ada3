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

#include "matkit/harness.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "matkit/analysis.hpp"
#include "matkit/construction.hpp"
#include "matkit/errors.hpp"
#include "matkit/matroid.hpp"

using namespace matkit;

TEST_CASE("suite registry is fixed and complete") {
  std::vector<std::string> names = suite_names();
  CHECK(names.size() == 17);
  // Spot-check a few anchors; order is part of the contract.
  CHECK(names.front() == "pg-density");
  CHECK(std::find(names.begin(), names.end(), "long-line-minor") != names.end());
  CHECK(std::find(names.begin(), names.end(), "kung-bound") != names.end());
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
}

TEST_CASE("unknown suite names and malformed configs are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", 1), UnknownSuite);
  Json bad = Json::object();
  bad["bogus"] = 3;
  CHECK_THROWS_AS(run_suite("pg-density", 1, bad), PreconditionFailed);
  Json wrong_type = Json::object();
  wrong_type["big"] = "yes";
  CHECK_THROWS_AS(run_suite("pg-density", 1, wrong_type), PreconditionFailed);
  Json zero = Json::object();
  zero["instances"] = 0;
  CHECK_THROWS_AS(run_suite("projection-quantization", 1, zero), PreconditionFailed);
  CHECK_THROWS_AS(run_suite("pg-density", 1, Json::array()), PreconditionFailed);
}

TEST_CASE("identical name, seed, and config reproduce the report bytes") {
  Json cfg = Json::object();
  cfg["instances"] = 12;
  SuiteReport a = run_suite("projection-quantization", 41, cfg);
  SuiteReport b = run_suite("projection-quantization", 41, cfg);
  CHECK(deterministic_report(a).dump(2) == deterministic_report(b).dump(2));
  CHECK(a.passed == 12);
  CHECK(a.exit_status() == 0);

  SuiteReport c = run_suite("truncation-spectrum", 7);
  SuiteReport d = run_suite("truncation-spectrum", 7);
  CHECK(deterministic_report(c).dump(2) == deterministic_report(d).dump(2));

  // A different seed draws different placements.
  SuiteReport e = run_suite("projection-quantization", 42, cfg);
  CHECK(deterministic_report(a).dump(2) != deterministic_report(e).dump(2));
}

TEST_CASE("the negative control fails and carries a replayable document") {
  Json cfg = Json::object();
  cfg["negative_control"] = true;
  SuiteReport r = run_suite("pg-density", 5, cfg);
  CHECK(r.failed == 1);
  CHECK(r.exit_status() == 1);
  const InstanceReport& last = r.instances.back();
  CHECK(last.name == "negative-control");
  CHECK(last.status == "FAIL");
  REQUIRE(last.has_doc);
  // The attached document must replay to the true value, exposing the
  // corrupted expectation rather than a broken recipe.
  MatroidHandle m = replay_construction(last.doc);
  CHECK(epsilon(m) == 7);
  Json j = r.to_json();
  CHECK(j["instances"].back().contains("doc"));
}

TEST_CASE("passing instances do not carry documents") {
  SuiteReport r = run_suite("pg-density", 3);
  CHECK(r.failed == 0);
  for (const InstanceReport& inst : r.instances) {
    CHECK(inst.status == "PASS");
    CHECK_FALSE(inst.has_doc);
    CHECK_FALSE(inst.to_json().contains("doc"));
  }
}

TEST_CASE("exit status and counters follow the pass, fail, skip split") {
  SuiteReport r;
  r.suite = "synthetic";
  r.failed = 0;
  r.skipped = 3;
  r.passed = 2;
  CHECK(r.exit_status() == 0);  // skips alone never fail a run
  r.failed = 1;
  CHECK(r.exit_status() == 1);
}

TEST_CASE("text reports align columns and name every instance") {
  SuiteReport r = run_suite("line-matchings", 11);
  std::string text = r.to_text();
  CHECK(text.find("suite line-matchings") != std::string::npos);
  CHECK(text.find("NAME") != std::string::npos);
  CHECK(text.find("STATUS") != std::string::npos);
  for (const InstanceReport& inst : r.instances) {
    CHECK(text.find(inst.name) != std::string::npos);
  }
}

TEST_CASE("wall time is reported but excluded from the deterministic view") {
  SuiteReport r = run_suite("pg-density", 1);
  Json full = r.to_json();
  CHECK(full.contains("wall_ms"));
  Json det = deterministic_report(r);
  CHECK_FALSE(det.contains("wall_ms"));
  CHECK(det["suite"] == "pg-density");
  CHECK(det["seed"] == 1);
}

TEST_CASE("the projection atlas lists one example per observed drop") {
  SearchBudget budget(500'000'000);
  std::vector<AtlasEntry> entries = projection_atlas(2, 1, &budget);
  std::set<long long> ds;
  for (const AtlasEntry& e : entries) ds.insert(e.d);
  CHECK(ds == std::set<long long>{0, 1});  // lines drop q, higher flats drop 0
  for (const AtlasEntry& e : entries) {
    // Every atlas example replays to a projection with the tabulated drop.
    MatroidHandle m = replay_construction(e.doc);
    ElementSet c;
    c.insert(m.size() - 1);
    DensityReport dr = projection_density(m, c, 2, 1);
    CHECK(dr.eps_deleted == e.eps_deleted);
    CHECK(dr.eps_contracted == e.eps_contracted);
    CHECK(dr.d == e.d);
    CHECK(dr.multiple_of_q);
  }
  Json j = atlas_to_json(entries);
  CHECK(j.is_array());
  CHECK(j.size() == entries.size());
  CHECK(j[0].contains("doc"));
}

TEST_CASE("the two-step atlas reaches larger drops") {
  SearchBudget budget(500'000'000);
  std::vector<AtlasEntry> entries = projection_atlas(2, 2, &budget);
  std::set<long long> ds;
  for (const AtlasEntry& e : entries) ds.insert(e.d);
  CHECK(ds.count(0) == 1);
  CHECK(ds.size() >= 3);
  for (const AtlasEntry& e : entries) {
    MatroidHandle m = replay_construction(e.doc);
    ElementSet c;
    c.insert(m.size() - 2);
    c.insert(m.size() - 1);
    DensityReport dr = projection_density(m, c, 2, 2);
    CHECK(dr.d == e.d);
  }
  CHECK_THROWS_AS(projection_atlas(2, 3), UnsupportedSize);
  CHECK_THROWS_AS(projection_atlas(7, 1), UnsupportedSize);
}

TEST_CASE("the growth table measures every host inside the size caps") {
  std::vector<GrowthRow> rows = growth_table(2, 1, 8);
  REQUIRE(rows.size() == 8);
  for (const GrowthRow& r : rows) {
    CHECK(r.threshold < r.class_value);
    if (r.measured) CHECK(r.eps == r.class_value);
  }
  CHECK_FALSE(rows[0].measured);  // rank 1 truncations are degenerate
  for (int n : {2, 3, 4, 5, 6, 7}) CHECK(rows[static_cast<size_t>(n - 1)].measured);
  CHECK_FALSE(rows[7].measured);  // dimension 8 exceeds the geometry cap

  std::vector<GrowthRow> t32 = growth_table(3, 2, 5);
  CHECK(t32[1].measured);
  CHECK(t32[1].eps == 40);
  CHECK(t32[2].measured);
  CHECK(t32[2].eps == 121);
  CHECK_FALSE(t32[3].measured);  // 364 points exceed the geometry cap

  Json j = growth_table_to_json(3, 2, t32);
  CHECK(j["q"] == 3);
  CHECK(j["rows"].size() == 5);
  std::string text = growth_table_to_text(3, 2, t32);
  CHECK(text.find("threshold") != std::string::npos);
  CHECK(text.find("121") != std::string::npos);

  CHECK_THROWS_AS(growth_table(2, 1, 0), UnsupportedSize);
  CHECK_THROWS_AS(growth_table(6, 1, 4), UnsupportedSize);
}

TEST_CASE("config instances rescales the sampling suites") {
  Json cfg = Json::object();
  cfg["instances"] = 8;
  SuiteReport r = run_suite("projection-quantization", 13, cfg);
  CHECK(r.instances.size() == 8);
  CHECK(r.passed + r.failed + r.skipped == 8);
  CHECK(r.config == cfg);
}
