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
// Named verification suites over the geometry and analysis layers, plus
// the projection atlas and the growth table.  Every suite is driven by a
// seed and a small config object; a suite run with the same name, seed,
// and config always produces the same report up to wall-clock time.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matkit/construction.hpp"
#include "matkit/matroid.hpp"
#include "matkit/verdict.hpp"

namespace matkit {

// One member of the shared instance pool: a name, the recipe that rebuilds
// the matroid, and the matroid itself.
struct CorpusItem {
  std::string name;
  ConstructionDocument doc;
  MatroidHandle m;
};

// The deterministic pool the corpus-driven suites draw from: fixed small
// families (free matroids, uniform lines, geometries, truncations,
// sections, loops, parallel pairs) followed by seeded random matrices over
// GF(2), GF(3), GF(4), and GF(5).  The same seed always yields the same
// pool, item for item.
std::vector<CorpusItem> standard_corpus(uint64_t seed);

// Outcome of one checked instance.  Instances that fail or are skipped
// carry the construction document that rebuilds their matroid, so any
// reported failure can be replayed in isolation.
struct InstanceReport {
  std::string name;
  std::string status;  // "PASS", "FAIL", or "SKIP"
  std::string note;
  std::vector<long long> numbers;
  bool has_doc = false;
  ConstructionDocument doc;

  Json to_json() const;
};

// Aggregate result of one suite run.
struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  Json config = Json::object();
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  long long wall_ms = 0;
  std::vector<InstanceReport> instances;

  Json to_json() const;
  std::string to_text() const;  // aligned fixed-width listing
  // 0 when nothing failed (skips allowed), 1 otherwise.
  int exit_status() const;
};

// to_json with the wall-clock field erased.  Two runs of the same suite
// with the same seed and config agree byte for byte on this value.
Json deterministic_report(const SuiteReport& r);

// All suite names in reporting order.
std::vector<std::string> suite_names();

// Runs one suite.  Throws UnknownSuite for a name outside suite_names().
// Recognized config keys, all optional:
//   "instances" (int >= 1): target instance count for sampled suites
//   "big" (bool): lift the default size caps of the heavy suites
//   "negative_control" (bool): append one deliberately corrupted
//       expectation, which must show up as a FAIL carrying its recipe
// Unknown keys or wrongly typed values raise PreconditionFailed.
SuiteReport run_suite(const std::string& name, uint64_t seed,
                      const Json& config = Json::object());

// One placement found by the atlas scan: a replayable recipe together with
// the measured point-count drop of the projection it encodes.
struct AtlasEntry {
  int q = 0;
  int k = 0;
  ConstructionDocument doc;
  long long eps_deleted = 0;
  long long eps_contracted = 0;
  long long d = 0;  // (eps_deleted - eps_contracted) / q

  Json to_json() const;
};

// Scans placements of rank-k added sets on small rank-3 and rank-4
// geometries over GF(q) and keeps the first recipe achieving each drop
// value d, sorted by d.  k = 1 walks every flat of the scanned bases;
// k = 2 samples seeded flat pairs; k = 0 reports the trivial entry.  The
// scan makes no completeness claim about the set of achievable d values.
std::vector<AtlasEntry> projection_atlas(int q, int k, SearchBudget* budget = nullptr,
                                         uint64_t seed = 17);

Json atlas_to_json(const std::vector<AtlasEntry>& entries);

// One row of the growth table at rank n: the growth value of the class
// generated by the k-fold truncations, the fullness threshold below it,
// and the measured point count of the truncation realizing the value.
// Rows whose host geometry is out of range report measured = false.
struct GrowthRow {
  int n = 0;
  long long class_value = 0;
  long long threshold = 0;
  bool measured = false;
  long long eps = 0;
};

std::vector<GrowthRow> growth_table(int q, int k, int n_max);
Json growth_table_to_json(int q, int k, const std::vector<GrowthRow>& rows);
std::string growth_table_to_text(int q, int k, const std::vector<GrowthRow>& rows);

}  // namespace matkit
