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

#include <doctest.h>

#include <string>
#include <vector>

#include "matkit/construction.hpp"
#include "matkit/errors.hpp"
#include "matkit/geometry.hpp"
#include "matkit/matroid.hpp"
#include "oracles.hpp"

using namespace matkit;
using testing::all_subsets;

namespace {

// Path reported for a rejected document, "<accepted>" when parsing passes.
std::string rejection_path(const std::string& text) {
  try {
    parse_construction(text);
  } catch (const ParseError& e) {
    return e.path;
  }
  return "<accepted>";
}

int failing_step(const ConstructionDocument& d) {
  try {
    replay_construction(d);
  } catch (const ReplayError& e) {
    return e.step;
  }
  return -1000;
}

// Rank-2 five point matroid over GF(4), given as element indices.
ConstructionDocument u25_document() {
  Field f4 = field_make(2, 2);
  return matrix_document(f4, 2, 5, {1, 0, 1, 1, 1, 0, 1, 1, 2, 3});
}

}  // namespace

TEST_CASE("builders freeze the canonical serialization") {
  ConstructionDocument d = pg_document(2, 1, 3);
  const std::string expected = R"({
  "version": 1,
  "field": {
    "p": 2,
    "e": 1,
    "modulus": [
      0,
      1
    ]
  },
  "base": {
    "pg": {
      "n": 3
    }
  },
  "ops": []
})"
                               "\n";
  CHECK(serialize_construction(d) == expected);

  // The canonical text parses back to the same document and to the same
  // bytes, so serialize . parse is the identity on canonical input.
  CHECK(parse_construction(expected) == d);
  CHECK(serialize_construction(parse_construction(expected)) == expected);

  ConstructionDocument m = u25_document();
  CHECK(m.p == 2);
  CHECK(m.e == 2);
  CHECK(m.modulus == std::vector<int>{1, 1, 1});
  REQUIRE(m.entries.size() == 10);
  CHECK(m.entries[0] == std::vector<int>{1, 0});
  CHECK(m.entries[1] == std::vector<int>{0, 0});
  CHECK(m.entries[8] == std::vector<int>{0, 1});  // index 2 is x
  CHECK(m.entries[9] == std::vector<int>{1, 1});  // index 3 is x + 1

  CHECK_THROWS_AS(pg_document(2, 1, 0), PreconditionFailed);
  CHECK_THROWS_AS(pg_document(6, 1, 3), CompositeBase);
  CHECK_THROWS_AS(matrix_document(field_make(2, 1), 2, 2, {0, 1, 1}),
                  PreconditionFailed);
  CHECK_THROWS_AS(matrix_document(field_make(2, 1), 1, 2, {0, 2}),
                  PreconditionFailed);
}

TEST_CASE("documents round-trip through JSON and canonical text") {
  ConstructionDocument d = pg_document(2, 1, 4);
  add_extend(d, ElementSet{0, 1, 2});
  add_truncate(d);
  add_delete(d, ElementSet{3, 4});
  add_contract(d, ElementSet{15});

  CHECK(construction_from_json(construction_to_json(d)) == d);
  CHECK(parse_construction(serialize_construction(d)) == d);

  ConstructionDocument m = u25_document();
  add_extend(m, ElementSet{0, 1, 2, 3, 4});
  CHECK(construction_from_json(construction_to_json(m)) == m);
  CHECK(parse_construction(serialize_construction(m)) == m);

  // Unsorted input sets are accepted and canonicalized on output.
  const std::string scrambled = R"({
    "version": 1,
    "field": {"p": 2, "e": 1, "modulus": [0, 1]},
    "base": {"pg": {"n": 4}},
    "ops": [{"extend": {"flat": [2, 0, 1]}}]
  })";
  ConstructionDocument s = parse_construction(scrambled);
  REQUIRE(s.ops.size() == 1);
  CHECK(s.ops[0].elements == ElementSet{0, 1, 2});
  CHECK(serialize_construction(s).find("[\n          0,\n          1,\n          2\n        ]") != std::string::npos);
}

TEST_CASE("geometry documents replay to the stated point counts") {
  // Rank 3 over GF(2): seven points, seven element identifiers.
  MatroidHandle fano = replay_construction(pg_document(2, 1, 3));
  CHECK(fano.rank() == 3);
  CHECK(fano.size() == 7);
  CHECK(epsilon(fano) == 7);

  MatroidHandle pg32 = replay_construction(pg_document(2, 1, 4));
  CHECK(pg32.rank() == 4);
  CHECK(epsilon(pg32) == 15);

  ConstructionDocument t = pg_document(2, 1, 4);
  add_truncate(t);
  MatroidHandle tr = replay_construction(t);
  CHECK(tr.rank() == 3);
  CHECK(epsilon(tr) == 15);

  ConstructionDocument del = pg_document(2, 1, 4);
  add_delete(del, ElementSet{0, 1});
  CHECK(replay_construction(del).size() == 13);

  // A free point on a line, then contracted: the line collapses to one
  // point of the quotient and every other point survives.
  ProjectiveGeometry g = pg(3, field_make(2, 1));
  ElementSet line = closure(g.handle, ElementSet{0, 1}).members;
  REQUIRE(line.size() == 3);
  ConstructionDocument proj = pg_document(2, 1, 4);
  add_extend(proj, line);
  add_contract(proj, ElementSet{15});  // the extension takes identifier 15
  MatroidHandle q = replay_construction(proj);
  CHECK(q.rank() == 3);
  CHECK(q.size() == 15);
  CHECK(epsilon(q) == 13);

  // Same shape one rank down: the quotient is a five point line.
  ProjectiveGeometry g2 = pg(2, field_make(2, 1));
  ElementSet line2 = closure(g2.handle, ElementSet{0, 1}).members;
  ConstructionDocument proj2 = pg_document(2, 1, 3);
  add_extend(proj2, line2);
  add_contract(proj2, ElementSet{7});
  MatroidHandle q2 = replay_construction(proj2);
  CHECK(q2.rank() == 2);
  CHECK(epsilon(q2) == 5);
}

TEST_CASE("matrix documents replay to the same rank function") {
  ConstructionDocument d = u25_document();
  MatroidHandle m = replay_construction(d);
  CHECK(m.rank() == 2);
  CHECK(m.size() == 5);
  CHECK(epsilon(m) == 5);

  MatroidHandle direct = MatroidHandle::from_matrix(
      field_make(2, 2), 2, 5, {1, 0, 1, 1, 1, 0, 1, 1, 2, 3});
  for (const ElementSet& s : all_subsets(ElementSet::full_range(5)))
    CHECK(m.rank(s) == direct.rank(s));
}

TEST_CASE("parse rejects unknown fields with the offending path") {
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}}, "ops": [], "extra": 5})") == "/extra");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1], "q": 2},
      "base": {"pg": {"n": 3}}, "ops": []})") == "/field/q");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}},
      "ops": [{"truncate": {}}, {"extend": {"flat": [0], "junk": 1}}]})") ==
        "/ops/1/extend/junk");
}

TEST_CASE("parse rejects shape and numeric violations") {
  // Version must be the integer 1.
  CHECK(rejection_path(R"({"version": 2,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}}, "ops": []})") == "/version");
  CHECK(rejection_path(R"({"version": 1.0,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}}, "ops": []})") == "/version");

  // Required fields cannot be omitted.
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]}, "ops": []})") == "/");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1}, "base": {"pg": {"n": 3}}, "ops": []})") ==
        "/field");

  // The field record must name the canonical modulus exactly.
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 2, "modulus": [1, 0, 1]},
      "base": {"pg": {"n": 2}}, "ops": []})") == "/field/modulus");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1, 1]},
      "base": {"pg": {"n": 3}}, "ops": []})") == "/field/modulus");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 4, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}}, "ops": []})") == "/field");

  // Exactly one base.
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {}, "ops": []})") == "/base");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3},
               "matrix": {"rows": 1, "cols": 0, "entries": []}},
      "ops": []})") == "/base");

  // Matrix shape and digits.
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"matrix": {"rows": 1, "cols": 2, "entries": [[0]]}},
      "ops": []})") == "/base/matrix/entries");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"matrix": {"rows": 1, "cols": 2, "entries": [[0], [2]]}},
      "ops": []})") == "/base/matrix/entries/1/0");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 2, "modulus": [1, 1, 1]},
      "base": {"matrix": {"rows": 1, "cols": 1, "entries": [[1]]}},
      "ops": []})") == "/base/matrix/entries/0");

  // Operations: single key, known shape, sane identifiers.
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}},
      "ops": [{"extend": {"flat": [0]}, "truncate": {}}]})") == "/ops/0");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}}, "ops": [{}]})") == "/ops/0");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}},
      "ops": [{"extend": {"flat": [0, 1, 0]}}]})") == "/ops/0/extend/flat/2");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}},
      "ops": [{"delete": {"set": [-1]}}]})") == "/ops/0/delete/set/0");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}},
      "ops": [{"contract": {"set": [5000]}}]})") == "/ops/0/contract/set/0");
  CHECK(rejection_path(R"({"version": 1,
      "field": {"p": 2, "e": 1, "modulus": [0, 1]},
      "base": {"pg": {"n": 3}}, "ops": {}})") == "/ops");
}

TEST_CASE("syntax errors carry the source line") {
  try {
    parse_construction("{\n  \"version\": 1,\n  oops\n}");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path == "/");
    CHECK(e.line == 3);
  }
  // Validation errors on well-formed text report no line.
  try {
    parse_construction(R"({"version": 2,
        "field": {"p": 2, "e": 1, "modulus": [0, 1]},
        "base": {"pg": {"n": 3}}, "ops": []})");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 0);
  }
}

TEST_CASE("replay failures name the failing step") {
  // Two points of a geometry never form a flat; the extension must refuse.
  ConstructionDocument bad = pg_document(2, 1, 3);
  add_extend(bad, ElementSet{0, 1});
  CHECK(failing_step(bad) == 0);

  ConstructionDocument late = pg_document(2, 1, 3);
  add_truncate(late);
  add_delete(late, ElementSet{99});
  CHECK(failing_step(late) == 1);

  // Base failures are reported as step -1: an oversized geometry, a field
  // the geometry cap excludes, a non-canonical modulus, a bad digit.
  CHECK(failing_step(pg_document(3, 1, 12)) == -1);
  CHECK(failing_step(pg_document(3, 2, 2)) == -1);
  ConstructionDocument wrong = pg_document(2, 1, 3);
  wrong.modulus = {1, 1};
  CHECK(failing_step(wrong) == -1);
  ConstructionDocument digit = u25_document();
  digit.entries[0] = {7, 0};
  CHECK(failing_step(digit) == -1);

  // Truncating a rank-0 matroid fails at that operation.
  ConstructionDocument loop = matrix_document(field_make(2, 1), 1, 1, {0});
  add_truncate(loop);
  CHECK(failing_step(loop) == 0);

  // The error text names the step for a human reader too.
  try {
    replay_construction(bad);
    FAIL("expected a ReplayError");
  } catch (const ReplayError& e) {
    CHECK(std::string(e.what()).find("step 0") != std::string::npos);
  }
}
