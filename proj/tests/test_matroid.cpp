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

#include <memory>
#include <vector>

#include "matkit/errors.hpp"
#include "matkit/matroid.hpp"
#include "matkit/rng.hpp"
#include "oracles.hpp"

using namespace matkit;
using testing::all_subsets;
using testing::binary_pg_columns;
using testing::brute_rank;
using testing::make_fixture;
using testing::MatrixFixture;

namespace {

MatrixFixture u23() {
  return make_fixture(field_make(2, 1), {{1, 0}, {0, 1}, {1, 1}});
}

MatrixFixture fano() {
  return make_fixture(field_make(2, 1), binary_pg_columns(3));
}

MatrixFixture pg32() {
  return make_fixture(field_make(2, 1), binary_pg_columns(4));
}

// U_{3,4}: every three of the four columns are independent over GF(3).
MatrixFixture u34() {
  return make_fixture(field_make(3, 1),
                      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

}  // namespace

TEST_CASE("rank agrees with span enumeration on random matrices") {
  SplitMix64 rng(2024);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    Field f = field_make(p, e);
    for (int trial = 0; trial < 4; ++trial) {
      const int rows = 3 + static_cast<int>(rng.below(2));
      const int cols = 6 + static_cast<int>(rng.below(3));
      std::vector<uint8_t> ent(static_cast<size_t>(rows) * cols);
      for (auto& v : ent) v = static_cast<uint8_t>(rng.below(f->q));
      MatroidHandle m = MatroidHandle::from_matrix(f, rows, cols, ent);
      for (const ElementSet& s : all_subsets(m.ground())) {
        CAPTURE(p);
        CAPTURE(trial);
        CAPTURE(s.to_string());
        CHECK(m.rank(s) == brute_rank(f, rows, cols, ent, s));
      }
    }
  }
}

TEST_CASE("three point line") {
  MatrixFixture fx = u23();
  CHECK(fx.m.rank() == 2);
  CHECK(fx.m.size() == 3);
  CHECK(epsilon(fx.m) == 3);
  CHECK(closure(fx.m, ElementSet{0}).members == ElementSet{0});
  CHECK(closure(fx.m, ElementSet{0, 1}).members == ElementSet{0, 1, 2});
  CHECK(is_flat(fx.m, ElementSet{}));
  CHECK(is_flat(fx.m, ElementSet{1}));
  CHECK_FALSE(is_flat(fx.m, ElementSet{0, 2}));

  std::vector<FlatRef> pts = flats_of_rank(fx.m, 1);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].members == ElementSet{0});
  CHECK(pts[1].members == ElementSet{1});
  CHECK(pts[2].members == ElementSet{2});
  CHECK(flats_of_rank(fx.m, 2).size() == 1);
  CHECK_THROWS_AS(flats_of_rank(fx.m, 3), RankOutOfRange);
  CHECK_THROWS_AS(flats_of_rank(fx.m, -1), RankOutOfRange);
}

TEST_CASE("loops and parallel classes") {
  Field f = field_make(3, 1);
  MatrixFixture fx = make_fixture(
      f, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 0}});
  CHECK(fx.m.rank(ElementSet{0}) == 0);
  CHECK(epsilon(fx.m) == 3);

  std::vector<PointClass> classes = point_classes(fx.m);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].representative == 1);
  CHECK(classes[0].members == ElementSet{1, 2});
  CHECK(classes[1].representative == 3);
  CHECK(classes[1].members == ElementSet{3});
  CHECK(classes[2].representative == 4);
  CHECK(classes[2].members == ElementSet{4});

  MatroidHandle s = simplify(fx.m);
  CHECK(s.ground() == ElementSet{1, 3, 4});  // identifiers survive
  CHECK(s.rank() == 2);
  CHECK(epsilon(s) == 3);
  CHECK(simplify(s).ground() == s.ground());

  CHECK(epsilon(fx.m, ElementSet{0, 1, 2}) == 1);
  CHECK(epsilon(fx.m, ElementSet{}) == 0);
}

TEST_CASE("deletion and contraction match the minor rank formulas") {
  MatrixFixture fx = fano();
  const ElementSet d{5};
  const ElementSet c{1};

  MatroidHandle del = deletion(fx.m, d);
  CHECK(del.ground() == (fx.m.ground() - d));
  CHECK(del.universe() == fx.m.universe());
  for (const ElementSet& s : all_subsets(del.ground()))
    CHECK(del.rank(s) == brute_rank(fx, s));

  MatroidHandle con = contraction(fx.m, c);
  CHECK(con.ground() == (fx.m.ground() - c));
  CHECK(con.rank() == 2);
  const int rc = brute_rank(fx, c);
  for (const ElementSet& s : all_subsets(con.ground()))
    CHECK(con.rank(s) == brute_rank(fx, s | c) - rc);

  // A minor of a minor, mixing both operations.
  MatroidHandle mm = deletion(con, ElementSet{6});
  CHECK(mm.ground() == ElementSet{0, 2, 3, 4, 5});
  for (const ElementSet& s : all_subsets(mm.ground()))
    CHECK(mm.rank(s) == brute_rank(fx, s | c) - rc);

  // Contracting two points of a line turns the third point into a loop and
  // leaves everything else parallel in rank 1.
  MatroidHandle con2 = contraction(fx.m, ElementSet{0, 1});
  CHECK(con2.rank() == 1);
  CHECK(epsilon(con2) == 1);
}

TEST_CASE("restriction keeps exactly the requested elements") {
  MatrixFixture fx = fano();
  ElementSet keep{0, 1, 2, 6};
  MatroidHandle r = restriction(fx.m, keep);
  CHECK(r.ground() == keep);
  for (const ElementSet& s : all_subsets(keep))
    CHECK(r.rank(s) == brute_rank(fx, s));
  CHECK_THROWS_AS(restriction(fx.m, ElementSet{0, 99}), UnknownElement);
}

TEST_CASE("principal extension on a point adds a parallel element") {
  MatrixFixture fx = u23();
  auto [m2, e] = principal_extend(fx.m, ElementSet{0});
  CHECK(e == 3);
  CHECK(m2.universe() == 4);
  CHECK(m2.ground() == ElementSet{0, 1, 2, 3});
  CHECK(m2.rank() == 2);
  CHECK(m2.rank(ElementSet{3}) == 1);
  CHECK(m2.rank(ElementSet{0, 3}) == 1);  // parallel to element 0
  CHECK(m2.rank(ElementSet{1, 3}) == 2);
  CHECK(epsilon(m2) == 3);

  std::vector<PointClass> classes = point_classes(m2);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].members == ElementSet{0, 3});
}

TEST_CASE("principal extension on the full flat adds a free point") {
  MatrixFixture fx = u23();
  auto [m2, e] = principal_extend(fx.m, fx.m.ground());
  CHECK(m2.rank() == 2);
  CHECK(epsilon(m2) == 4);
  for (int x : fx.m.ground()) CHECK(m2.rank(ElementSet{x, e}) == 2);
}

TEST_CASE("principal extension rejects non-flats") {
  MatrixFixture fx = u23();
  CHECK_THROWS_AS(principal_extend(fx.m, ElementSet{0, 1}), NotAFlat);
  CHECK_THROWS_AS(principal_extend(fx.m, ElementSet{9}), UnknownElement);
}

TEST_CASE("free extension plus contraction equals truncation") {
  MatrixFixture fx = fano();
  auto [ext, e] = principal_extend(fx.m, fx.m.ground());
  MatroidHandle via_ops = contraction(ext, ElementSet{e});
  MatroidHandle direct = truncate_node(fx.m);
  CHECK(via_ops.ground() == direct.ground());
  CHECK(via_ops.rank() == 2);
  CHECK(direct.rank() == 2);
  for (const ElementSet& s : all_subsets(fx.m.ground()))
    CHECK(via_ops.rank(s) == direct.rank(s));
}

TEST_CASE("truncation clamps rank") {
  MatrixFixture fx = fano();
  MatroidHandle t = truncate_node(fx.m);
  CHECK(t.rank() == 2);
  CHECK(epsilon(t) == 7);  // one long line through all seven points
  for (const ElementSet& s : all_subsets(fx.m.ground()))
    CHECK(t.rank(s) == std::min(brute_rank(fx, s), 2));

  MatroidHandle t2 = truncate_node(t);
  CHECK(t2.rank() == 1);
  MatroidHandle t3 = truncate_node(t2);
  CHECK(t3.rank() == 0);
  CHECK_THROWS_AS(truncate_node(t3), RankOutOfRange);
}

TEST_CASE("flat enumeration counts the binary geometries") {
  MatrixFixture fx = pg32();
  CHECK(fx.m.rank() == 4);
  CHECK(epsilon(fx.m) == 15);

  std::vector<FlatRef> pts = flats_of_rank(fx.m, 1);
  CHECK(pts.size() == 15);
  std::vector<FlatRef> lines = flats_of_rank(fx.m, 2);
  REQUIRE(lines.size() == 35);
  for (const FlatRef& l : lines) {
    CHECK(l.rank == 2);
    CHECK(l.members.size() == 3);
  }
  std::vector<FlatRef> planes = flats_of_rank(fx.m, 3);
  CHECK(planes.size() == 15);
  for (const FlatRef& p : planes) CHECK(p.members.size() == 7);

  for (size_t i = 1; i < lines.size(); ++i)
    CHECK(ElementSet::compare(lines[i - 1].members, lines[i].members) < 0);

  std::vector<FlatRef> all = flats_up_to_rank(fx.m, 3);
  CHECK(all.size() == 1 + 15 + 35 + 15);
  CHECK(all[0].members.empty());

  // The same call twice gives byte-identical output.
  std::vector<FlatRef> again = flats_of_rank(fx.m, 2);
  REQUIRE(again.size() == lines.size());
  for (size_t i = 0; i < lines.size(); ++i)
    CHECK(again[i].members == lines[i].members);
}

TEST_CASE("search budget interrupts flat enumeration") {
  MatrixFixture fx = pg32();
  SearchBudget tiny(5);
  CHECK_THROWS_AS(flats_of_rank(fx.m, 2, &tiny), ResourceExceeded);
  CHECK(tiny.used > tiny.limit);
}

TEST_CASE("local connectivity separates skew from touching") {
  MatrixFixture fx = pg32();
  // Column index v-1 holds vector value v; lines are xor-closed triples.
  const ElementSet line_a{0, 1, 2};    // values 1, 2, 3
  const ElementSet line_b{3, 7, 11};   // values 4, 8, 12
  const ElementSet line_c{0, 3, 4};    // values 1, 4, 5: meets line_a

  CHECK(fx.m.rank(line_a) == 2);
  CHECK(fx.m.rank(line_b) == 2);
  CHECK(local_connectivity(fx.m, line_a, line_b) == 0);
  CHECK(is_skew(fx.m, line_a, line_b));
  CHECK(local_connectivity(fx.m, line_a, line_c) == 1);
  CHECK_FALSE(is_skew(fx.m, line_a, line_c));
  CHECK(local_connectivity(fx.m, line_a, line_a) == 2);

  CHECK(mutually_skew(fx.m, {line_a, line_b}));
  CHECK_FALSE(mutually_skew(fx.m, {line_a, line_c}));
  CHECK_FALSE(mutually_skew(fx.m, {line_a, line_b, ElementSet{5}}));
  CHECK(mutually_skew(fx.m, {}));
  CHECK(mutually_skew(fx.m, {line_a}));
}

TEST_CASE("modular pairs and modular flats") {
  MatrixFixture fx = fano();
  const ElementSet la{0, 1, 2};  // values 1, 2, 3
  const ElementSet lb{0, 3, 4};  // values 1, 4, 5
  REQUIRE(is_flat(fx.m, la));
  REQUIRE(is_flat(fx.m, lb));
  CHECK(is_modular_pair(fx.m, la, lb));
  CHECK(is_modular_flat(fx.m, la));
  CHECK(is_modular_flat(fx.m, ElementSet{0}));
  CHECK(is_modular_flat(fx.m, fx.m.ground()));
  CHECK(is_modular_flat(fx.m, ElementSet{}));

  // Two disjoint lines of a rank-3 uniform matroid fail modularity.
  MatrixFixture u = u34();
  REQUIRE(is_flat(u.m, ElementSet{0, 1}));
  CHECK_FALSE(is_modular_pair(u.m, ElementSet{0, 1}, ElementSet{2, 3}));
  CHECK_FALSE(is_modular_flat(u.m, ElementSet{0, 1}));
  CHECK_THROWS_AS(is_modular_flat(u.m, ElementSet{0, 1, 2}), NotAFlat);
}

TEST_CASE("axiom check passes on honest oracles") {
  AnalysisVerdict small = axiom_check(u34().m, 0, 0);
  CHECK(small.positive());
  CHECK(small.numbers == std::vector<long long>{16});

  AnalysisVerdict sampled = axiom_check(pg32().m, 400, 99);
  CHECK(sampled.positive());
  CHECK(sampled.numbers == std::vector<long long>{400});
}

namespace {

// Violates submodularity only: every pair has rank 1 but the whole ground
// set has rank 2, so two overlapping pairs break the inequality.
struct SubmodularityBreaker : detail::Node {
  int rank_raw(const ElementSet& x) const override {
    const int n = x.size();
    if (n <= 1) return n;
    return n == 2 ? 1 : 2;
  }
  Field field_chain() const override { return nullptr; }
};

// Returns twice the size, violating the unit-increase bound outright.
struct UnitBreaker : detail::Node {
  int rank_raw(const ElementSet& x) const override { return 2 * x.size(); }
  Field field_chain() const override { return nullptr; }
};

template <typename T>
MatroidHandle corrupt(int n) {
  auto node = std::make_shared<T>();
  node->ground = ElementSet::full_range(n);
  node->universe = n;
  node->full_rank = node->rank_raw(node->ground);
  node->memo_enabled = false;
  return MatroidHandle::from_node(node);
}

}  // namespace

TEST_CASE("axiom check catches corrupted rank oracles") {
  CHECK_THROWS_AS(axiom_check(corrupt<UnitBreaker>(3), 0, 0), AxiomViolation);
  CHECK_THROWS_AS(axiom_check(corrupt<SubmodularityBreaker>(3), 0, 0),
                  AxiomViolation);
  try {
    axiom_check(corrupt<SubmodularityBreaker>(3), 0, 0);
    FAIL("expected a violation");
  } catch (const AxiomViolation& v) {
    CHECK(!v.witness.empty());
  }

  // The sampled path finds coarse violations too.
  CHECK_THROWS_AS(axiom_check(corrupt<UnitBreaker>(13), 64, 7),
                  AxiomViolation);
}

TEST_CASE("memoization is invisible across the size threshold") {
  // 26 columns keeps the memo off; ranks must still be stable and correct.
  SplitMix64 rng(5);
  Field f = field_make(2, 1);
  const int rows = 4, cols = 26;
  std::vector<uint8_t> ent(static_cast<size_t>(rows) * cols);
  for (auto& v : ent) v = static_cast<uint8_t>(rng.below(2));
  MatroidHandle m = MatroidHandle::from_matrix(f, rows, cols, ent);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet s;
    for (int e = 0; e < cols; ++e)
      if (rng.next() & 1) s.insert(e);
    const int r1 = m.rank(s);
    CHECK(r1 == m.rank(s));
    CHECK(r1 == brute_rank(f, rows, cols, ent, s));
  }
}

TEST_CASE("subset validation names the foreign element") {
  MatrixFixture fx = u23();
  CHECK_THROWS_AS(fx.m.rank(ElementSet{99}), UnknownElement);
  CHECK_THROWS_AS(closure(fx.m, ElementSet{0, 99}), UnknownElement);
  CHECK_THROWS_AS(deletion(fx.m, ElementSet{99}), UnknownElement);
  CHECK_THROWS_AS(contraction(fx.m, ElementSet{99}), UnknownElement);
  try {
    fx.m.rank(ElementSet{99});
  } catch (const UnknownElement& e) {
    CHECK(std::string(e.what()).find("99") != std::string::npos);
  }
}

TEST_CASE("matrix construction validates its input") {
  Field f = field_make(2, 1);
  CHECK_THROWS_AS(MatroidHandle::from_matrix(f, 2, 2, {0, 1, 1}),
                  PreconditionFailed);
  CHECK_THROWS_AS(MatroidHandle::from_matrix(f, 1, 2, {0, 2}),
                  PreconditionFailed);
  MatroidHandle empty = MatroidHandle::from_matrix(f, 0, 0, {});
  CHECK(empty.rank() == 0);
  CHECK(empty.size() == 0);
  CHECK(epsilon(empty) == 0);
}
