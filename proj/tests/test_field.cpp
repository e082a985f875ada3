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

#include <vector>

#include "matkit/errors.hpp"
#include "matkit/field.hpp"

using namespace matkit;

TEST_CASE("prime fields use the monic linear modulus") {
  Field f = field_make(5, 1);
  CHECK(f->q == 5);
  CHECK(f->modulus == std::vector<int>{0, 1});  // x
  CHECK(f->add(3, 4) == 2);
  CHECK(f->mul(3, 4) == 2);
  CHECK(f->neg(2) == 3);
  CHECK(f->inv(3) == 2);
}

TEST_CASE("chosen moduli are the smallest irreducibles") {
  // Smallest in the coefficient counter order used for construction.
  CHECK(field_make(2, 2)->modulus == std::vector<int>{1, 1, 1});     // x^2+x+1
  CHECK(field_make(3, 2)->modulus == std::vector<int>{1, 0, 1});     // x^2+1
  CHECK(field_make(2, 3)->modulus == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  CHECK(field_make(2, 4)->modulus ==
        std::vector<int>{1, 1, 0, 0, 1});                            // x^4+x+1
  CHECK(field_make(5, 2)->modulus == std::vector<int>{2, 0, 1});     // x^2+2
}

TEST_CASE("gf4 multiplication") {
  Field f = field_make(2, 2);
  // Indices: 0, 1, x = 2, x+1 = 3.  x*x = x+1 under x^2+x+1.
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);
  CHECK(f->mul(3, 3) == 2);
  CHECK(f->add(2, 3) == 1);
  CHECK(f->inv(2) == 3);
}

TEST_CASE("gf9 multiplication") {
  Field f = field_make(3, 2);
  // Indices are base-3 little-endian: x = 3.  x*x = -1 = 2 under x^2+1.
  CHECK(f->mul(3, 3) == 2);
  CHECK(f->mul(3, 6) == 1);  // x * 2x = 2x^2 = -2 = 1
  CHECK(f->neg(3) == 6);
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(e);
    Field f = field_make(p, e);
    const int q = f->q;
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->mul(a, 0) == 0);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) ==
                f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius fixes every element") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    Field f = field_make(p, e);
    for (int a = 0; a < f->q; ++a) {
      int v = a;
      for (int i = 1; i < f->q; ++i) v = f->mul(v, a);  // v = a^q
      CHECK(v == a);
    }
  }
}

TEST_CASE("element order and coefficients") {
  Field f = field_make(2, 2);
  std::vector<FieldElement> els = field_elements(f);
  REQUIRE(els.size() == 4);
  CHECK(els[0].idx == 0);
  CHECK(els[1].idx == 1);
  CHECK(els[2].coeffs() == std::vector<int>{0, 1});
  CHECK(els[3].coeffs() == std::vector<int>{1, 1});
  CHECK(field_mul(els[2], els[2]) == els[3]);
  CHECK(field_add(els[2], els[3]) == els[1]);
  CHECK(field_inv(els[2]) == els[3]);
  CHECK(field_neg(els[3]) == els[3]);
}

TEST_CASE("two handles to the same field are interchangeable") {
  Field a = field_make(2, 2);
  Field b = field_make(2, 2);
  CHECK(a.get() != b.get());
  std::vector<FieldElement> ea = field_elements(a);
  std::vector<FieldElement> eb = field_elements(b);
  CHECK(field_mul(ea[2], eb[2]) == ea[3]);  // structural field identity
  CHECK(ea[2] == eb[2]);
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(field_make(4, 1), CompositeBase);
  CHECK_THROWS_AS(field_make(6, 2), CompositeBase);
  CHECK_THROWS_AS(field_make(1, 1), CompositeBase);
  CHECK_THROWS_AS(field_make(2, 0), UnsupportedSize);
  CHECK_THROWS_AS(field_make(2, 7), UnsupportedSize);
  CHECK_THROWS_AS(field_make(5, 3), UnsupportedSize);   // 125 > 64
  CHECK_THROWS_AS(field_make(3, 4), UnsupportedSize);   // 81 > 64
  CHECK_THROWS_AS(field_make(11, 2), UnsupportedSize);  // 121 > 64
}

TEST_CASE("field arithmetic rejects mixed fields and zero division") {
  Field f2 = field_make(2, 1);
  Field f3 = field_make(3, 1);
  FieldElement a = field_elements(f2)[1];
  FieldElement b = field_elements(f3)[1];
  CHECK_THROWS_AS(field_add(a, b), FieldMismatch);
  CHECK_THROWS_AS(field_mul(a, b), FieldMismatch);
  CHECK_THROWS_AS(f2->inv(0), DivisionByZero);
  CHECK_THROWS_AS(field_inv(field_elements(f2)[0]), DivisionByZero);
}

TEST_CASE("field construction is deterministic") {
  Field a = field_make(2, 4);
  Field b = field_make(2, 4);
  CHECK(a->modulus == b->modulus);
  CHECK(a->add_table == b->add_table);
  CHECK(a->mul_table == b->mul_table);
  CHECK(a->inv_table == b->inv_table);
}
