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
// Matroid constructions as data.  A document names a field, a base (a
// projective geometry or an explicit matrix), and an ordered list of
// operations; replaying it rebuilds the matroid bit for bit.  Reports that
// claim something about a matroid embed one of these documents so the claim
// can be checked from the file alone.

#pragma once

#include <string>
#include <vector>

#include "matkit/field.hpp"
#include "matkit/matroid.hpp"
#include "matkit/verdict.hpp"

namespace matkit {

// One step of a construction: a principal extension on a flat, a one-rank
// truncation, or removal of a set by deletion or contraction.  An extension
// allocates the smallest identifier never used in the tree, so later steps
// can refer to the new element deterministically.
struct ConstructionOp {
  enum class Kind { kExtend, kTruncate, kDelete, kContract };

  Kind kind = Kind::kTruncate;
  ElementSet elements;  // extend: the flat; delete/contract: the set

  bool operator==(const ConstructionOp& o) const {
    return kind == o.kind && elements == o.elements;
  }
};

// Serialized form, version 1 (strict JSON, integer numerics only):
//
//   {"version": 1,
//    "field": {"p": 2, "e": 1, "modulus": [0, 1]},
//    "base": {"pg": {"n": 3}},
//    "ops": [{"extend": {"flat": [0, 1]}},
//            {"truncate": {}},
//            {"delete": {"set": [2]}},
//            {"contract": {"set": [7]}}]}
//
// "pg" builds the rank-n projective geometry over the named field.  A
// matrix base instead reads
//
//   {"matrix": {"rows": 2, "cols": 3, "entries": [[1], [0], [1], ...]}}
//
// with row-major entries.  Every field value, the modulus included, is a
// little-endian coefficient list over Z_p rather than an element index, so
// a file fixes its arithmetic without reference to this library's tables.
struct ConstructionDocument {
  int version = 1;
  int p = 2;
  int e = 1;
  std::vector<int> modulus;  // little-endian, monic, length e + 1

  bool from_geometry = true;
  int geometry_rank = 1;  // rank of the base geometry when from_geometry
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> entries;  // row-major coefficient lists

  std::vector<ConstructionOp> ops;

  bool operator==(const ConstructionDocument& o) const = default;
};

// Document for PG(rank - 1, p^e) with no operations.  Throws the field
// constructor's errors for unsupported p, e and PreconditionFailed when
// rank < 1.
ConstructionDocument pg_document(int p, int e, int rank);

// Document for the linear matroid of a rows x cols matrix whose entries are
// given as field element indices (the in-memory convention).  Throws
// PreconditionFailed on a shape mismatch.
ConstructionDocument matrix_document(const Field& f, int rows, int cols,
                                     const std::vector<uint8_t>& entries);

// Append one operation; the document is returned so calls can be chained.
ConstructionDocument& add_extend(ConstructionDocument& d, const ElementSet& flat);
ConstructionDocument& add_truncate(ConstructionDocument& d);
ConstructionDocument& add_delete(ConstructionDocument& d, const ElementSet& s);
ConstructionDocument& add_contract(ConstructionDocument& d, const ElementSet& s);

// Strict parse.  Unknown fields, missing fields, non-integer numerics,
// out-of-range digits, duplicate identifiers, and a modulus other than the
// canonical one are rejected with a ParseError naming the offending
// location as a slash path; malformed JSON carries the source line.
ConstructionDocument parse_construction(const std::string& text);
ConstructionDocument construction_from_json(const Json& j);

// Canonical serialization: schema key order, ascending sets, two-space
// indent, one trailing newline.  serialize . parse is the identity on
// canonical bytes, and parse . construction_from_json likewise.
Json construction_to_json(const ConstructionDocument& d);
std::string serialize_construction(const ConstructionDocument& d);

// Replays the document into a matroid.  A failure throws ReplayError whose
// step is the index of the offending operation; field and base failures use
// step -1.  Geometry bases accept any rank whose point count fits the
// library cap, independent of the smaller default cap used by searches.
MatroidHandle replay_construction(const ConstructionDocument& d);

}  // namespace matkit
