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

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "matkit/errors.hpp"

namespace matkit {

// GF(p^e) with p prime, 1 <= e <= 4 and p^e <= 64.  The modulus is the
// lexicographically smallest monic irreducible polynomial of degree e over
// Z_p, where candidates are ordered by their little-endian coefficient
// vector (c0, c1, ..., c_{e-1}) read as a base-p counter.  For e = 1 this
// yields the polynomial x.
//
// Elements are identified by their index: the element with coefficient
// vector (c0, ..., c_{e-1}) has index sum c_i * p^i, so 0 has index 0 and
// 1 has index 1.  All arithmetic is table-driven; the tables are built
// once per FieldSpec from the polynomial representation.
struct FieldSpec {
  int p = 0;
  int e = 0;
  int q = 0;                  // p^e
  std::vector<int> modulus;   // e+1 coefficients, little-endian, monic

  // q*q tables and q-entry tables, indexed by element index.
  std::vector<uint8_t> add_table;
  std::vector<uint8_t> mul_table;
  std::vector<uint8_t> neg_table;
  std::vector<uint8_t> inv_table;  // inv_table[0] unused

  uint8_t add(uint8_t a, uint8_t b) const { return add_table[a * q + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_table[a * q + b]; }
  uint8_t neg(uint8_t a) const { return neg_table[a]; }
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return inv_table[a];
  }

  std::array<int, 4> coeffs_of(uint8_t idx) const {
    std::array<int, 4> c{0, 0, 0, 0};
    int v = idx;
    for (int i = 0; i < e; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  }

  bool same_field(const FieldSpec& o) const {
    return p == o.p && e == o.e && modulus == o.modulus;
  }
};

using Field = std::shared_ptr<const FieldSpec>;

// Canonical element: a field reference plus an index.  Two elements are
// equal iff their fields agree structurally and the indices match.
struct FieldElement {
  Field field;
  uint8_t idx = 0;

  bool operator==(const FieldElement& o) const {
    return idx == o.idx && field->same_field(*o.field);
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::vector<int> coeffs() const {
    auto a = field->coeffs_of(idx);
    return std::vector<int>(a.begin(), a.begin() + field->e);
  }
};

// Builds GF(p^e).  Throws CompositeBase when p is not prime and
// UnsupportedSize when e or p^e is out of range.  Deterministic: equal
// arguments always produce a structurally identical FieldSpec.
Field field_make(int p, int e);

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);

// All q elements in index order: 0 first, 1 second.
std::vector<FieldElement> field_elements(const Field& f);

}  // namespace matkit
