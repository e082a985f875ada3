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

#include "matkit/field.hpp"

#include <string>

namespace matkit {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Evaluates a polynomial (little-endian coefficients) at x over Z_p.
int poly_eval(const std::vector<int>& c, int x, int p) {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    v = (v * x + c[i]) % p;
  return v;
}

bool has_root(const std::vector<int>& c, int p) {
  for (int x = 0; x < p; ++x)
    if (poly_eval(c, x, p) == 0) return true;
  return false;
}

// Remainder of a by monic b over Z_p, both little-endian.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) > db) {
    int lead = a.back();
    int da = static_cast<int>(a.size()) - 1;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) {
        int j = da - db + i;
        a[j] = ((a[j] - lead * b[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Irreducibility over Z_p for degree <= 4: degrees 2 and 3 are irreducible
// iff they have no root; degree 4 additionally requires that no monic
// irreducible quadratic divides.
bool is_irreducible(const std::vector<int>& c, int p) {
  int deg = static_cast<int>(c.size()) - 1;
  if (deg == 1) return true;
  if (has_root(c, p)) return false;
  if (deg <= 3) return true;
  for (int v = 0; v < p * p; ++v) {
    std::vector<int> quad = {v % p, v / p, 1};
    if (has_root(quad, p)) continue;  // reducible quadratics divide only via roots
    if (poly_mod(c, quad, p).empty()) return false;
  }
  return true;
}

std::vector<int> smallest_irreducible(int p, int e) {
  int count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (int v = 0; v < count; ++v) {
    std::vector<int> c(e + 1, 0);
    c[e] = 1;
    int t = v;
    for (int i = 0; i < e; ++i) {
      c[i] = t % p;
      t /= p;
    }
    if (is_irreducible(c, p)) return c;
  }
  throw StructureViolation("no irreducible polynomial found");  // unreachable
}

std::array<int, 8> index_to_poly(int idx, int p, int e) {
  std::array<int, 8> c{};
  for (int i = 0; i < e; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

int poly_to_index(const std::array<int, 8>& c, int p, int e) {
  int idx = 0;
  for (int i = e - 1; i >= 0; --i) idx = idx * p + c[i];
  return idx;
}

void check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field->same_field(*b.field))
    throw FieldMismatch("elements of different fields");
}

}  // namespace

Field field_make(int p, int e) {
  if (e < 1 || e > 4)
    throw UnsupportedSize("extension degree must be between 1 and 4");
  if (!is_prime(p)) throw CompositeBase(std::to_string(p) + " is not prime");
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > 64) throw UnsupportedSize("field order exceeds 64");

  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->e = e;
  spec->q = static_cast<int>(q);
  spec->modulus = smallest_irreducible(p, e);

  int n = spec->q;
  spec->add_table.resize(n * n);
  spec->mul_table.resize(n * n);
  spec->neg_table.resize(n);
  spec->inv_table.assign(n, 0);

  for (int a = 0; a < n; ++a) {
    auto ca = index_to_poly(a, p, e);
    std::array<int, 8> cn{};
    for (int i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
    spec->neg_table[a] = static_cast<uint8_t>(poly_to_index(cn, p, e));
    for (int b = 0; b < n; ++b) {
      auto cb = index_to_poly(b, p, e);
      std::array<int, 8> cs{};
      for (int i = 0; i < e; ++i) cs[i] = (ca[i] + cb[i]) % p;
      spec->add_table[a * n + b] = static_cast<uint8_t>(poly_to_index(cs, p, e));

      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
          prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      std::vector<int> red = poly_mod(prod, spec->modulus, p);
      std::array<int, 8> cp{};
      for (size_t i = 0; i < red.size(); ++i) cp[i] = red[i];
      spec->mul_table[a * n + b] = static_cast<uint8_t>(poly_to_index(cp, p, e));
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (spec->mul_table[a * n + b] == 1) spec->inv_table[a] = static_cast<uint8_t>(b);

  return spec;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field, a.field->add(a.idx, b.idx)};
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field, a.field->mul(a.idx, b.idx)};
}

FieldElement field_neg(const FieldElement& a) {
  return {a.field, a.field->neg(a.idx)};
}

FieldElement field_inv(const FieldElement& a) {
  return {a.field, a.field->inv(a.idx)};
}

std::vector<FieldElement> field_elements(const Field& f) {
  std::vector<FieldElement> v;
  v.reserve(f->q);
  for (int i = 0; i < f->q; ++i) v.push_back({f, static_cast<uint8_t>(i)});
  return v;
}

}  // namespace matkit
