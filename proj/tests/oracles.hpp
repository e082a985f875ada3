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

// Brute-force reference implementations used only by tests.  They share no
// algorithm with the library: rank is decided by enumerating the full span
// of the chosen columns instead of eliminating, so an elimination bug
// cannot hide in both.

#pragma once

#include <set>
#include <vector>

#include "matkit/bitset.hpp"
#include "matkit/field.hpp"
#include "matkit/matroid.hpp"

namespace matkit::testing {

// Rank of the selected columns, decided greedily: a column raises the rank
// exactly when it is outside the span built so far, and the span is kept
// as an explicit list of q^rank vectors.
inline int brute_rank(const Field& f, int rows, int cols,
                      const std::vector<uint8_t>& entries,
                      const ElementSet& subset) {
  std::set<std::vector<uint8_t>> span;
  span.insert(std::vector<uint8_t>(rows, 0));
  int rank = 0;
  for (int c : subset) {
    std::vector<uint8_t> col(rows);
    for (int r = 0; r < rows; ++r)
      col[static_cast<size_t>(r)] = entries[static_cast<size_t>(r) * cols + c];
    if (span.count(col)) continue;
    std::set<std::vector<uint8_t>> grown;
    for (const auto& v : span) {
      for (uint8_t k = 0; k < f->q; ++k) {
        std::vector<uint8_t> w(rows);
        for (int r = 0; r < rows; ++r)
          w[static_cast<size_t>(r)] =
              f->add(v[static_cast<size_t>(r)],
                     f->mul(k, col[static_cast<size_t>(r)]));
        grown.insert(std::move(w));
      }
    }
    span = std::move(grown);
    ++rank;
  }
  return rank;
}

// A matrix matroid kept together with its raw matrix so tests can aim the
// brute-force oracle at the same data the library saw.
struct MatrixFixture {
  Field field;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> entries;
  MatroidHandle m;
};

inline MatrixFixture make_fixture(
    const Field& f, const std::vector<std::vector<uint8_t>>& columns) {
  MatrixFixture fx;
  fx.field = f;
  fx.cols = static_cast<int>(columns.size());
  fx.rows = columns.empty() ? 0 : static_cast<int>(columns[0].size());
  fx.entries.assign(static_cast<size_t>(fx.rows) * fx.cols, 0);
  for (int c = 0; c < fx.cols; ++c)
    for (int r = 0; r < fx.rows; ++r)
      fx.entries[static_cast<size_t>(r) * fx.cols + c] =
          columns[static_cast<size_t>(c)][static_cast<size_t>(r)];
  fx.m = MatroidHandle::from_matrix(f, fx.rows, fx.cols, fx.entries);
  return fx;
}

inline int brute_rank(const MatrixFixture& fx, const ElementSet& subset) {
  return brute_rank(fx.field, fx.rows, fx.cols, fx.entries, subset);
}

// Columns of the binary projective geometry of the given rank: all nonzero
// vectors of F_2^dim, ordered by their value read with row i as bit i.
// Column index v-1 carries vector value v, so lines are the triples
// {a, b, a xor b} shifted down by one.
inline std::vector<std::vector<uint8_t>> binary_pg_columns(int dim) {
  std::vector<std::vector<uint8_t>> cols;
  for (int v = 1; v < (1 << dim); ++v) {
    std::vector<uint8_t> c(static_cast<size_t>(dim));
    for (int r = 0; r < dim; ++r)
      c[static_cast<size_t>(r)] = static_cast<uint8_t>((v >> r) & 1);
    cols.push_back(std::move(c));
  }
  return cols;
}

// All subsets of `ground`, smallest sets first, for exhaustive checks.
inline std::vector<ElementSet> all_subsets(const ElementSet& ground) {
  std::vector<int> els = ground.to_vector();
  const size_t total = size_t{1} << els.size();
  std::vector<ElementSet> out;
  out.reserve(total);
  for (size_t mask = 0; mask < total; ++mask) {
    ElementSet s;
    for (size_t i = 0; i < els.size(); ++i)
      if (mask >> i & 1) s.insert(els[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace matkit::testing
