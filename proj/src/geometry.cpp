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

#include "matkit/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "matkit/errors.hpp"

namespace matkit {

namespace {

constexpr int kMaxDim = 6;
constexpr int kMaxDimBig = 7;
constexpr long long kMaxPoints = 256;
constexpr int kMaxOrder = 5;

}  // namespace

long long pg_point_count(int n, long long q) {
  long long total = 0;
  long long power = 1;
  for (int i = 0; i <= n; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::vector<std::vector<uint8_t>> pg_columns(int n, const Field& f, bool big) {
  if (!f) throw PreconditionFailed("geometry construction needs a field");
  const int cap = big ? kMaxDimBig : kMaxDim;
  if (n < 1 || n > cap) {
    throw UnsupportedSize("projective dimension " + std::to_string(n) +
                          " is outside the supported range 1.." + std::to_string(cap));
  }
  if (f->q > kMaxOrder) {
    throw UnsupportedSize("field order " + std::to_string(f->q) +
                          " is above the geometry limit " + std::to_string(kMaxOrder));
  }
  const long long count = pg_point_count(n, f->q);
  if (count > kMaxPoints) {
    throw UnsupportedSize("geometry would have " + std::to_string(count) +
                          " points, above the limit " + std::to_string(kMaxPoints));
  }

  // Enumerate F_q^(n+1) in lexicographic order with coordinate 0 most
  // significant and keep the monic vectors: one representative per point.
  const int dim = n + 1;
  const int q = f->q;
  std::vector<std::vector<uint8_t>> cols;
  cols.reserve(static_cast<size_t>(count));
  long long total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  for (long long value = 1; value < total; ++value) {
    std::vector<uint8_t> col(dim, 0);
    long long rest = value;
    for (int i = dim - 1; i >= 0; --i) {
      col[static_cast<size_t>(i)] = static_cast<uint8_t>(rest % q);
      rest /= q;
    }
    int first = 0;
    while (col[static_cast<size_t>(first)] == 0) ++first;
    if (col[static_cast<size_t>(first)] == 1) cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<FlatRef> pg_hyperplanes(const ProjectiveGeometry& g) {
  if (!g.handle.valid()) throw PreconditionFailed("hyperplanes need a built geometry");
  const Field& f = g.field;
  // Hyperplanes of a projective geometry are the kernels of the nonzero
  // functionals, one per canonical dual vector.
  std::vector<std::vector<uint8_t>> cols = pg_columns(g.n, f, g.n > kMaxDim);
  std::vector<FlatRef> out;
  out.reserve(cols.size());
  for (const auto& a : cols) {
    ElementSet members;
    for (size_t c = 0; c < cols.size(); ++c) {
      uint8_t dot = 0;
      for (size_t r = 0; r < a.size(); ++r) dot = f->add(dot, f->mul(a[r], cols[c][r]));
      if (dot == 0) members.insert(static_cast<int>(c));
    }
    out.push_back(FlatRef{g.handle, members, g.n});
  }
  std::sort(out.begin(), out.end(), [](const FlatRef& x, const FlatRef& y) {
    return ElementSet::compare(x.members, y.members) < 0;
  });
  return out;
}

ProjectiveGeometry pg(int n, const Field& f, bool big) {
  std::vector<std::vector<uint8_t>> cols = pg_columns(n, f, big);
  const int rows = n + 1;
  const int ncols = static_cast<int>(cols.size());
  std::vector<uint8_t> entries(static_cast<size_t>(rows) * static_cast<size_t>(ncols), 0);
  for (int c = 0; c < ncols; ++c)
    for (int r = 0; r < rows; ++r)
      entries[static_cast<size_t>(r) * ncols + c] = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  ProjectiveGeometry g;
  g.field = f;
  g.n = n;
  g.handle = MatroidHandle::from_matrix(f, rows, ncols, entries);
  return g;
}

MatroidHandle truncate(const MatroidHandle& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw RankOutOfRange("cannot drop " + std::to_string(k) + " ranks from a rank-" +
                         std::to_string(m.rank()) + " matroid");
  }
  MatroidHandle cur = m;
  for (int i = 0; i < k; ++i) {
    // A free extension followed by contracting the new element lowers the
    // rank by one and keeps every original element id.
    auto [ext, e] = principal_extend(cur, cur.ground());
    ElementSet one;
    one.insert(e);
    cur = contraction(ext, one);
  }
  return cur;
}

ProjectionResult project(const ProjectionSpec& spec) {
  if (spec.steps.size() > 3) {
    throw UnsupportedSize("projection depth " + std::to_string(spec.steps.size()) +
                          " is above the limit 3");
  }
  ProjectionResult out;
  MatroidHandle cur = spec.base.handle;
  for (const ElementSet& step : spec.steps) {
    auto [ext, e] = principal_extend(cur, step);
    out.added.insert(e);
    cur = ext;
  }
  out.extended = cur;
  out.projected = out.added.empty() ? cur : contraction(cur, out.added);
  return out;
}

namespace {

// Shared search: given the hyperplane flats of M \ e, locate the unique
// minimal flat of M \ e spanning e, or report the degenerate outcomes.
FlatRef spanning_flat_core(const MatroidHandle& m, int e, const MatroidHandle& del,
                           const std::vector<const ElementSet*>& hyperplanes) {
  ElementSet eset;
  eset.insert(e);
  const ElementSet rest = m.ground() - eset;

  auto spans = [&](const ElementSet& x) {
    return m.rank_unchecked(x | eset) == m.rank_unchecked(x);
  };

  if (m.rank() > del.rank() || !spans(rest)) {
    // The element adds rank, so nothing below the full ground set spans it.
    return FlatRef{del, rest, del.rank()};
  }

  // Spanning flats are up-closed, and every flat is an intersection of the
  // hyperplanes above it, so the minimum (if unique) is the intersection of
  // the spanning hyperplanes.
  ElementSet meet = rest;
  bool any = false;
  for (const ElementSet* h : hyperplanes) {
    if (spans(*h)) {
      meet &= *h;
      any = true;
    }
  }
  if (!any) return FlatRef{del, rest, del.rank()};
  if (spans(meet)) return FlatRef{del, meet, del.rank_unchecked(meet)};
  throw StructureViolation("no unique minimal flat spans element " + std::to_string(e));
}

}  // namespace

FlatRef spanning_flat(const MatroidHandle& m, int e, SearchBudget* budget) {
  if (!m.ground().contains(e)) {
    throw UnknownElement("element " + std::to_string(e) + " is not in the ground set");
  }
  ElementSet eset;
  eset.insert(e);
  if (m.rank(eset) == 0) {
    throw PreconditionFailed("element " + std::to_string(e) + " is a loop; no flat spans it");
  }
  MatroidHandle del = deletion(m, eset);
  if (del.rank() >= 1 && m.rank() == del.rank()) {
    std::vector<FlatRef> flats = flats_of_rank(del, del.rank() - 1, budget);
    std::vector<const ElementSet*> hyps;
    hyps.reserve(flats.size());
    for (const FlatRef& fl : flats) hyps.push_back(&fl.members);
    return spanning_flat_core(m, e, del, hyps);
  }
  return spanning_flat_core(m, e, del, {});
}

FlatRef spanning_flat_with(const MatroidHandle& m, int e,
                           const std::vector<FlatRef>& del_hyperplanes) {
  if (!m.ground().contains(e)) {
    throw UnknownElement("element " + std::to_string(e) + " is not in the ground set");
  }
  ElementSet eset;
  eset.insert(e);
  if (m.rank(eset) == 0) {
    throw PreconditionFailed("element " + std::to_string(e) + " is a loop; no flat spans it");
  }
  MatroidHandle del = deletion(m, eset);
  std::vector<const ElementSet*> hyps;
  hyps.reserve(del_hyperplanes.size());
  for (const FlatRef& fl : del_hyperplanes) hyps.push_back(&fl.members);
  return spanning_flat_core(m, e, del, hyps);
}

}  // namespace matkit
