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
// Projective geometries over small prime-power fields, truncation, and
// principal-extension projections, together with the minimal-spanning-flat
// computation used to classify single-element extensions of a geometry.

#pragma once

#include <vector>

#include "matkit/bitset.hpp"
#include "matkit/field.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// PG(n, q) built from one canonical representative per projective point.
// Element i corresponds to the i-th canonical column in lexicographic order.
struct ProjectiveGeometry {
  Field field;
  int n = 0;  // projective dimension; the matroid has rank n + 1
  MatroidHandle handle;
};

// Builds PG(n, q) for the field of f.  Sizes are capped so that every
// downstream search stays exhaustive: n <= 6 by default (n <= 7 with
// `big`), q <= 5, and at most 256 points.  Throws UnsupportedSize outside
// those bounds.
ProjectiveGeometry pg(int n, const Field& f, bool big = false);

// The canonical column representatives used by pg(), in element order.
// Each column is monic: its first nonzero coordinate equals 1.
std::vector<std::vector<uint8_t>> pg_columns(int n, const Field& f, bool big = false);

// Number of points of PG(n, q), i.e. (q^(n+1) - 1) / (q - 1).
long long pg_point_count(int n, long long q);

// All hyperplane flats of g.handle, computed as kernels of the canonical
// linear functionals rather than by flat enumeration.  The result is sorted
// by member set and has exactly as many entries as the geometry has points.
std::vector<FlatRef> pg_hyperplanes(const ProjectiveGeometry& g);

// Truncates m by k ranks: each step freely extends by a point on the whole
// ground set and contracts it.  k = 0 returns m unchanged.  Throws
// RankOutOfRange unless 0 <= k <= r(M).
MatroidHandle truncate(const MatroidHandle& m, int k);

// A sequence of principal extensions of a base geometry.  Step i adds one
// new element freely placed on the given flat of the current matroid; the
// flat may use elements added by earlier steps.
struct ProjectionSpec {
  ProjectiveGeometry base;
  std::vector<ElementSet> steps;
};

struct ProjectionResult {
  MatroidHandle extended;   // base with all added elements present
  ElementSet added;         // the new elements, in step order
  MatroidHandle projected;  // extended / added
};

// Applies the steps in order.  At most 3 steps are accepted
// (UnsupportedSize); each step set must be a flat at the time it is used
// (NotAFlat).
ProjectionResult project(const ProjectionSpec& spec);

// Minimal flat of M \ e spanning e, when it is unique.
//
// A set X of M \ e spans e when r(X + e) = r(X).  The spanning sets that
// are flats of M \ e form an up-closed family; the candidate minimum is the
// intersection K of all spanning hyperplanes.  Outcomes:
//   - e spans extra rank (r(M) > r(M \ e)): no proper spanning flat exists
//     and the whole ground set of M \ e is returned.
//   - K spans e: K is the unique minimal spanning flat and is returned.
//   - otherwise two incomparable minimal spanning flats exist and
//     StructureViolation is thrown.
// Throws PreconditionFailed when e is a loop.  The returned FlatRef refers
// to M \ e.
FlatRef spanning_flat(const MatroidHandle& m, int e, SearchBudget* budget = nullptr);

// Same computation with the hyperplane flats of M \ e supplied by the
// caller (useful when many extensions of one base are classified).
FlatRef spanning_flat_with(const MatroidHandle& m, int e,
                           const std::vector<FlatRef>& del_hyperplanes);

}  // namespace matkit
