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

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "matkit/bitset.hpp"
#include "matkit/errors.hpp"
#include "matkit/field.hpp"
#include "matkit/verdict.hpp"

namespace matkit {

class MatroidHandle;

namespace detail {

// One node of the construction tree.  Nodes are immutable once built; the
// only mutable state is the rank memo, which is guarded by a mutex so
// handles can be shared across threads.  The memo is enabled only for
// ground sets of at most kMemoLimit elements; larger matroids recompute,
// trading time for bounded memory.
constexpr int kMemoLimit = 24;

struct Node {
  ElementSet ground;
  int universe = 0;    // smallest identifier never used in this tree
  int full_rank = 0;

  mutable std::mutex memo_mu;
  mutable std::unordered_map<ElementSet, int, ElementSet::Hash> memo;
  bool memo_enabled = false;

  virtual ~Node() = default;

  // Rank of X, X already validated as a subset of ground.
  virtual int rank_raw(const ElementSet& x) const = 0;

  // Field of the linear leaf; may be null for synthetic oracles.
  virtual Field field_chain() const = 0;
};

}  // namespace detail

// Value-semantics handle to an immutable matroid.  Copies are cheap and
// share the rank memo.  Element identifiers are dense integers assigned at
// creation and stable under deletion and contraction; extensions allocate
// the smallest identifier never used in the tree.
class MatroidHandle {
 public:
  MatroidHandle() = default;

  // Linear matroid on columns 0..cols-1 of a rows x cols matrix given in
  // row-major order as field element indices.
  static MatroidHandle from_matrix(const Field& f, int rows, int cols,
                                   const std::vector<uint8_t>& entries);

  // Wraps an externally defined node (used by test fixtures).
  static MatroidHandle from_node(std::shared_ptr<const detail::Node> n);

  bool valid() const { return node_ != nullptr; }
  const ElementSet& ground() const { return node_->ground; }
  int size() const { return node_->ground.size(); }
  int universe() const { return node_->universe; }
  int rank() const { return node_->full_rank; }
  Field field() const;

  // Rank of a subset.  Throws UnknownElement when X mentions an identifier
  // outside the ground set.
  int rank(const ElementSet& x) const;

  // Internal fast path: X must already be a subset of the ground set.
  int rank_unchecked(const ElementSet& x) const;

  const std::shared_ptr<const detail::Node>& node() const { return node_; }

 private:
  explicit MatroidHandle(std::shared_ptr<const detail::Node> n)
      : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

// A closed set together with its matroid and cached rank.
struct FlatRef {
  MatroidHandle matroid;
  ElementSet members;
  int rank = 0;

  bool operator==(const FlatRef& o) const { return members == o.members; }
};

// Budget shared by closure-driven searches.  Every computed closure counts
// one unit; exceeding the limit throws ResourceExceeded.  The default limit
// matches the library-wide cap and can be lowered per call.
struct SearchBudget {
  long long limit;
  long long used = 0;

  SearchBudget() : limit(default_limit()) {}
  explicit SearchBudget(long long lim) : limit(lim) {}

  void charge(long long n = 1) {
    used += n;
    if (used > limit)
      throw ResourceExceeded("closure budget of " + std::to_string(limit) +
                             " exceeded");
  }

  static long long& default_limit() {
    static long long limit = 2'000'000;
    return limit;
  }
};

// ---- Kernel operations -----------------------------------------------------

int rank(const MatroidHandle& m, const ElementSet& x);

// cl(X) = { y : r(X + y) = r(X) }.
FlatRef closure(const MatroidHandle& m, const ElementSet& x);

bool is_flat(const MatroidHandle& m, const ElementSet& x);

// All flats of the given rank, sorted lexicographically.  Generated level
// by level from the rank-0 flat; `budget` bounds the number of closures.
std::vector<FlatRef> flats_of_rank(const MatroidHandle& m, int k,
                                   SearchBudget* budget = nullptr);

// All flats of rank 0..k_max as one vector sorted by (rank, members).
std::vector<FlatRef> flats_up_to_rank(const MatroidHandle& m, int k_max,
                                      SearchBudget* budget = nullptr);

// Number of rank-1 flats of M restricted to X (all of E when X omitted).
int epsilon(const MatroidHandle& m);
int epsilon(const MatroidHandle& m, const ElementSet& x);

// Parallel classes of non-loops in X, keyed by smallest member; classes
// are returned in order of their representative.
struct PointClass {
  int representative;
  ElementSet members;
};
std::vector<PointClass> point_classes(const MatroidHandle& m,
                                      const ElementSet& x);
std::vector<PointClass> point_classes(const MatroidHandle& m);

// Deletes loops and all but the smallest-identifier member of each
// parallel class.  Identifiers survive unchanged.
MatroidHandle simplify(const MatroidHandle& m);

MatroidHandle deletion(const MatroidHandle& m, const ElementSet& d);
MatroidHandle contraction(const MatroidHandle& m, const ElementSet& c);
MatroidHandle restriction(const MatroidHandle& m, const ElementSet& keep);

// Extends by one element freely placed on the flat `f` (validated).
// Returns the new handle and the identifier of the new element.
std::pair<MatroidHandle, int> principal_extend(const MatroidHandle& m,
                                               const ElementSet& f);

// Rank-(r-1) truncation as a single tree node.  Geometry code builds
// truncations out of free extension plus contraction instead; the two are
// checked against each other in tests.
MatroidHandle truncate_node(const MatroidHandle& m);

// r(X) + r(Y) - r(X + Y).
int local_connectivity(const MatroidHandle& m, const ElementSet& x,
                       const ElementSet& y);

bool is_skew(const MatroidHandle& m, const ElementSet& x, const ElementSet& y);
bool mutually_skew(const MatroidHandle& m, const std::vector<ElementSet>& xs);

// Modular pair: local connectivity equals the rank of the intersection.
bool is_modular_pair(const MatroidHandle& m, const ElementSet& f1,
                     const ElementSet& f2);

// Modular flat: modular pair with every flat of the matroid.
bool is_modular_flat(const MatroidHandle& m, const ElementSet& f,
                     SearchBudget* budget = nullptr);

// Checks rank axioms (bounds, unit increase, monotonicity, submodularity).
// Exhaustive over all subsets when |E| <= 12, otherwise `trials` sampled
// triples driven by the seed.  Throws AxiomViolation with a witness on
// failure; returns a pass verdict otherwise.
AnalysisVerdict axiom_check(const MatroidHandle& m, int trials, uint64_t seed);

}  // namespace matkit
