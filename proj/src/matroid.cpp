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

#include "matkit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <utility>

#include "matkit/rng.hpp"

namespace matkit {
namespace detail {
namespace {

// Leaf: column matroid of a matrix over a finite field.  rank_raw gathers
// the selected columns and runs Gaussian elimination.  GF(2) gets a packed
// bit-parallel path; other fields go through the arithmetic tables.
struct LinearNode : Node {
  Field field;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> entries;  // row-major field element indices

  int rank_raw(const ElementSet& x) const override {
    const int k = x.size();
    if (k == 0 || rows == 0) return 0;
    if (field->q == 2) return rank_gf2(x, k);
    return rank_generic(x, k);
  }

  Field field_chain() const override { return field; }

 private:
  int rank_gf2(const ElementSet& x, int k) const {
    const int nw = (k + 63) / 64;
    thread_local std::vector<uint64_t> buf;
    buf.assign(static_cast<size_t>(rows) * nw, 0);
    int ci = 0;
    for (int e : x) {
      for (int r = 0; r < rows; ++r) {
        if (entries[static_cast<size_t>(r) * cols + e])
          buf[static_cast<size_t>(r) * nw + ci / 64] |= uint64_t{1}
                                                        << (ci % 64);
      }
      ++ci;
    }
    int rk = 0;
    for (int c = 0; c < k && rk < rows; ++c) {
      const int w = c / 64;
      const uint64_t bit = uint64_t{1} << (c % 64);
      int piv = -1;
      for (int r = rk; r < rows; ++r) {
        if (buf[static_cast<size_t>(r) * nw + w] & bit) {
          piv = r;
          break;
        }
      }
      if (piv < 0) continue;
      if (piv != rk) {
        for (int j = 0; j < nw; ++j)
          std::swap(buf[static_cast<size_t>(piv) * nw + j],
                    buf[static_cast<size_t>(rk) * nw + j]);
      }
      for (int r = rk + 1; r < rows; ++r) {
        if (buf[static_cast<size_t>(r) * nw + w] & bit) {
          for (int j = w; j < nw; ++j)
            buf[static_cast<size_t>(r) * nw + j] ^=
                buf[static_cast<size_t>(rk) * nw + j];
        }
      }
      ++rk;
    }
    return rk;
  }

  int rank_generic(const ElementSet& x, int k) const {
    const FieldSpec& f = *field;
    thread_local std::vector<uint8_t> buf;
    buf.assign(static_cast<size_t>(rows) * k, 0);
    int ci = 0;
    for (int e : x) {
      for (int r = 0; r < rows; ++r)
        buf[static_cast<size_t>(r) * k + ci] =
            entries[static_cast<size_t>(r) * cols + e];
      ++ci;
    }
    int rk = 0;
    for (int c = 0; c < k && rk < rows; ++c) {
      int piv = -1;
      for (int r = rk; r < rows; ++r) {
        if (buf[static_cast<size_t>(r) * k + c]) {
          piv = r;
          break;
        }
      }
      if (piv < 0) continue;
      if (piv != rk) {
        for (int j = c; j < k; ++j)
          std::swap(buf[static_cast<size_t>(piv) * k + j],
                    buf[static_cast<size_t>(rk) * k + j]);
      }
      const uint8_t pinv = f.inv(buf[static_cast<size_t>(rk) * k + c]);
      for (int r = rk + 1; r < rows; ++r) {
        const uint8_t lead = buf[static_cast<size_t>(r) * k + c];
        if (!lead) continue;
        const uint8_t factor = f.mul(lead, pinv);
        for (int j = c; j < k; ++j) {
          const uint8_t sub =
              f.neg(f.mul(factor, buf[static_cast<size_t>(rk) * k + j]));
          buf[static_cast<size_t>(r) * k + j] =
              f.add(buf[static_cast<size_t>(r) * k + j], sub);
        }
      }
      ++rk;
    }
    return rk;
  }
};

struct DeleteNode : Node {
  MatroidHandle parent;

  int rank_raw(const ElementSet& x) const override {
    return parent.rank_unchecked(x);
  }
  Field field_chain() const override { return parent.field(); }
};

struct ContractNode : Node {
  MatroidHandle parent;
  ElementSet cset;
  int base_rank = 0;  // parent rank of cset, fixed at construction

  int rank_raw(const ElementSet& x) const override {
    return parent.rank_unchecked(x | cset) - base_rank;
  }
  Field field_chain() const override { return parent.field(); }
};

// Principal extension: the new element lies freely on the flat `flat`.
struct ExtendNode : Node {
  MatroidHandle parent;
  ElementSet flat;
  int elem = 0;

  int rank_raw(const ElementSet& x) const override {
    if (!x.contains(elem)) return parent.rank_unchecked(x);
    ElementSet rest = without(x, elem);
    const int base = parent.rank_unchecked(rest);
    rest |= flat;
    const int limit = parent.rank_unchecked(rest);
    return std::min(base + 1, limit);
  }
  Field field_chain() const override { return parent.field(); }
};

struct TruncateNode : Node {
  MatroidHandle parent;

  int rank_raw(const ElementSet& x) const override {
    return std::min(parent.rank_unchecked(x), full_rank);
  }
  Field field_chain() const override { return parent.field(); }
};

template <typename T>
MatroidHandle seal(std::shared_ptr<T> n, ElementSet ground, int universe,
                   int full_rank) {
  n->ground = std::move(ground);
  n->universe = universe;
  n->full_rank = full_rank;
  n->memo_enabled = n->ground.size() <= kMemoLimit;
  return MatroidHandle::from_node(std::move(n));
}

}  // namespace
}  // namespace detail

namespace {

// First identifier of X outside the ground set, or -1.
int foreign_element(const ElementSet& x, const ElementSet& ground) {
  for (int e : x)
    if (!ground.contains(e)) return e;
  return -1;
}

void require_subset(const MatroidHandle& m, const ElementSet& x) {
  if (!x.is_subset_of(m.ground()))
    throw UnknownElement("element " +
                         std::to_string(foreign_element(x, m.ground())) +
                         " is not in the ground set");
}

}  // namespace

MatroidHandle MatroidHandle::from_matrix(const Field& f, int rows, int cols,
                                         const std::vector<uint8_t>& entries) {
  if (!f) throw PreconditionFailed("matrix matroid needs a field");
  if (rows < 0 || cols < 0)
    throw PreconditionFailed("matrix dimensions must be nonnegative");
  if (entries.size() != static_cast<size_t>(rows) * cols)
    throw PreconditionFailed("matrix has " + std::to_string(entries.size()) +
                             " entries, expected " +
                             std::to_string(static_cast<size_t>(rows) * cols));
  for (uint8_t v : entries) {
    if (v >= f->q)
      throw PreconditionFailed("matrix entry " + std::to_string(int{v}) +
                               " is not a field element index");
  }
  auto n = std::make_shared<detail::LinearNode>();
  n->field = f;
  n->rows = rows;
  n->cols = cols;
  n->entries = entries;
  ElementSet ground = ElementSet::full_range(cols);
  const int full = n->rank_raw(ground);
  return detail::seal(std::move(n), std::move(ground), cols, full);
}

MatroidHandle MatroidHandle::from_node(std::shared_ptr<const detail::Node> n) {
  return MatroidHandle(std::move(n));
}

Field MatroidHandle::field() const { return node_->field_chain(); }

int MatroidHandle::rank(const ElementSet& x) const {
  require_subset(*this, x);
  return rank_unchecked(x);
}

int MatroidHandle::rank_unchecked(const ElementSet& x) const {
  const detail::Node& n = *node_;
  if (!n.memo_enabled) return n.rank_raw(x);
  {
    std::lock_guard<std::mutex> lock(n.memo_mu);
    auto it = n.memo.find(x);
    if (it != n.memo.end()) return it->second;
  }
  const int r = n.rank_raw(x);
  {
    std::lock_guard<std::mutex> lock(n.memo_mu);
    n.memo.emplace(x, r);
  }
  return r;
}

int rank(const MatroidHandle& m, const ElementSet& x) { return m.rank(x); }

FlatRef closure(const MatroidHandle& m, const ElementSet& x) {
  const int r = m.rank(x);
  ElementSet members = x;
  ElementSet probe = x;
  for (int y : m.ground()) {
    if (x.contains(y)) continue;
    probe.insert(y);
    if (m.rank_unchecked(probe) == r) members.insert(y);
    probe.erase(y);
  }
  return FlatRef{m, std::move(members), r};
}

bool is_flat(const MatroidHandle& m, const ElementSet& x) {
  return closure(m, x).members == x;
}

namespace {

// Flats of rank 0..kmax, one vector per rank, each level sorted.  Level
// j+1 is generated by closing F + y over all rank-j flats F; a candidate
// already inside a discovered level-(j+1) flat is skipped, since that flat
// is the unique rank-(j+1) flat containing it.
std::vector<std::vector<FlatRef>> flat_levels(const MatroidHandle& m, int kmax,
                                              SearchBudget* budget) {
  SearchBudget local;
  SearchBudget* b = budget ? budget : &local;
  std::vector<std::vector<FlatRef>> levels;
  b->charge();
  levels.push_back({closure(m, ElementSet{})});
  for (int j = 0; j < kmax; ++j) {
    std::vector<FlatRef> next;
    std::unordered_set<ElementSet, ElementSet::Hash> seen;
    for (const FlatRef& f : levels.back()) {
      for (int y : m.ground()) {
        if (f.members.contains(y)) continue;
        bool covered = false;
        for (const FlatRef& g : next) {
          if (g.members.contains(y) && f.members.is_subset_of(g.members)) {
            covered = true;
            break;
          }
        }
        if (covered) continue;
        b->charge();
        FlatRef g = closure(m, with(f.members, y));
        if (seen.insert(g.members).second) next.push_back(std::move(g));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const FlatRef& a, const FlatRef& c) {
                return a.members < c.members;
              });
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

std::vector<FlatRef> flats_of_rank(const MatroidHandle& m, int k,
                                   SearchBudget* budget) {
  if (k < 0 || k > m.rank())
    throw RankOutOfRange("no flats of rank " + std::to_string(k) +
                         " in a rank-" + std::to_string(m.rank()) +
                         " matroid");
  return std::move(flat_levels(m, k, budget)[k]);
}

std::vector<FlatRef> flats_up_to_rank(const MatroidHandle& m, int k_max,
                                      SearchBudget* budget) {
  if (k_max < 0 || k_max > m.rank())
    throw RankOutOfRange("no flats of rank " + std::to_string(k_max) +
                         " in a rank-" + std::to_string(m.rank()) +
                         " matroid");
  auto levels = flat_levels(m, k_max, budget);
  std::vector<FlatRef> out;
  for (auto& level : levels)
    for (auto& f : level) out.push_back(std::move(f));
  return out;
}

std::vector<PointClass> point_classes(const MatroidHandle& m,
                                      const ElementSet& x) {
  require_subset(m, x);
  std::vector<PointClass> classes;
  ElementSet probe;
  for (int e : x) {
    probe = ElementSet{e};
    if (m.rank_unchecked(probe) == 0) continue;  // loop
    bool placed = false;
    for (PointClass& c : classes) {
      probe = ElementSet{c.representative, e};
      if (m.rank_unchecked(probe) == 1) {
        c.members.insert(e);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(PointClass{e, ElementSet{e}});
  }
  return classes;
}

std::vector<PointClass> point_classes(const MatroidHandle& m) {
  return point_classes(m, m.ground());
}

int epsilon(const MatroidHandle& m, const ElementSet& x) {
  return static_cast<int>(point_classes(m, x).size());
}

int epsilon(const MatroidHandle& m) { return epsilon(m, m.ground()); }

MatroidHandle simplify(const MatroidHandle& m) {
  ElementSet keep;
  for (const PointClass& c : point_classes(m)) keep.insert(c.representative);
  return restriction(m, keep);
}

MatroidHandle deletion(const MatroidHandle& m, const ElementSet& d) {
  require_subset(m, d);
  if (d.empty()) return m;
  ElementSet kept = m.ground() - d;
  const int full = m.rank_unchecked(kept);
  auto n = std::make_shared<detail::DeleteNode>();
  n->parent = m;
  return detail::seal(std::move(n), std::move(kept), m.universe(), full);
}

MatroidHandle contraction(const MatroidHandle& m, const ElementSet& c) {
  require_subset(m, c);
  if (c.empty()) return m;
  const int base = m.rank_unchecked(c);
  auto n = std::make_shared<detail::ContractNode>();
  n->parent = m;
  n->cset = c;
  n->base_rank = base;
  return detail::seal(std::move(n), m.ground() - c, m.universe(),
                      m.rank() - base);
}

MatroidHandle restriction(const MatroidHandle& m, const ElementSet& keep) {
  require_subset(m, keep);
  return deletion(m, m.ground() - keep);
}

std::pair<MatroidHandle, int> principal_extend(const MatroidHandle& m,
                                               const ElementSet& f) {
  if (!is_flat(m, f))
    throw NotAFlat("principal extension needs a flat, got " + f.to_string());
  const int elem = m.universe();
  auto n = std::make_shared<detail::ExtendNode>();
  n->parent = m;
  n->flat = f;
  n->elem = elem;
  MatroidHandle h = detail::seal(std::move(n), with(m.ground(), elem),
                                 elem + 1, m.rank());
  return {std::move(h), elem};
}

MatroidHandle truncate_node(const MatroidHandle& m) {
  if (m.rank() < 1)
    throw RankOutOfRange("cannot truncate a rank-0 matroid");
  auto n = std::make_shared<detail::TruncateNode>();
  n->parent = m;
  return detail::seal(std::move(n), m.ground(), m.universe(), m.rank() - 1);
}

int local_connectivity(const MatroidHandle& m, const ElementSet& x,
                       const ElementSet& y) {
  const int rx = m.rank(x);
  const int ry = m.rank(y);
  return rx + ry - m.rank_unchecked(x | y);
}

bool is_skew(const MatroidHandle& m, const ElementSet& x,
             const ElementSet& y) {
  return local_connectivity(m, x, y) == 0;
}

bool mutually_skew(const MatroidHandle& m, const std::vector<ElementSet>& xs) {
  // Each member must be skew to the union of the others; equivalent to
  // r(union) = sum of ranks, but checked in the definitional form.
  for (size_t i = 0; i < xs.size(); ++i) {
    ElementSet rest;
    for (size_t j = 0; j < xs.size(); ++j)
      if (j != i) rest |= xs[j];
    if (local_connectivity(m, xs[i], rest) != 0) return false;
  }
  return true;
}

bool is_modular_pair(const MatroidHandle& m, const ElementSet& f1,
                     const ElementSet& f2) {
  // Callers pass flats, so meet(F1, F2) = F1 & F2.
  return local_connectivity(m, f1, f2) == m.rank_unchecked(f1 & f2);
}

bool is_modular_flat(const MatroidHandle& m, const ElementSet& f,
                     SearchBudget* budget) {
  if (!is_flat(m, f))
    throw NotAFlat("modularity is defined for flats, got " + f.to_string());
  for (const FlatRef& g : flats_up_to_rank(m, m.rank(), budget)) {
    if (!is_modular_pair(m, f, g.members)) return false;
  }
  return true;
}

namespace {

[[noreturn]] void report_violation(const std::string& what,
                                   const std::vector<ElementSet>& witness) {
  std::string sets;
  for (const ElementSet& s : witness) {
    if (!sets.empty()) sets += ", ";
    sets += s.to_string();
  }
  throw AxiomViolation(what, sets);
}

AnalysisVerdict axiom_check_exhaustive(const MatroidHandle& m) {
  const std::vector<int> els = m.ground().to_vector();
  const int n = static_cast<int>(els.size());
  const size_t total = size_t{1} << n;
  std::vector<int8_t> rk(total);
  std::vector<ElementSet> sets(total);
  for (size_t mask = 0; mask < total; ++mask) {
    ElementSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(els[i]);
    const int r = m.rank_unchecked(s);
    if (r < 0 || r > std::popcount(mask))
      report_violation("rank " + std::to_string(r) + " outside [0, |X|]",
                       {s});
    sets[mask] = std::move(s);
    rk[mask] = static_cast<int8_t>(r);
  }
  for (size_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) continue;
      const int d = rk[mask | (size_t{1} << i)] - rk[mask];
      if (d < 0 || d > 1)
        report_violation("adding one element changed rank by " +
                             std::to_string(d),
                         {sets[mask], sets[mask | (size_t{1} << i)]});
    }
  }
  for (size_t a = 0; a < total; ++a) {
    for (size_t b = a + 1; b < total; ++b) {
      if (rk[a | b] + rk[a & b] > rk[a] + rk[b])
        report_violation("submodularity fails", {sets[a], sets[b]});
    }
  }
  AnalysisVerdict v;
  v.kind = VerdictKind::kBoundHolds;
  v.note = "rank axioms hold on all " + std::to_string(total) + " subsets";
  v.numbers = {static_cast<long long>(total)};
  return v;
}

AnalysisVerdict axiom_check_sampled(const MatroidHandle& m, int trials,
                                    uint64_t seed) {
  SplitMix64 rng(seed);
  const std::vector<int> els = m.ground().to_vector();
  auto sample = [&] {
    ElementSet s;
    for (int e : els)
      if (rng.next() & 1) s.insert(e);
    return s;
  };
  for (int t = 0; t < trials; ++t) {
    ElementSet a = sample();
    ElementSet b = sample();
    const int ra = m.rank_unchecked(a);
    const int rb = m.rank_unchecked(b);
    const int ru = m.rank_unchecked(a | b);
    const int ri = m.rank_unchecked(a & b);
    if (ra < 0 || ra > a.size())
      report_violation("rank " + std::to_string(ra) + " outside [0, |X|]",
                       {a});
    if (ru + ri > ra + rb) report_violation("submodularity fails", {a, b});
    if (ru < ra || ru < rb) report_violation("monotonicity fails", {a, b});
    const int e = els[rng.below_int(static_cast<int>(els.size()))];
    ElementSet ae = with(a, e);
    const int d = m.rank_unchecked(ae) - ra;
    if (d < 0 || d > 1)
      report_violation("adding one element changed rank by " +
                           std::to_string(d),
                       {a, ae});
  }
  AnalysisVerdict v;
  v.kind = VerdictKind::kBoundHolds;
  v.note = "rank axioms hold on " + std::to_string(trials) +
           " sampled subset pairs";
  v.numbers = {trials};
  return v;
}

}  // namespace

AnalysisVerdict axiom_check(const MatroidHandle& m, int trials,
                            uint64_t seed) {
  if (m.size() <= 12) return axiom_check_exhaustive(m);
  return axiom_check_sampled(m, trials, seed);
}

}  // namespace matkit
