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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matkit {

// Set of element identifiers backed by 64-bit words.  Identifiers are small
// non-negative integers.  Invariant: no trailing zero words, so operator==
// and Hash work on the raw word vector.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }

  // {0, 1, ..., n-1}
  static ElementSet full_range(int n) {
    ElementSet s;
    if (n <= 0) return s;
    s.words_.assign((n + 63) / 64, ~uint64_t{0});
    int spare = s.words_.size() * 64 - n;
    if (spare > 0) s.words_.back() >>= spare;
    s.trim();
    return s;
  }

  static ElementSet from_vector(const std::vector<int>& elems) {
    ElementSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  bool contains(int e) const {
    if (e < 0) return false;
    size_t w = static_cast<size_t>(e) / 64;
    return w < words_.size() && ((words_[w] >> (e % 64)) & 1);
  }

  void insert(int e) {
    size_t w = static_cast<size_t>(e) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= uint64_t{1} << (e % 64);
  }

  void erase(int e) {
    size_t w = static_cast<size_t>(e) / 64;
    if (w < words_.size()) {
      words_[w] &= ~(uint64_t{1} << (e % 64));
      trim();
    }
  }

  int size() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const { return words_.empty(); }

  // Smallest element, -1 when empty.
  int smallest() const {
    for (size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  bool is_subset_of(const ElementSet& o) const {
    if (words_.size() > o.words_.size()) return false;
    for (size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    size_t n = std::min(words_.size(), o.words_.size());
    for (size_t w = 0; w < n; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (size_t w = 0; w < o.words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    trim();
    return *this;
  }

  // Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    size_t n = std::min(words_.size(), o.words_.size());
    for (size_t w = 0; w < n; ++w) words_[w] &= ~o.words_[w];
    trim();
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend ElementSet with(ElementSet a, int e) {
    a.insert(e);
    return a;
  }

  friend ElementSet without(ElementSet a, int e) {
    a.erase(e);
    return a;
  }

  bool operator==(const ElementSet& o) const { return words_ == o.words_; }
  bool operator!=(const ElementSet& o) const { return words_ != o.words_; }

  // Lexicographic comparison of the ascending element sequences; used
  // wherever a deterministic ordering of subsets is needed.
  static int compare(const ElementSet& a, const ElementSet& b) {
    size_t nw = std::max(a.words_.size(), b.words_.size());
    for (size_t w = 0; w < nw; ++w) {
      uint64_t wa = w < a.words_.size() ? a.words_[w] : 0;
      uint64_t wb = w < b.words_.size() ? b.words_[w] : 0;
      uint64_t diff = wa ^ wb;
      if (!diff) continue;
      int d = static_cast<int>(w * 64 + std::countr_zero(diff));
      // Elements below d agree.  The side owning d continues with a smaller
      // element, unless the other side has nothing left (prefix wins).
      bool d_in_a = (wa >> (d % 64)) & 1;
      if (d_in_a) return b.has_any_above(d) ? -1 : 1;
      return a.has_any_above(d) ? 1 : -1;
    }
    return 0;
  }

  bool operator<(const ElementSet& o) const { return compare(*this, o) < 0; }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size());
    for (int e : *this) v.push_back(e);
    return v;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  struct Hash {
    size_t operator()(const ElementSet& s) const {
      uint64_t h = 0x9e3779b97f4a7c15ull;
      for (uint64_t w : s.words_) {
        h ^= w;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 29;
      }
      return static_cast<size_t>(h);
    }
  };

  class const_iterator {
   public:
    const_iterator(const std::vector<uint64_t>* words, size_t w, uint64_t cur)
        : words_(words), w_(w), cur_(cur) {
      advance();
    }
    int operator*() const {
      return static_cast<int>(w_ * 64 + std::countr_zero(cur_));
    }
    const_iterator& operator++() {
      cur_ &= cur_ - 1;
      advance();
      return *this;
    }
    bool operator!=(const const_iterator& o) const {
      return w_ != o.w_ || cur_ != o.cur_;
    }

   private:
    void advance() {
      while (!cur_ && w_ + 1 < words_->size()) cur_ = (*words_)[++w_];
      if (!cur_ && w_ + 1 >= words_->size()) w_ = words_->size();
    }
    const std::vector<uint64_t>* words_;
    size_t w_;
    uint64_t cur_;
  };

  const_iterator begin() const {
    return const_iterator(&words_, 0, words_.empty() ? 0 : words_[0]);
  }
  const_iterator end() const { return const_iterator(&words_, words_.size(), 0); }

 private:
  bool has_any_above(int d) const {
    size_t w = static_cast<size_t>(d) / 64;
    if (w < words_.size()) {
      uint64_t high = words_[w] & ~((uint64_t{2} << (d % 64)) - 1);
      if (high) return true;
    }
    for (size_t i = w + 1; i < words_.size(); ++i)
      if (words_[i]) return true;
    return false;
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<uint64_t> words_;
};

}  // namespace matkit
