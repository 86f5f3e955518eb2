#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "surfbasis/error.hpp"

namespace surfbasis {

// Characteristic vector of an edge subset over a fixed edge universe; an
// element of F_2^|E|. Addition is symmetric difference.
class EdgeVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  EdgeVector() = default;
  explicit EdgeVector(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  static EdgeVector from_edges(std::size_t universe, std::span<const int> edges) {
    EdgeVector v(universe);
    for (int e : edges) v.flip(static_cast<std::size_t>(e));
    return v;
  }
  static EdgeVector from_edges(std::size_t universe, std::initializer_list<int> edges) {
    return from_edges(universe, std::span<const int>(edges.begin(), edges.size()));
  }

  std::size_t universe() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }

  // Smallest edge id in the set, or npos.
  std::size_t lowest() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
  }

  std::vector<int> ones() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  EdgeVector& operator^=(const EdgeVector& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  EdgeVector& operator&=(const EdgeVector& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  EdgeVector& operator|=(const EdgeVector& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  EdgeVector& operator-=(const EdgeVector& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend EdgeVector operator^(EdgeVector a, const EdgeVector& b) { return a ^= b; }
  friend EdgeVector operator&(EdgeVector a, const EdgeVector& b) { return a &= b; }
  friend EdgeVector operator|(EdgeVector a, const EdgeVector& b) { return a |= b; }
  friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }

  bool is_subset_of(const EdgeVector& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  bool operator==(const EdgeVector&) const = default;

  // Order by (popcount, lexicographic list of edge ids).
  friend bool canonical_less(const EdgeVector& a, const EdgeVector& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    auto oa = a.ones(), ob = b.ones();
    return oa < ob;
  }

  friend std::ostream& operator<<(std::ostream& os, const EdgeVector& v) {
    os << '{';
    bool first = true;
    for (int e : v.ones()) {
      os << (first ? "" : ",") << e;
      first = false;
    }
    return os << '}';
  }

 private:
  void check_universe(const EdgeVector& o) const {
    if (o.size_ != size_)
      throw Error(ErrorKind::UniverseMismatch,
                  "edge universes differ (" + std::to_string(size_) + " vs " + std::to_string(o.size_) + ")");
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline EdgeVector add(const EdgeVector& a, const EdgeVector& b) { return a ^ b; }

// Incremental reduced row echelon form over GF(2). Each row owns a pivot edge
// (the smallest edge of the reduced vector at insertion time) that appears in
// no other row, so a single pass reduces any query vector.
class GaussianBasis {
 public:
  explicit GaussianBasis(std::size_t universe) : universe_(universe) {}

  std::size_t universe() const noexcept { return universe_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<EdgeVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  // One entry per insert_if_independent call: whether that call inserted.
  const std::vector<bool>& log() const noexcept { return log_; }

  EdgeVector reduce(EdgeVector v) const {
    check(v);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.test(pivots_[i])) v ^= rows_[i];
    return v;
  }

  bool in_span(const EdgeVector& v) const { return reduce(v).none(); }

  bool insert_if_independent(const EdgeVector& v) {
    EdgeVector r = reduce(v);
    if (r.none()) {
      log_.push_back(false);
      return false;
    }
    std::size_t p = r.lowest();
    for (auto& row : rows_)
      if (row.test(p)) row ^= r;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    log_.push_back(true);
    return true;
  }

 private:
  void check(const EdgeVector& v) const {
    if (v.universe() != universe_)
      throw Error(ErrorKind::UniverseMismatch, "vector universe " + std::to_string(v.universe()) +
                                                   " does not match basis universe " + std::to_string(universe_));
  }

  std::size_t universe_;
  std::vector<EdgeVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> log_;
};

inline std::size_t rank_of(std::size_t universe, std::span<const EdgeVector> vectors) {
  GaussianBasis gb(universe);
  for (const auto& v : vectors) gb.insert_if_independent(v);
  return gb.rank();
}

}  // namespace surfbasis
