#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace hyperforge {

/// Subset of a finite carrier {0,...,n-1}, stored as a bitset.
/// All operands of a binary operation must share the same universe size.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElemSet single(int universe, int i) {
    ElemSet s(universe);
    s.insert(i);
    return s;
  }

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  int universe() const { return n_; }

  void insert(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63));
  }

  void erase(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  bool contains(int i) const {
    if (i < 0 || i >= n_) return false;
    return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  /// Smallest member, or -1 when empty.
  int smallest() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  bool is_singleton(int i) const { return count() == 1 && contains(i); }

  ElemSet& operator|=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  ElemSet& operator&=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  ElemSet& subtract(const ElemSet& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  bool intersects(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool is_subset_of(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }

  /// Deterministic total order; usable as a std::map key.
  bool operator<(const ElemSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        int i = static_cast<int>(k * 64 + __builtin_ctzll(w));
        fn(i);
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace hyperforge
