#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "tiletopo/cell.hpp"
#include "tiletopo/error.hpp"

namespace tiletopo {

namespace detail {

/// Fixed-capacity bit vector with word-level set algebra.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t capacity() const { return bits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { words_.assign(words_.size(), 0); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  BitVec& operator|=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator-=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool intersects(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t count_and(const BitVec& o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return n;
  }

  /// True when every set bit is also set in `o`.
  bool subset_of(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        fn(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// A subset of the cells of one window, with bitset semantics.
/// Sets from different windows (layouts) must not be mixed.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(const CellLayout& layout)
      : layout_(layout), bits_(layout.total()) {}

  const CellLayout& layout() const { return layout_; }

  bool contains(CellRef c) const {
    return layout_.contains(c) && bits_.test(layout_.id(c));
  }
  bool contains_id(CellId id) const { return bits_.test(id); }

  void insert(CellRef c) {
    if (!layout_.contains(c))
      throw std::out_of_range("CellSet::insert: cell outside window layout");
    bits_.set(layout_.id(c));
  }
  void insert_id(CellId id) { bits_.set(id); }
  void erase(CellRef c) {
    if (layout_.contains(c)) bits_.reset(layout_.id(c));
  }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  CellSet& operator|=(const CellSet& o) { check(o); bits_ |= o.bits_; return *this; }
  CellSet& operator&=(const CellSet& o) { check(o); bits_ &= o.bits_; return *this; }
  CellSet& operator-=(const CellSet& o) { check(o); bits_ -= o.bits_; return *this; }

  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }

  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.layout_ == b.layout_ && a.bits_ == b.bits_;
  }

  bool intersects(const CellSet& o) const { check(o); return bits_.intersects(o.bits_); }
  bool subset_of(const CellSet& o) const { check(o); return bits_.subset_of(o.bits_); }

  /// Members in canonical (kind, index) order.
  std::vector<CellRef> cells() const {
    std::vector<CellRef> out;
    out.reserve(size());
    bits_.for_each_set([&](std::size_t id) {
      out.push_back(layout_.ref(static_cast<CellId>(id)));
    });
    return out;
  }

  /// Member ids in ascending order.
  std::vector<CellId> ids() const {
    std::vector<CellId> out;
    out.reserve(size());
    bits_.for_each_set([&](std::size_t id) { out.push_back(static_cast<CellId>(id)); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    bits_.for_each_set([&](std::size_t id) {
      fn(layout_.ref(static_cast<CellId>(id)));
    });
  }

  /// Count of members of one kind.
  std::size_t count_kind(CellKind k) const {
    std::size_t n = 0;
    for_each([&](CellRef c) { n += (c.kind == k) ? 1 : 0; });
    return n;
  }

  const detail::BitVec& bits() const { return bits_; }
  detail::BitVec& bits() { return bits_; }

 private:
  void check(const CellSet& o) const {
    if (!(layout_ == o.layout_))
      throw std::invalid_argument("CellSet: operands belong to different windows");
  }

  CellLayout layout_;
  detail::BitVec bits_;
};

inline CellSet make_cell_set(const CellLayout& layout, std::initializer_list<CellRef> cells) {
  CellSet s(layout);
  for (CellRef c : cells) s.insert(c);
  return s;
}

}  // namespace tiletopo
