#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace gotas {

/// Subset of a fixed-size universe, stored as a packed word array.
///
/// The width is the universe size; two sets may only be combined when their
/// widths agree. All operations are value-returning and leave their operands
/// untouched, so sets can be shared freely across threads.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  static ElementSet empty_set(std::size_t width) { return ElementSet(width); }

  static ElementSet full_set(std::size_t width) {
    ElementSet s(width);
    for (auto& w : s.words_) w = ~0ull;
    s.trim();
    return s;
  }

  static ElementSet singleton(std::size_t width, std::size_t i) {
    ElementSet s(width);
    s.insert(i);
    return s;
  }

  std::size_t width() const { return width_; }

  bool contains(std::size_t i) const {
    assert(i < width_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void insert(std::size_t i) {
    assert(i < width_);
    words_[i >> 6] |= 1ull << (i & 63);
  }

  void erase(std::size_t i) {
    assert(i < width_);
    words_[i >> 6] &= ~(1ull << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_full() const { return count() == width_; }

  ElementSet operator|(const ElementSet& o) const {
    assert(width_ == o.width_);
    ElementSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
    return r;
  }

  ElementSet operator&(const ElementSet& o) const {
    assert(width_ == o.width_);
    ElementSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }

  /// Set difference (elements of *this not in o).
  ElementSet operator-(const ElementSet& o) const {
    assert(width_ == o.width_);
    ElementSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] &= ~o.words_[k];
    return r;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  ElementSet complement() const {
    ElementSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool is_subset_of(const ElementSet& o) const {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  bool intersects(const ElementSet& o) const {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }

  bool operator==(const ElementSet& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  /// Canonical order: by cardinality, then by the ascending index sequence.
  /// Used to give set families a stable, diffable ordering.
  bool operator<(const ElementSet& o) const {
    assert(width_ == o.width_);
    std::size_t ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t d = words_[k] ^ o.words_[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (words_[k] & low) != 0;  // owning the lowest differing index wins
      }
    }
    return false;
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = width_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (width_ % 64 != 0 && !words_.empty())
      words_.back() &= (~0ull >> (64 - width_ % 64));
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace gotas
