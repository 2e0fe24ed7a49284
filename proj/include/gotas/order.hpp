#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gotas/element_set.hpp"
#include "gotas/errors.hpp"
#include "gotas/universe.hpp"

namespace gotas {

/// Monotonicity direction: Inc means up-closed under the order, Dec
/// down-closed.
enum class Direction { Inc, Dec };

inline Direction opposite(Direction d) {
  return d == Direction::Inc ? Direction::Dec : Direction::Inc;
}

inline const char* direction_name(Direction d) {
  return d == Direction::Inc ? "inc" : "dec";
}

/// An arbitrary binary relation over one universe, as a deduplicated pair
/// list. This is both the topology generator and the raw input for orders.
class RawRelation {
 public:
  RawRelation(std::size_t universe_size,
              std::vector<std::pair<std::size_t, std::size_t>> pairs)
      : size_(universe_size), pairs_(std::move(pairs)) {
    for (const auto& [a, b] : pairs_) {
      if (a >= size_ || b >= size_)
        throw SchemaError("relation", "pair index out of range");
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  std::size_t universe_size() const { return size_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }

  /// Rows of the relation: after_sets()[x] = { y : (x,y) present }.
  std::vector<ElementSet> after_sets() const {
    std::vector<ElementSet> rows(size_, ElementSet(size_));
    for (const auto& [a, b] : pairs_) rows[a].insert(b);
    return rows;
  }

  bool contains(std::size_t a, std::size_t b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::pair{a, b});
  }

  bool operator==(const RawRelation& o) const {
    return size_ == o.size_ && pairs_ == o.pairs_;
  }

 private:
  std::size_t size_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// A validated partial order with precomputed successor and predecessor sets.
/// Construction goes through validate_partial_order, which is the only place
/// the three axioms are checked.
class PartialOrder {
 public:
  std::size_t universe_size() const { return up_.size(); }

  /// up_set(x) = { y : x <= y }; always contains x.
  const ElementSet& up_set(std::size_t x) const { return up_[x]; }
  /// down_set(x) = { y : y <= x }; always contains x.
  const ElementSet& down_set(std::size_t x) const { return down_[x]; }

  const ElementSet& reach(std::size_t x, Direction d) const {
    return d == Direction::Inc ? up_[x] : down_[x];
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < up_.size(); ++x)
      up_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }

  /// True when the order relates nothing beyond x <= x.
  bool is_equality() const {
    for (std::size_t x = 0; x < up_.size(); ++x) {
      if (up_[x].count() != 1) return false;
    }
    return true;
  }

  bool operator==(const PartialOrder& o) const {
    return up_ == o.up_ && down_ == o.down_;
  }

  friend PartialOrder validate_partial_order(const RawRelation& rel,
                                             const Universe& u);

 private:
  PartialOrder(std::vector<ElementSet> up, std::vector<ElementSet> down)
      : up_(std::move(up)), down_(std::move(down)) {}

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Checks reflexivity, antisymmetry and transitivity, naming the offending
/// elements on failure, and precomputes the per-element up and down sets.
inline PartialOrder validate_partial_order(const RawRelation& rel,
                                           const Universe& u) {
  const std::size_t n = u.size();
  if (rel.universe_size() != n)
    throw SchemaError("order", "relation and universe sizes differ");
  std::vector<ElementSet> up = rel.after_sets();

  for (std::size_t x = 0; x < n; ++x) {
    if (!up[x].contains(x)) throw MissingReflexive(u.label(x));
  }
  for (std::size_t x = 0; x < n; ++x) {
    up[x].for_each([&](std::size_t y) {
      if (y != x && up[y].contains(x))
        throw AntisymmetryViolation(u.label(std::min(x, y)),
                                    u.label(std::max(x, y)));
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    up[x].for_each([&](std::size_t y) {
      if (!up[y].is_subset_of(up[x])) {
        ElementSet missing = up[y] - up[x];
        std::size_t z = missing.to_indices().front();
        throw TransitivityViolation(u.label(x), u.label(y), u.label(z));
      }
    });
  }

  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x)
    up[x].for_each([&](std::size_t y) { down[y].insert(x); });
  return PartialOrder(std::move(up), std::move(down));
}

/// Smallest increasing (union of up-sets) or decreasing (union of down-sets)
/// superset of a.
inline ElementSet order_closure(const PartialOrder& po, const ElementSet& a,
                                Direction dir) {
  ElementSet out(a.width());
  a.for_each([&](std::size_t x) { out |= po.reach(x, dir); });
  return out;
}

/// True iff a is already monotone in the given direction.
inline bool is_monotone(const PartialOrder& po, const ElementSet& a,
                        Direction dir) {
  bool ok = true;
  a.for_each([&](std::size_t x) {
    if (ok && !po.reach(x, dir).is_subset_of(a)) ok = false;
  });
  return ok;
}

/// Greatest monotone subset: { x in a : reach(x) subseteq a }. Dual to
/// order_closure through complementation.
inline ElementSet max_monotone_subset(const PartialOrder& po,
                                      const ElementSet& a, Direction dir) {
  ElementSet out(a.width());
  a.for_each([&](std::size_t x) {
    if (po.reach(x, dir).is_subset_of(a)) out.insert(x);
  });
  return out;
}

}  // namespace gotas
