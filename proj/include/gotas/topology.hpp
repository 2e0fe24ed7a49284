#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gotas/element_set.hpp"
#include "gotas/errors.hpp"
#include "gotas/order.hpp"
#include "gotas/universe.hpp"

namespace gotas {

/// Default ceiling for full open-family enumeration (2^|base| combinations).
inline constexpr std::size_t kDefaultEnumCap = std::size_t{1} << 20;

/// Guard against pathological generator families: the intersection closure is
/// abandoned beyond this many members.
inline constexpr std::size_t kMaxBaseMembers = std::size_t{1} << 16;

/// Canonical base of a finite topology: sorted, deduplicated, contains the
/// whole universe and is closed under pairwise intersection. The empty set is
/// allowed as a member.
class TopologyBase {
 public:
  static TopologyBase from_family(const std::vector<ElementSet>& sets,
                                  std::size_t width) {
    std::set<ElementSet> family(sets.begin(), sets.end());
    family.insert(ElementSet::full_set(width));
    // Close under pairwise intersection; a worklist is enough because every
    // finite intersection factors through pairwise ones.
    std::vector<ElementSet> work(family.begin(), family.end());
    while (!work.empty()) {
      ElementSet s = std::move(work.back());
      work.pop_back();
      for (const auto& t : family) {
        ElementSet meet = s & t;
        if (!family.count(meet)) {
          if (family.size() >= kMaxBaseMembers) throw CapExceeded(family.size());
          family.insert(meet);
          work.push_back(std::move(meet));
        }
      }
    }
    TopologyBase base;
    base.width_ = width;
    base.members_.assign(family.begin(), family.end());
    return base;
  }

  std::size_t width() const { return width_; }
  const std::vector<ElementSet>& members() const { return members_; }

  bool operator==(const TopologyBase& o) const {
    return width_ == o.width_ && members_ == o.members_;
  }

 private:
  std::size_t width_ = 0;
  std::vector<ElementSet> members_;
};

/// Base from an explicit generator family (sets are taken verbatim, then the
/// universe is added and the family is intersection-closed).
inline TopologyBase base_from_family(const std::vector<ElementSet>& sets,
                                     const Universe& u) {
  for (const auto& s : sets) {
    if (s.width() != u.size())
      throw SchemaError("base", "member width does not match the universe");
  }
  return TopologyBase::from_family(sets, u.size());
}

/// Base generated by a relation through its after-sets xR = { y : x R y }.
///
/// Instead of intersection-closing the raw after-set family (which can
/// explode for dense relations), this first reduces to the minimal
/// neighbourhoods N(x) = intersection of the after-sets containing x. Each
/// N(x) is itself a finite intersection of after-sets, and every after-set is
/// a union of N(x)'s, so the generated topology is identical and every
/// after-set stays open.
inline TopologyBase base_from_relation(const RawRelation& rel,
                                       const Universe& u) {
  if (rel.universe_size() != u.size())
    throw SchemaError("relation", "relation and universe sizes differ");
  const std::size_t n = u.size();
  std::vector<ElementSet> rows = rel.after_sets();
  std::vector<ElementSet> nbhd(n, ElementSet::full_set(n));
  for (const auto& row : rows) {
    row.for_each([&](std::size_t x) { nbhd[x] &= row; });
  }
  return TopologyBase::from_family(nbhd, u.size());
}

/// Finite topology over a universe. Interior and closure queries go through
/// the minimal-neighbourhood table: x lies in the interior of A exactly when
/// its smallest open neighbourhood fits inside A.
class FiniteTopology {
 public:
  FiniteTopology(Universe universe, TopologyBase base)
      : universe_(std::move(universe)), base_(std::move(base)) {
    if (base_.width() != universe_.size())
      throw SchemaError("topology", "base and universe sizes differ");
    const std::size_t n = universe_.size();
    nbhd_.assign(n, ElementSet::full_set(n));
    for (const auto& member : base_.members()) {
      member.for_each([&](std::size_t x) { nbhd_[x] &= member; });
    }
  }

  const Universe& universe() const { return universe_; }
  const TopologyBase& base() const { return base_; }

  /// Smallest open set containing element x.
  const ElementSet& neighbourhood(std::size_t x) const { return nbhd_[x]; }

  bool operator==(const FiniteTopology& o) const {
    return universe_ == o.universe_ && base_ == o.base_;
  }

 private:
  Universe universe_;
  TopologyBase base_;
  std::vector<ElementSet> nbhd_;
};

/// Greatest open subset of a.
inline ElementSet interior(const FiniteTopology& t, const ElementSet& a) {
  ElementSet out(a.width());
  a.for_each([&](std::size_t x) {
    if (t.neighbourhood(x).is_subset_of(a)) out.insert(x);
  });
  return out;
}

/// Smallest closed superset of a (complement-dual of interior).
inline ElementSet closure(const FiniteTopology& t, const ElementSet& a) {
  ElementSet out(a.width());
  for (std::size_t x = 0; x < a.width(); ++x) {
    if (t.neighbourhood(x).intersects(a)) out.insert(x);
  }
  return out;
}

inline bool is_open(const FiniteTopology& t, const ElementSet& a) {
  return interior(t, a) == a;
}

inline bool is_closed(const FiniteTopology& t, const ElementSet& a) {
  return closure(t, a) == a;
}

/// A finite universe together with a relation-generated topology and a
/// partial order. Input to every approximation operator.
struct Gotas {
  Universe universe;
  FiniteTopology topology;
  PartialOrder order;
  /// Present when the instance was built from a relation rather than an
  /// explicit base; carried for serialization.
  std::optional<RawRelation> relation;

  Gotas(Universe u, FiniteTopology t, PartialOrder o,
        std::optional<RawRelation> rel = std::nullopt)
      : universe(std::move(u)),
        topology(std::move(t)),
        order(std::move(o)),
        relation(std::move(rel)) {
    if (topology.universe().size() != universe.size() ||
        order.universe_size() != universe.size())
      throw SchemaError("space", "topology, order and universe sizes differ");
  }
};

/// Greatest open monotone subset of a, by alternating the topological
/// interior with the greatest-monotone-subset restriction until stable.
/// Each step shrinks, so at most |U| iterations happen; the fixpoint is open,
/// monotone, and contains every open monotone subset of a.
inline ElementSet directed_interior(const Gotas& g, const ElementSet& a,
                                    Direction dir) {
  ElementSet x = a;
  for (;;) {
    ElementSet next = max_monotone_subset(g.order, interior(g.topology, x), dir);
    if (next == x) return x;
    x = std::move(next);
  }
}

/// Smallest closed monotone superset of a; dual fixpoint, growing through
/// topological closure and monotone closure.
inline ElementSet directed_closure(const Gotas& g, const ElementSet& a,
                                   Direction dir) {
  ElementSet x = a;
  for (;;) {
    ElementSet next = order_closure(g.order, closure(g.topology, x), dir);
    if (next == x) return x;
    x = std::move(next);
  }
}

/// Materializes the full open family: every union of base members plus the
/// empty set. Exponential in the base size, hence the cap; this exists as a
/// test oracle, not a fast path.
inline std::vector<ElementSet> enumerate_open_family(
    const FiniteTopology& t, std::size_t cap = kDefaultEnumCap) {
  const auto& members = t.base().members();
  const std::size_t k = members.size();
  if (k >= 63 || (std::size_t{1} << k) > cap) throw CapExceeded(k);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ElementSet u(t.universe().size());
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) u |= members[i];
    }
    seen.insert(std::move(u));
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

enum class SetOperator { Interior, Closure };

/// Enumeration-based reference for the directed operators: filter the open
/// (resp. closed) family down to the monotone members and take the union of
/// those inside a (resp. the intersection of those covering a).
inline ElementSet oracle_directed(const Gotas& g, const ElementSet& a,
                                  Direction dir, SetOperator which,
                                  std::size_t cap = kDefaultEnumCap) {
  const std::vector<ElementSet> opens = enumerate_open_family(g.topology, cap);
  if (which == SetOperator::Interior) {
    ElementSet out(a.width());
    for (const auto& o : opens) {
      if (is_monotone(g.order, o, dir) && o.is_subset_of(a)) out |= o;
    }
    return out;
  }
  ElementSet out = ElementSet::full_set(a.width());
  for (const auto& o : opens) {
    ElementSet closed = o.complement();
    if (is_monotone(g.order, closed, dir) && a.is_subset_of(closed))
      out &= closed;
  }
  return out;
}

}  // namespace gotas
