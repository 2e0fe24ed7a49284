#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gotas/element_set.hpp"
#include "gotas/errors.hpp"
#include "gotas/rational.hpp"
#include "gotas/topology.hpp"

namespace gotas {

/// The four approximation operator families. R is the directed
/// interior/closure pair itself; S, P and Alpha are the near operators built
/// by composing it.
enum class ApproxKind { R, S, P, Alpha };

inline constexpr std::array<ApproxKind, 4> kAllKinds = {
    ApproxKind::R, ApproxKind::S, ApproxKind::P, ApproxKind::Alpha};

inline const char* kind_name(ApproxKind k) {
  switch (k) {
    case ApproxKind::R: return "r";
    case ApproxKind::S: return "s";
    case ApproxKind::P: return "p";
    case ApproxKind::Alpha: return "alpha";
  }
  return "?";
}

/// Which upper approximation the negative region complements: Cross uses the
/// opposite direction's upper set, Same the same direction's.
enum class NegConvention { Cross, Same };

/// Lower approximation of a for the given kind and direction.
///
///   R:     dint(a)
///   S:     a ∩ dcl(dint(a))
///   P:     a ∩ dint(dcl(a))
///   Alpha: a ∩ dint(dcl(dint(a)))
///
/// where dint/dcl are the directed interior and closure.
inline ElementSet lower(const Gotas& g, const ElementSet& a, ApproxKind kind,
                        Direction dir) {
  switch (kind) {
    case ApproxKind::R:
      return directed_interior(g, a, dir);
    case ApproxKind::S:
      return a & directed_closure(g, directed_interior(g, a, dir), dir);
    case ApproxKind::P:
      return a & directed_interior(g, directed_closure(g, a, dir), dir);
    case ApproxKind::Alpha:
      return a & directed_interior(
                     g, directed_closure(g, directed_interior(g, a, dir), dir),
                     dir);
  }
  return a;
}

/// Upper approximation; mirror images of the lower formulas.
inline ElementSet upper(const Gotas& g, const ElementSet& a, ApproxKind kind,
                        Direction dir) {
  switch (kind) {
    case ApproxKind::R:
      return directed_closure(g, a, dir);
    case ApproxKind::S:
      return a | directed_interior(g, directed_closure(g, a, dir), dir);
    case ApproxKind::P:
      return a | directed_closure(g, directed_interior(g, a, dir), dir);
    case ApproxKind::Alpha:
      return a | directed_closure(
                     g, directed_interior(g, directed_closure(g, a, dir), dir),
                     dir);
  }
  return a;
}

inline ElementSet boundary(const Gotas& g, const ElementSet& a,
                           ApproxKind kind, Direction dir) {
  return upper(g, a, kind, dir) - lower(g, a, kind, dir);
}

inline ElementSet positive(const Gotas& g, const ElementSet& a,
                           ApproxKind kind, Direction dir) {
  return lower(g, a, kind, dir);
}

inline ElementSet negative(const Gotas& g, const ElementSet& a,
                           ApproxKind kind, Direction dir,
                           NegConvention conv = NegConvention::Cross) {
  Direction ud = conv == NegConvention::Cross ? opposite(dir) : dir;
  return upper(g, a, kind, ud).complement();
}

inline bool is_exact(const Gotas& g, const ElementSet& a, ApproxKind kind,
                     Direction dir) {
  return lower(g, a, kind, dir) == upper(g, a, kind, dir);
}

/// |lower| / |upper| as an exact rational. Undefined (an error) for the empty
/// set; the upper set of a nonempty set is nonempty, so the ratio is always
/// well formed.
inline Rational accuracy(const Gotas& g, const ElementSet& a, ApproxKind kind,
                         Direction dir) {
  if (a.empty()) throw EmptySetAccuracy();
  const auto lo = lower(g, a, kind, dir).count();
  const auto up = upper(g, a, kind, dir).count();
  return Rational(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(up));
}

/// One (kind, direction) slice of a full report.
struct KindReport {
  ApproxKind kind;
  Direction dir;
  ElementSet lower;
  ElementSet upper;
  ElementSet boundary;
  ElementSet positive;
  ElementSet negative_cross;
  ElementSet negative_same;
  bool exact = false;
  std::optional<Rational> accuracy;  // absent for the empty input set
};

/// All four kinds in both directions, evaluated in one pass.
struct ApproxReport {
  ElementSet input;
  std::vector<KindReport> entries;  // fixed order: R,S,P,Alpha x Inc,Dec

  const KindReport& entry(ApproxKind k, Direction d) const {
    for (const auto& e : entries) {
      if (e.kind == k && e.dir == d) return e;
    }
    throw GotasError("report entry missing");
  }
};

inline ApproxReport report(const Gotas& g, const ElementSet& a) {
  ApproxReport r;
  r.input = a;
  for (ApproxKind k : kAllKinds) {
    for (Direction d : {Direction::Inc, Direction::Dec}) {
      KindReport e;
      e.kind = k;
      e.dir = d;
      e.lower = lower(g, a, k, d);
      e.upper = upper(g, a, k, d);
      e.boundary = e.upper - e.lower;
      e.positive = e.lower;
      e.negative_cross = negative(g, a, k, d, NegConvention::Cross);
      e.negative_same = negative(g, a, k, d, NegConvention::Same);
      e.exact = e.lower == e.upper;
      if (!a.empty())
        e.accuracy = Rational(static_cast<std::int64_t>(e.lower.count()),
                              static_cast<std::int64_t>(e.upper.count()));
      r.entries.push_back(std::move(e));
    }
  }
  return r;
}

}  // namespace gotas
