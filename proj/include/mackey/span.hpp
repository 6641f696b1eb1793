#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "mackey/gset.hpp"

namespace mackey {

/// A span A <- C -> B of G-sets. `left` is C -> A and `right` is C -> B.
class Span {
 public:
  Span() = default;
  /// Throws InputError when the legs do not share their source.
  static Span make(GMap left, GMap right);
  static Span identity(const GSet& a);
  static Span zero(const GSet& a, const GSet& b);

  const GMap& left() const { return left_; }
  const GMap& right() const { return right_; }
  const GSet& source() const { return left_.target(); }
  const GSet& target() const { return right_.target(); }
  const GSet& middle() const { return left_.source(); }

  friend bool operator==(const Span&, const Span&) = default;

 private:
  GMap left_;
  GMap right_;
};

/// t after s, for s: A -> B and t: B -> E, by the chosen pullback.
///
/// An identity right leg of s makes the middle of t the pullback verbatim, and an
/// identity left leg of t does the same for s. Otherwise the middle is
/// {(c, d) : s.right(c) = t.left(d)} numbered in lexicographic order.
Span compose_spans(const Span& s, const Span& t);

/// Block sum of middles; requires equal endpoints.
Span disjoint_union_spans(const Span& s, const Span& t);

/// An isomorphism of middles commuting with both legs, when one exists.
std::optional<GMap> span_iso(const Span& s, const Span& t);

/// Iso class of a transitive span G/L -> A x B: L is a subgroup-class index and (a, b)
/// the least image pair of a base point whose stabilizer is the class representative.
struct TransitiveSpanKey {
  std::size_t L = 0;
  Point a = 0;
  Point b = 0;

  friend auto operator<=>(const TransitiveSpanKey&, const TransitiveSpanKey&) = default;
};

struct SpanClass {
  GSet source;
  GSet target;
  std::vector<TransitiveSpanKey> keys;  // sorted multiset

  friend bool operator==(const SpanClass&, const SpanClass&) = default;
};

SpanClass canonicalize_span(const Span& s);

/// One key per iso class of transitive spans from A to B, sorted.
///
/// For each class representative L, the keys are the orbits of the Weyl group
/// N(L)/L on Fix(A, L) x Fix(B, L).
std::vector<TransitiveSpanKey> transitive_span_basis(const GSet& a, const GSet& b);

/// The span G/L <- ... realizing a key: middle G/L, legs gL -> g.a and gL -> g.b.
Span representative_span(const GSet& a, const GSet& b, const TransitiveSpanKey& key);

}  // namespace mackey
