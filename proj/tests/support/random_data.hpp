#pragma once

// Random G-sets, maps and spans shared by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "mackey/gset.hpp"
#include "mackey/span.hpp"

namespace mackey::sample {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// A sum of 1..max_orbits random coset spaces.
inline GSet random_gset(const GroupPtr& g, Rng& rng, std::size_t max_orbits = 2) {
  const auto& classes = conjugacy_classes_of_subgroups(*g);
  GSet out = GSet::empty(g);
  const std::size_t k = 1 + pick(rng, max_orbits);
  for (std::size_t i = 0; i < k; ++i)
    out = disjoint_union(out, orbit_gset(g, g->class_representative(pick(rng, classes.size()))));
  return out;
}

/// A random equivariant map: each orbit's base point goes to a random point fixed by
/// its stabilizer. Nothing when some orbit has no admissible image.
inline std::optional<GMap> random_gmap(const GSet& src, const GSet& dst, Rng& rng) {
  std::vector<Point> images(src.size(), 0);
  const auto& g = *src.group();
  for (const auto& orbit : orbits(src)) {
    const Point base = orbit.front();
    const auto fixed = fixed_point_set(dst, stabilizer(src, base));
    if (fixed.empty()) return std::nullopt;
    const Point y = fixed[pick(rng, fixed.size())];
    for (Elem x = 0; x < g.order(); ++x) images[src.act(x, base)] = dst.act(x, y);
  }
  return GMap::make(src, dst, std::move(images));
}

/// A random span a -> b with a middle of up to `max_orbits` orbits.
inline Span random_general_span(const GSet& a, const GSet& b, Rng& rng, std::size_t max_orbits = 2) {
  for (;;) {
    const GSet c = random_gset(a.group(), rng, max_orbits);
    auto l = random_gmap(c, a, rng);
    auto r = random_gmap(c, b, rng);
    if (l && r) return Span::make(*l, *r);
  }
}

/// Mixes general spans with the structural ones: identities and spans with one
/// identity leg (the forward and backward spans of G-maps).
inline Span random_span(const GSet& a, const GSet& b, Rng& rng) {
  switch (pick(rng, 4)) {
    case 0:
      if (a == b && pick(rng, 2) == 0) return Span::identity(a);
      [[fallthrough]];
    case 1:
      if (auto f = random_gmap(a, b, rng)) return Span::make(GMap::identity(a), *f);
      break;
    case 2:
      if (auto f = random_gmap(b, a, rng)) return Span::make(*f, GMap::identity(b));
      break;
    default:
      break;
  }
  return random_general_span(a, b, rng);
}

/// Transports the middle along a random relabeling; the result is isomorphic to s.
inline Span relabel_middle(const Span& s, Rng& rng) {
  const GSet& c = s.middle();
  const std::size_t n = c.size();
  std::vector<Point> sigma(n);
  std::iota(sigma.begin(), sigma.end(), Point{0});
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<Point> inv(n);
  for (Point i = 0; i < n; ++i) inv[sigma[i]] = i;
  const std::size_t order = c.group()->order();
  std::vector<Point> table(order * n);
  for (Elem x = 0; x < order; ++x)
    for (Point i = 0; i < n; ++i) table[x * n + sigma[i]] = sigma[c.act(x, i)];
  const GSet c2 = GSet::from_table(c.group(), n, std::move(table));
  std::vector<Point> l(n), r(n);
  for (Point i = 0; i < n; ++i) {
    l[i] = s.left()(inv[i]);
    r[i] = s.right()(inv[i]);
  }
  return Span::make(GMap::make(c2, s.source(), std::move(l)), GMap::make(c2, s.target(), std::move(r)));
}

/// Brute-force subgroup list: every subset closed under multiplication containing the
/// identity. Only for |G| <= 12.
inline std::vector<std::vector<Elem>> brute_force_subgroups(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // identity is element 0
    std::vector<Elem> s;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1u) s.push_back(x);
    bool closed = true;
    for (Elem a : s) {
      for (Elem b : s)
        if (!(mask >> g.multiply(a, b) & 1u)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

/// Number of conjugacy classes of subgroups of s under conjugation by s, by brute force.
inline std::size_t brute_force_subgroup_classes(const Group& g, const std::vector<Elem>& s) {
  std::vector<std::vector<Elem>> subs;
  for (const auto& h : brute_force_subgroups(g))
    if (std::includes(s.begin(), s.end(), h.begin(), h.end())) subs.push_back(h);
  std::vector<bool> seen(subs.size(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (Elem x : s) {
      std::vector<Elem> c;
      for (Elem h : subs[i]) c.push_back(g.conjugate(x, h));
      std::sort(c.begin(), c.end());
      for (std::size_t j = i; j < subs.size(); ++j)
        if (subs[j] == c) seen[j] = true;
    }
  }
  return classes;
}

/// Iso classes of transitive spans G/L -> a x b by brute force: every subgroup
/// representative and every pair of points fixed by it, deduplicated with span_iso.
inline std::size_t brute_force_span_classes(const GSet& a, const GSet& b) {
  const auto& g = a.group();
  std::vector<Span> reps;
  for (std::size_t l = 0; l < conjugacy_classes_of_subgroups(*g).size(); ++l) {
    const Subgroup& h = g->class_representative(l);
    for (Point x : fixed_point_set(a, h))
      for (Point y : fixed_point_set(b, h)) {
        const Span s = representative_span(a, b, {l, x, y});
        bool fresh = true;
        for (const auto& t : reps)
          if (span_iso(s, t)) {
            fresh = false;
            break;
          }
        if (fresh) reps.push_back(s);
      }
  }
  return reps.size();
}

}  // namespace mackey::sample
