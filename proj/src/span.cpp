#include "mackey/span.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "mackey/errors.hpp"

namespace mackey {

Span Span::make(GMap left, GMap right) {
  if (!(left.source() == right.source()))
    throw InputError("span legs have different sources");
  Span s;
  s.left_ = std::move(left);
  s.right_ = std::move(right);
  return s;
}

Span Span::identity(const GSet& a) { return make(GMap::identity(a), GMap::identity(a)); }

Span Span::zero(const GSet& a, const GSet& b) {
  auto e = GSet::empty(a.group());
  return make(GMap::make(e, a, {}), GMap::make(e, b, {}));
}

namespace {

class PairIndex {
 public:
  PairIndex(std::size_t nc, std::size_t nd) : nd_(nd), dense_(nc * nd <= kDenseLimit) {
    if (dense_) table_.assign(nc * nd, kNone);
  }
  void set(Point c, Point d, Point k) {
    if (dense_) table_[std::size_t{c} * nd_ + d] = k;
    else sparse_[std::uint64_t{c} * nd_ + d] = k;
  }
  Point get(Point c, Point d) const {
    if (dense_) return table_[std::size_t{c} * nd_ + d];
    return sparse_.at(std::uint64_t{c} * nd_ + d);
  }

 private:
  static constexpr std::size_t kDenseLimit = std::size_t{1} << 22;
  static constexpr Point kNone = static_cast<Point>(-1);
  std::size_t nd_;
  bool dense_;
  std::vector<Point> table_;
  std::unordered_map<std::uint64_t, Point> sparse_;
};

}  // namespace

Span compose_spans(const Span& s, const Span& t) {
  if (!(s.target() == t.source())) throw InputError("compose_spans: spans are not composable");
  if (s.right().is_identity())
    return Span::make(compose(s.left(), t.left()), t.right());
  if (t.left().is_identity())
    return Span::make(s.left(), compose(t.right(), s.right()));

  const GSet& c = s.middle();
  const GSet& d = t.middle();
  std::vector<std::vector<Point>> over(s.target().size());
  for (Point j = 0; j < d.size(); ++j) over[t.left()(j)].push_back(j);

  std::vector<std::pair<Point, Point>> pairs;
  PairIndex index(c.size(), d.size());
  for (Point i = 0; i < c.size(); ++i)
    for (Point j : over[s.right()(i)]) {
      index.set(i, j, static_cast<Point>(pairs.size()));
      pairs.emplace_back(i, j);
    }

  const std::size_t n = pairs.size();
  const std::size_t order = c.group()->order();
  std::vector<Point> table(order * n);
  for (Elem g = 0; g < order; ++g)
    for (std::size_t k = 0; k < n; ++k)
      table[g * n + k] = index.get(c.act(g, pairs[k].first), d.act(g, pairs[k].second));
  auto middle = GSet::from_table(c.group(), n, std::move(table));

  std::vector<Point> left(n), right(n);
  for (std::size_t k = 0; k < n; ++k) {
    left[k] = s.left()(pairs[k].first);
    right[k] = t.right()(pairs[k].second);
  }
  return Span::make(GMap::make(middle, s.source(), std::move(left)),
                    GMap::make(middle, t.target(), std::move(right)));
}

Span disjoint_union_spans(const Span& s, const Span& t) {
  if (!(s.source() == t.source()) || !(s.target() == t.target()))
    throw InputError("disjoint_union_spans: spans have different endpoints");
  auto middle = disjoint_union(s.middle(), t.middle());
  auto join = [](const GMap& f, const GMap& g) {
    auto im = f.images();
    im.insert(im.end(), g.images().begin(), g.images().end());
    return im;
  };
  return Span::make(GMap::make(middle, s.source(), join(s.left(), t.left())),
                    GMap::make(middle, s.target(), join(s.right(), t.right())));
}

namespace {

struct KeyedOrbit {
  TransitiveSpanKey key;
  Point base = 0;
};

std::vector<KeyedOrbit> keyed_orbits(const Span& s) {
  const GSet& c = s.middle();
  const Group& g = *c.group();
  std::vector<KeyedOrbit> out;
  for (const auto& slot : decompose(c).slots) {
    const Subgroup& rep = g.class_representative(slot.class_index);
    KeyedOrbit best;
    bool found = false;
    for (Point p : slot.points) {
      bool fixed = true;
      for (Elem h : rep.elements)
        if (c.act(h, p) != p) {
          fixed = false;
          break;
        }
      if (!fixed) continue;
      TransitiveSpanKey key{slot.class_index, s.left()(p), s.right()(p)};
      if (!found || key < best.key) {
        best = KeyedOrbit{key, p};
        found = true;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace

SpanClass canonicalize_span(const Span& s) {
  SpanClass cls{s.source(), s.target(), {}};
  for (const auto& ko : keyed_orbits(s)) cls.keys.push_back(ko.key);
  std::sort(cls.keys.begin(), cls.keys.end());
  return cls;
}

std::optional<GMap> span_iso(const Span& s, const Span& t) {
  if (!(s.source() == t.source()) || !(s.target() == t.target())) return std::nullopt;
  if (s.middle().size() != t.middle().size()) return std::nullopt;
  auto ks = keyed_orbits(s);
  auto kt = keyed_orbits(t);
  if (ks.size() != kt.size()) return std::nullopt;

  std::multimap<TransitiveSpanKey, Point> pool;
  for (const auto& ko : kt) pool.emplace(ko.key, ko.base);
  const GSet& cs = s.middle();
  const GSet& ct = t.middle();
  std::vector<Point> images(cs.size());
  for (const auto& ko : ks) {
    auto it = pool.find(ko.key);
    if (it == pool.end()) return std::nullopt;
    // Both base points have the same stabilizer, so g.base -> g.base' is well defined.
    for (Elem g = 0; g < cs.group()->order(); ++g) images[cs.act(g, ko.base)] = ct.act(g, it->second);
    pool.erase(it);
  }
  auto phi = GMap::make(cs, ct, std::move(images));
  for (Point p = 0; p < cs.size(); ++p)
    if (t.left()(phi(p)) != s.left()(p) || t.right()(phi(p)) != s.right()(p)) return std::nullopt;
  return phi;
}

std::vector<TransitiveSpanKey> transitive_span_basis(const GSet& a, const GSet& b) {
  if (!(a.group() == b.group() || *a.group() == *b.group()))
    throw InputError("transitive_span_basis: G-sets over different groups");
  const Group& g = *a.group();
  std::vector<TransitiveSpanKey> out;
  const auto& classes = g.subgroup_classes();
  for (std::size_t cls = 0; cls < classes.size(); ++cls) {
    const Subgroup& rep = g.class_representative(cls);
    const auto fa = fixed_point_set(a, rep);
    const auto fb = fixed_point_set(b, rep);
    if (fa.empty() || fb.empty()) continue;
    const Subgroup& norm = g.normalizer(classes[cls].representative);
    std::set<std::pair<Point, Point>> seen;
    for (Point x : fa)
      for (Point y : fb) {
        if (seen.count({x, y})) continue;
        out.push_back(TransitiveSpanKey{cls, x, y});
        for (Elem n : norm.elements) seen.emplace(a.act(n, x), b.act(n, y));
      }
  }
  return out;
}

Span representative_span(const GSet& a, const GSet& b, const TransitiveSpanKey& key) {
  const auto& gp = a.group();
  const Subgroup& rep = gp->class_representative(key.L);
  auto middle = orbit_gset(gp, rep);
  const auto idx = coset_indices(*gp, rep);
  std::vector<Point> left(middle.size()), right(middle.size());
  for (Elem x = 0; x < gp->order(); ++x) {
    left[idx[x]] = a.act(x, key.a);
    right[idx[x]] = b.act(x, key.b);
  }
  return Span::make(GMap::make(middle, a, std::move(left)), GMap::make(middle, b, std::move(right)));
}

}  // namespace mackey
