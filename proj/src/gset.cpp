#include "mackey/gset.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_group(const GSet& a, const GSet& b, const char* what) {
  if (!same_group(a.group(), b.group()))
    throw InputError(std::string(what) + ": G-sets over different groups");
}

}  // namespace

GSet GSet::make(GroupPtr group, std::size_t n, std::vector<Permutation> generator_action) {
  if (!group) throw InputError("G-set without a group");
  const auto& gens = group->generator_elements();
  if (generator_action.size() != gens.size())
    throw InputError("G-set action lists " + std::to_string(generator_action.size()) +
                     " permutations but the group has " + std::to_string(gens.size()) +
                     " generators");
  for (const auto& p : generator_action)
    if (p.degree() != n)
      throw InputError("G-set action permutation has degree " + std::to_string(p.degree()) +
                       ", expected " + std::to_string(n));

  // Extend along words: every element is reached as s * x from an earlier x.
  const std::size_t order = group->order();
  std::vector<Point> table(order * n);
  std::vector<bool> done(order, false);
  for (std::size_t i = 0; i < n; ++i) table[i] = static_cast<Point>(i);
  done[Group::identity()] = true;
  std::vector<Elem> queue{Group::identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = group->multiply(gens[k], x);
      if (done[y]) continue;
      done[y] = true;
      for (std::size_t i = 0; i < n; ++i) table[y * n + i] = generator_action[k](table[x * n + i]);
      queue.push_back(y);
    }
  }
  // The extension is well defined iff it respects every relation s * x = y.
  for (Elem x = 0; x < order; ++x)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = group->multiply(gens[k], x);
      for (std::size_t i = 0; i < n; ++i)
        if (table[y * n + i] != generator_action[k](table[x * n + i]))
          throw InputError("G-set action is not a homomorphism (generator " +
                           std::to_string(k + 1) + ")");
    }
  return from_table(std::move(group), n, std::move(table));
}

GSet GSet::from_table(GroupPtr group, std::size_t n, std::vector<Point> table) {
  GSet s;
  s.group_ = std::move(group);
  s.n_ = n;
  s.table_ = std::make_shared<const std::vector<Point>>(std::move(table));
  return s;
}

GSet GSet::empty(GroupPtr group) { return from_table(std::move(group), 0, {}); }

GSet GSet::point(GroupPtr group) {
  const std::size_t order = group->order();
  return from_table(std::move(group), 1, std::vector<Point>(order, 0));
}

Permutation GSet::generator_action(std::size_t k) const {
  const Elem g = group_->generator_elements().at(k);
  std::vector<std::uint32_t> im(n_);
  for (std::size_t i = 0; i < n_; ++i) im[i] = act(g, static_cast<Point>(i));
  return Permutation(std::move(im));
}

const std::vector<Point>& GSet::table() const {
  static const std::vector<Point> kEmpty;
  return table_ ? *table_ : kEmpty;
}

bool operator==(const GSet& a, const GSet& b) {
  if (!same_group(a.group_, b.group_) || a.n_ != b.n_) return false;
  if (a.table_ == b.table_) return true;
  if (!a.table_ || !b.table_) return a.n_ == 0;
  return *a.table_ == *b.table_;
}

GMap GMap::make(GSet source, GSet target, std::vector<Point> images) {
  require_same_group(source, target, "G-map");
  if (images.size() != source.size())
    throw InputError("G-map has " + std::to_string(images.size()) + " images for a source of size " +
                     std::to_string(source.size()));
  for (Point v : images)
    if (v >= target.size())
      throw InputError("G-map image " + std::to_string(v + 1) + " out of range 1.." +
                       std::to_string(target.size()));
  for (Elem g : source.group()->generator_elements())
    for (Point i = 0; i < source.size(); ++i)
      if (images[source.act(g, i)] != target.act(g, images[i]))
        throw InputError("G-map is not equivariant at point " + std::to_string(i + 1));
  GMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.images_ = std::move(images);
  return f;
}

GMap GMap::identity(const GSet& a) {
  GMap f;
  f.source_ = a;
  f.target_ = a;
  f.images_.resize(a.size());
  for (Point i = 0; i < a.size(); ++i) f.images_[i] = i;
  return f;
}

bool GMap::is_identity() const {
  if (!(source_ == target_)) return false;
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool GMap::is_bijective() const {
  if (source_.size() != target_.size()) return false;
  std::vector<bool> hit(target_.size(), false);
  for (Point v : images_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

GMap compose(const GMap& g, const GMap& f) {
  if (!(f.target() == g.source())) throw InputError("compose: G-maps are not composable");
  std::vector<Point> im(f.images().size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = g(f(static_cast<Point>(i)));
  return GMap::make(f.source(), g.target(), std::move(im));
}

GSet orbit_gset(const GroupPtr& g, const Subgroup& h) {
  if (h.parent != g.get()) throw InputError("orbit_gset: subgroup of a different group");
  const auto idx = coset_indices(*g, h);
  const std::size_t k = g->order() / h.order();
  std::vector<Elem> rep(k);
  for (Elem x = static_cast<Elem>(g->order()); x-- > 0;) rep[idx[x]] = x;
  std::vector<Point> table(g->order() * k);
  for (Elem x = 0; x < g->order(); ++x)
    for (std::size_t c = 0; c < k; ++c) table[x * k + c] = idx[g->multiply(x, rep[c])];
  return GSet::from_table(g, k, std::move(table));
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  require_same_group(a, b, "disjoint_union");
  if (b.size() == 0) return a;
  if (a.size() == 0) return b;
  const std::size_t n = a.size() + b.size();
  const std::size_t order = a.group()->order();
  std::vector<Point> table(order * n);
  for (Elem g = 0; g < order; ++g) {
    for (Point i = 0; i < a.size(); ++i) table[g * n + i] = a.act(g, i);
    for (Point j = 0; j < b.size(); ++j)
      table[g * n + a.size() + j] = static_cast<Point>(a.size() + b.act(g, j));
  }
  return GSet::from_table(a.group(), n, std::move(table));
}

GSet product(const GSet& a, const GSet& b) {
  require_same_group(a, b, "product");
  const std::size_t nb = b.size();
  const std::size_t n = a.size() * nb;
  const std::size_t order = a.group()->order();
  std::vector<Point> table(order * n);
  for (Elem g = 0; g < order; ++g)
    for (Point i = 0; i < a.size(); ++i)
      for (Point j = 0; j < nb; ++j)
        table[g * n + i * nb + j] = static_cast<Point>(a.act(g, i) * nb + b.act(g, j));
  return GSet::from_table(a.group(), n, std::move(table));
}

std::vector<std::vector<Point>> orbits(const GSet& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<std::vector<Point>> out;
  const auto& gens = a.group()->generator_elements();
  for (Point p = 0; p < a.size(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit{p};
    seen[p] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (Elem s : gens) {
        const Point y = a.act(s, orbit[q]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const GSet& a, Point p) {
  if (p >= a.size())
    throw InputError("stabilizer: point " + std::to_string(p + 1) + " out of range");
  Subgroup s{a.group().get(), {}};
  for (Elem g = 0; g < a.group()->order(); ++g)
    if (a.act(g, p) == p) s.elements.push_back(g);
  return s;
}

std::vector<Point> fixed_point_set(const GSet& a, const Subgroup& h) {
  std::vector<Point> out;
  for (Point p = 0; p < a.size(); ++p) {
    bool fixed = true;
    for (Elem g : h.elements)
      if (a.act(g, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

std::size_t fixed_points(const GSet& a, const Subgroup& h) { return fixed_point_set(a, h).size(); }

std::vector<std::size_t> canonical_form(const GSet& a) {
  std::vector<std::size_t> out;
  for (const auto& orbit : orbits(a)) out.push_back(a.group()->class_of(stabilizer(a, orbit.front())));
  std::sort(out.begin(), out.end());
  return out;
}

OrbitDecomposition decompose(const GSet& a) {
  const Group& g = *a.group();
  OrbitDecomposition d;
  d.slot_of.assign(a.size(), 0);
  d.coset_of.assign(a.size(), 0);
  std::map<std::size_t, std::vector<std::uint32_t>> coset_cache;
  for (auto& orbit : orbits(a)) {
    OrbitSlot slot;
    slot.class_index = g.class_of(stabilizer(a, orbit.front()));
    const Subgroup& rep = g.class_representative(slot.class_index);
    // The orbit has |G|/|rep| points, so any point fixed by rep has stabilizer rep.
    for (Point p : orbit) {
      bool fixed = true;
      for (Elem h : rep.elements)
        if (a.act(h, p) != p) {
          fixed = false;
          break;
        }
      if (fixed) {
        slot.base = p;
        break;
      }
    }
    auto it = coset_cache.find(slot.class_index);
    if (it == coset_cache.end()) it = coset_cache.emplace(slot.class_index, coset_indices(g, rep)).first;
    for (Elem x = 0; x < g.order(); ++x) d.coset_of[a.act(x, slot.base)] = it->second[x];
    for (Point p : orbit) d.slot_of[p] = d.slots.size();
    slot.points = std::move(orbit);
    d.slots.push_back(std::move(slot));
  }
  return d;
}

std::optional<GMap> iso_gsets(const GSet& a, const GSet& b) {
  require_same_group(a, b, "iso_gsets");
  if (a.size() != b.size()) return std::nullopt;
  const auto da = decompose(a);
  const auto db = decompose(b);
  if (da.slots.size() != db.slots.size()) return std::nullopt;

  // Pair orbits of equal stabilizer class in order of appearance.
  std::map<std::size_t, std::vector<std::size_t>> free_b;
  for (std::size_t s = db.slots.size(); s-- > 0;) free_b[db.slots[s].class_index].push_back(s);
  std::vector<Point> images(a.size());
  for (const auto& slot : da.slots) {
    auto& pool = free_b[slot.class_index];
    if (pool.empty()) return std::nullopt;
    const auto& target = db.slots[pool.back()];
    pool.pop_back();
    std::vector<Point> by_coset(target.points.size());
    for (Point q : target.points) by_coset[db.coset_of[q]] = q;
    for (Point p : slot.points) images[p] = by_coset[da.coset_of[p]];
  }
  return GMap::make(a, b, std::move(images));
}

}  // namespace mackey
