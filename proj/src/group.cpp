#include "mackey/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("permutation is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(std::span<const long long> images) {
  std::vector<std::uint32_t> im;
  im.reserve(images.size());
  for (auto v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size())
      throw InputError("permutation image " + std::to_string(v) + " out of range 1.." +
                       std::to_string(images.size()));
    im.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return Permutation(std::move(im));
}

std::vector<long long> Permutation::one_based() const {
  std::vector<long long> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                       elements.end());
}

GroupPtr Group::make(std::size_t degree, std::vector<Permutation> generators,
                     std::size_t order_cap) {
  if (degree == 0) throw InputError("group degree must be positive");
  for (const auto& gen : generators)
    if (gen.degree() != degree)
      throw InputError("generator degree " + std::to_string(gen.degree()) +
                       " does not match group degree " + std::to_string(degree));

  // Closure by breadth-first multiplication with generators.
  std::set<Permutation> found{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation y = s * x;
      if (found.insert(y).second) {
        if (found.size() > order_cap)
          throw ResourceError("group-order", "group order exceeds cap " +
                                                 std::to_string(order_cap));
        queue.push_back(std::move(y));
      }
    }
  }

  std::shared_ptr<Group> g(new Group());
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  g->elements_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < g->elements_.size(); ++i)
    g->lookup_.emplace(g->elements_[i].images(), static_cast<Elem>(i));

  const std::size_t n = g->elements_.size();
  if (n <= kTableLimit) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g->table_[a * n + b] = g->lookup_.at((g->elements_[a] * g->elements_[b]).images());
  }
  g->inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    g->inverses_[a] = g->lookup_.at(g->elements_[a].inverse().images());
  for (const auto& s : g->generators_) g->generator_elements_.push_back(g->index_of(s));
  return g;
}

Elem Group::multiply(Elem a, Elem b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[a * n + b];
  return lookup_.at((elements_[a] * elements_[b]).images());
}

Elem Group::conjugate(Elem x, Elem g) const { return multiply(multiply(x, g), inverse(x)); }

Elem Group::index_of(const Permutation& p) const {
  auto it = lookup_.find(p.images());
  if (it == lookup_.end()) throw InputError("permutation is not an element of the group");
  return it->second;
}

bool Group::is_abelian() const {
  for (Elem a : generator_elements_)
    for (Elem b : generator_elements_)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<Elem> Group::closure(std::vector<Elem> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Elem> out{identity()};
  in[identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem y = multiply(s, out[i]);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Group::Lattice& Group::lattice() const {
  std::call_once(lattice_once_, [this] {
    auto lat = std::make_unique<Lattice>();
    std::map<std::vector<Elem>, std::vector<Elem>> found;  // elements -> generating set
    std::vector<std::pair<std::vector<Elem>, Elem>> cyclic;
    std::deque<std::vector<Elem>> queue;

    for (Elem g = 0; g < order(); ++g) {
      auto c = closure({g});
      if (found.emplace(c, std::vector<Elem>{g}).second) {
        cyclic.emplace_back(c, g);
        queue.push_back(c);
      }
    }
    // Every subgroup is a join of cyclic subgroups.
    while (!queue.empty()) {
      auto s = std::move(queue.front());
      queue.pop_front();
      const auto gens = found.at(s);
      for (const auto& [c, g] : cyclic) {
        if (std::binary_search(s.begin(), s.end(), g)) continue;
        auto joined_gens = gens;
        joined_gens.push_back(g);
        auto t = closure(joined_gens);
        if (found.emplace(t, joined_gens).second) queue.push_back(std::move(t));
      }
    }

    std::vector<std::vector<Elem>> all;
    all.reserve(found.size());
    for (auto& [elems, gens] : found) all.push_back(elems);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (std::size_t i = 0; i < all.size(); ++i) {
      lat->index.emplace(all[i], i);
      lat->subgroups.push_back(Subgroup{this, std::move(all[i])});
    }

    // Conjugacy classes.
    const std::size_t ns = lat->subgroups.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> raw_class(ns, kUnset);
    std::vector<std::vector<std::size_t>> raw_members;
    for (std::size_t i = 0; i < ns; ++i) {
      if (raw_class[i] != kUnset) continue;
      std::set<std::size_t> members;
      for (Elem x = 0; x < order(); ++x) {
        std::vector<Elem> conj;
        conj.reserve(lat->subgroups[i].elements.size());
        for (Elem h : lat->subgroups[i].elements) conj.push_back(conjugate(x, h));
        std::sort(conj.begin(), conj.end());
        members.insert(lat->index.at(conj));
      }
      for (auto m : members) raw_class[m] = raw_members.size();
      raw_members.emplace_back(members.begin(), members.end());
    }
    // Members are subgroup indices sorted by (order, elements), so the first member is
    // the lexicographically least element list within the class.
    std::vector<std::size_t> order_idx(raw_members.size());
    for (std::size_t c = 0; c < order_idx.size(); ++c) order_idx[c] = c;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      return raw_members[a].front() < raw_members[b].front();
    });
    lat->class_of.assign(ns, 0);
    for (std::size_t pos = 0; pos < order_idx.size(); ++pos) {
      SubgroupClass cls;
      cls.members = raw_members[order_idx[pos]];
      cls.representative = cls.members.front();
      for (auto m : cls.members) lat->class_of[m] = pos;
      lat->classes.push_back(std::move(cls));
    }

    for (std::size_t i = 0; i < ns; ++i) {
      std::vector<Elem> norm;
      const auto& h = lat->subgroups[i].elements;
      for (Elem x = 0; x < order(); ++x) {
        bool ok = true;
        for (Elem e : h)
          if (!std::binary_search(h.begin(), h.end(), conjugate(x, e))) {
            ok = false;
            break;
          }
        if (ok) norm.push_back(x);
      }
      lat->normalizers.push_back(Subgroup{this, std::move(norm)});
    }
    lattice_ = std::move(lat);
  });
  return *lattice_;
}

const std::vector<Subgroup>& Group::subgroups() const { return lattice().subgroups; }

const std::vector<SubgroupClass>& Group::subgroup_classes() const { return lattice().classes; }

std::size_t Group::subgroup_index(const std::vector<Elem>& sorted_elements) const {
  const auto& idx = lattice().index;
  auto it = idx.find(sorted_elements);
  if (it == idx.end()) throw InputError("element set is not a subgroup of this group");
  return it->second;
}

std::size_t Group::class_of_subgroup(std::size_t subgroup_idx) const {
  return lattice().class_of.at(subgroup_idx);
}

std::size_t Group::class_of(const Subgroup& h) const {
  if (h.parent != this) throw InputError("subgroup belongs to a different group");
  return class_of_subgroup(subgroup_index(h.elements));
}

const Subgroup& Group::class_representative(std::size_t class_idx) const {
  const auto& lat = lattice();
  return lat.subgroups[lat.classes.at(class_idx).representative];
}

const Subgroup& Group::normalizer(std::size_t subgroup_idx) const {
  return lattice().normalizers.at(subgroup_idx);
}

Subgroup Group::whole() const {
  Subgroup s{this, {}};
  for (Elem g = 0; g < order(); ++g) s.elements.push_back(g);
  return s;
}

Subgroup Group::trivial() const { return Subgroup{this, {identity()}}; }

Subgroup Group::generated_by(std::span<const Elem> gens) const {
  return Subgroup{this, closure(std::vector<Elem>(gens.begin(), gens.end()))};
}

Subgroup Group::conjugate(const Subgroup& h, Elem x) const {
  Subgroup out{this, {}};
  out.elements.reserve(h.elements.size());
  for (Elem e : h.elements) out.elements.push_back(conjugate(x, e));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

const std::vector<Subgroup>& subgroups(const Group& g) { return g.subgroups(); }

const std::vector<SubgroupClass>& conjugacy_classes_of_subgroups(const Group& g) {
  return g.subgroup_classes();
}

std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (h.parent != &g || k.parent != &g)
    throw InputError("double_cosets: subgroup not contained in the group");
  std::vector<bool> seen(g.order(), false);
  std::vector<DoubleCoset> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Elem> d;
    for (Elem a : h.elements) {
      Elem ax = g.multiply(a, x);
      for (Elem b : k.elements) d.insert(g.multiply(ax, b));
    }
    for (Elem e : d) seen[e] = true;
    out.push_back(DoubleCoset{{d.begin(), d.end()}, x});
  }
  return out;
}

std::vector<std::uint32_t> coset_indices(const Group& g, const Subgroup& h) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> idx(g.order(), kUnset);
  std::uint32_t next = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (idx[x] != kUnset) continue;
    for (Elem e : h.elements) idx[g.multiply(x, e)] = next;
    ++next;
  }
  return idx;
}

namespace {

GroupPtr from_images(std::size_t degree, std::vector<std::vector<std::uint32_t>> gens) {
  std::vector<Permutation> perms;
  for (auto& g : gens) perms.emplace_back(std::move(g));
  return Group::make(degree, std::move(perms));
}

std::vector<std::uint32_t> cycle(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  return im;
}

GroupPtr quaternion_group() {
  // Points 0..7 stand for 1, i, j, k, -1, -i, -j, -k; the group acts by left
  // multiplication by i and j.
  auto mul = [](int a, int b) {
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
    int sign = ((a >= 4) != (b >= 4)) ? 4 : 0;
    int r = unit[a % 4][b % 4];
    return (r + sign) % 8;
  };
  std::vector<std::uint32_t> li(8), lj(8);
  for (int x = 0; x < 8; ++x) {
    li[x] = static_cast<std::uint32_t>(mul(1, x));
    lj[x] = static_cast<std::uint32_t>(mul(2, x));
  }
  return from_images(8, {li, lj});
}

}  // namespace

GroupPtr named_group(std::string_view name) {
  if (name.size() >= 2 && name[0] == 'C') {
    std::size_t n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw InputError("unknown group name: " + std::string(name));
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (n == 0 || n > 64) throw InputError("unknown group name: " + std::string(name));
    if (n == 1) return Group::make(1, {});
    return from_images(n, {cycle(n)});
  }
  if (name == "V4") return from_images(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  if (name == "S3") return from_images(3, {{1, 2, 0}, {1, 0, 2}});
  if (name == "S4") return from_images(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  if (name == "D4") return from_images(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  if (name == "Q8") return quaternion_group();
  throw InputError("unknown group name: " + std::string(name));
}

}  // namespace mackey
