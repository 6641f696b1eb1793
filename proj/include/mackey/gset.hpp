#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

/// A point of a finite G-set (0-based; the JSON layer speaks 1-based).
using Point = std::uint32_t;

/// A skeletal finite G-set (n, alpha): the set {0..n-1} with a homomorphism G -> S_n.
///
/// The action is given on generators and extended to every element at construction,
/// which is also where the homomorphism property is verified. Copies share the action
/// table; values are immutable.
class GSet {
 public:
  GSet() = default;
  /// `generator_action[k]` is the permutation by which generator k acts.
  static GSet make(GroupPtr group, std::size_t n, std::vector<Permutation> generator_action);
  static GSet empty(GroupPtr group);
  static GSet point(GroupPtr group);
  /// Unchecked: `table[g * n + i]` must already be a homomorphism G -> S_n.
  static GSet from_table(GroupPtr group, std::size_t n, std::vector<Point> table);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return n_; }
  Point act(Elem g, Point i) const { return (*table_)[g * n_ + i]; }
  Permutation generator_action(std::size_t k) const;
  /// The full action table, `table()[g * size() + i] = g . i`.
  const std::vector<Point>& table() const;

  /// Data equality: same group, same n, same action.
  friend bool operator==(const GSet& a, const GSet& b);

 private:
  GroupPtr group_;
  std::size_t n_ = 0;
  std::shared_ptr<const std::vector<Point>> table_;  // |G| * n
};

/// An equivariant map of G-sets.
class GMap {
 public:
  GMap() = default;
  /// Throws InputError when the images are out of range or the map is not equivariant.
  static GMap make(GSet source, GSet target, std::vector<Point> images);
  static GMap identity(const GSet& a);

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  const std::vector<Point>& images() const { return images_; }
  Point operator()(Point i) const { return images_[i]; }

  bool is_identity() const;
  bool is_bijective() const;

  friend bool operator==(const GMap&, const GMap&) = default;

 private:
  GSet source_;
  GSet target_;
  std::vector<Point> images_;
};

/// g after f.
GMap compose(const GMap& g, const GMap& f);

/// Coset space G/H, cosets numbered by least representative; left translation action.
GSet orbit_gset(const GroupPtr& g, const Subgroup& h);

/// Block sum. Strictly associative and unital as data.
GSet disjoint_union(const GSet& a, const GSet& b);

/// Diagonal action on {0..a.n*b.n-1}, with (i, j) stored at i * b.n + j.
GSet product(const GSet& a, const GSet& b);

/// Orbits as sorted point lists, ordered by least element.
std::vector<std::vector<Point>> orbits(const GSet& a);

Subgroup stabilizer(const GSet& a, Point p);

std::size_t fixed_points(const GSet& a, const Subgroup& h);

std::vector<Point> fixed_point_set(const GSet& a, const Subgroup& h);

/// Sorted multiset of stabilizer-class indices, one per orbit. A complete isomorphism
/// invariant.
std::vector<std::size_t> canonical_form(const GSet& a);

/// An equivariant bijection a -> b, or nothing when the G-sets are not isomorphic.
std::optional<GMap> iso_gsets(const GSet& a, const GSet& b);

/// For each orbit of `a`, the least point whose stabilizer is exactly the class
/// representative. Used to identify orbits with the representative coset spaces.
struct OrbitSlot {
  std::size_t class_index = 0;
  Point base = 0;
  std::vector<Point> points;
};

/// Decomposition of a G-set into orbits, each identified with G/H_i for H_i the
/// representative of the orbit's stabilizer class via gH_i -> g . base.
struct OrbitDecomposition {
  std::vector<OrbitSlot> slots;
  std::vector<std::size_t> slot_of;     // per point
  std::vector<Point> coset_of;          // per point: the point of G/H_i it corresponds to
};

OrbitDecomposition decompose(const GSet& a);

}  // namespace mackey
