#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

namespace mackey {

/// Index of a group element in the group's canonical (lexicographic) element list.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10080;

/// A permutation of {0..n-1}. Stored 0-based; the JSON layer speaks 1-based images.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(std::span<const long long> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<long long> one_based() const;

  bool is_identity() const;
  Permutation inverse() const;

  /// (a * b)(i) = a(b(i)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

class Group;

/// A subgroup, held as the sorted list of its element indices.
/// `parent` is non-owning; the group must outlive the subgroup.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<Elem> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem g) const;
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elements == b.elements;
  }
};

/// One conjugacy class of subgroups; indices refer to `Group::subgroups()`.
struct SubgroupClass {
  std::vector<std::size_t> members;
  std::size_t representative = 0;
};

struct DoubleCoset {
  std::vector<Elem> elements;
  Elem representative = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with its full element list computed on construction.
///
/// Elements are sorted lexicographically by image list, so the identity is index 0.
/// Subgroup data (lattice, conjugacy classes, normalizers) is computed lazily and
/// cached behind a once-flag; the object is safe to share across threads.
class Group {
 public:
  static GroupPtr make(std::size_t degree, std::vector<Permutation> generators,
                       std::size_t order_cap = kDefaultOrderCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Elem>& generator_elements() const { return generator_elements_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Elem g) const { return elements_[g]; }

  static constexpr Elem identity() { return 0; }
  Elem multiply(Elem a, Elem b) const;
  Elem inverse(Elem a) const { return inverses_[a]; }
  Elem conjugate(Elem x, Elem g) const;  // x g x^-1
  Elem index_of(const Permutation& p) const;  // throws InputError when p is not in the group
  bool is_abelian() const;

  // Subgroup infrastructure.
  const std::vector<Subgroup>& subgroups() const;
  const std::vector<SubgroupClass>& subgroup_classes() const;
  std::size_t subgroup_index(const std::vector<Elem>& sorted_elements) const;
  std::size_t class_of_subgroup(std::size_t subgroup_idx) const;
  std::size_t class_of(const Subgroup& h) const;
  const Subgroup& class_representative(std::size_t class_idx) const;
  const Subgroup& normalizer(std::size_t subgroup_idx) const;

  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup generated_by(std::span<const Elem> gens) const;
  Subgroup conjugate(const Subgroup& h, Elem x) const;  // x H x^-1

  friend bool operator==(const Group& a, const Group& b) {
    return a.degree_ == b.degree_ && a.generators_ == b.generators_;
  }

 private:
  struct Lattice {
    std::vector<Subgroup> subgroups;
    std::map<std::vector<Elem>, std::size_t> index;
    std::vector<SubgroupClass> classes;
    std::vector<std::size_t> class_of;
    std::vector<Subgroup> normalizers;
  };

  Group() = default;
  const Lattice& lattice() const;
  std::vector<Elem> closure(std::vector<Elem> gens) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_elements_;
  std::vector<Permutation> elements_;
  std::map<std::vector<std::uint32_t>, Elem> lookup_;
  std::vector<Elem> table_;  // |G|^2 multiplication table, empty for large groups
  std::vector<Elem> inverses_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<Lattice> lattice_;
};

/// All subgroups, sorted by (order, element list).
const std::vector<Subgroup>& subgroups(const Group& g);

/// Conjugacy classes sorted by (order, representative element list); this is the
/// global class ordering used by marks, span bases, and Mackey tables.
const std::vector<SubgroupClass>& conjugacy_classes_of_subgroups(const Group& g);

/// Index of each element's coset gH, cosets numbered by least representative.
std::vector<std::uint32_t> coset_indices(const Group& g, const Subgroup& h);

/// Named groups used by the CLI and tests: C1..C8, V4, S3, S4, D4, Q8.
GroupPtr named_group(std::string_view name);

/// H x K double cosets partitioning G, ordered by least representative.
std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& h, const Subgroup& k);

}  // namespace mackey
