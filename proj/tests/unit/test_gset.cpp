#include <gtest/gtest.h>

#include "mackey/errors.hpp"
#include "mackey/gset.hpp"
#include "random_data.hpp"

using namespace mackey;
using mackey::sample::Rng;

namespace {

// A relabeled copy of a with the isomorphism a -> copy.
std::pair<GSet, GMap> shuffled(const GSet& a, Rng& rng) {
  const Span s = sample::relabel_middle(Span::identity(a), rng);
  std::vector<Point> images(a.size());
  for (Point i = 0; i < a.size(); ++i)
    for (Point j = 0; j < a.size(); ++j)
      if (s.left()(j) == i) images[i] = j;
  return {s.middle(), GMap::make(a, s.middle(), images)};
}

}  // namespace

TEST(GSet, BurnsideLemmaCountsOrbits) {
  Rng rng(7);
  for (auto name : {"C2", "C3", "S3", "D4", "Q8"}) {
    auto g = named_group(name);
    for (int t = 0; t < 20; ++t) {
      const GSet a = sample::random_gset(g, rng, 4);
      std::size_t fixed = 0;
      for (Elem x = 0; x < g->order(); ++x)
        for (Point p = 0; p < a.size(); ++p) fixed += a.act(x, p) == p;
      EXPECT_EQ(fixed, orbits(a).size() * g->order()) << name;
    }
  }
}

TEST(GSet, OrbitStabilizer) {
  Rng rng(3);
  auto g = named_group("D4");
  for (int t = 0; t < 20; ++t) {
    const GSet a = sample::random_gset(g, rng, 3);
    for (const auto& o : orbits(a))
      for (Point p : o) EXPECT_EQ(o.size() * stabilizer(a, p).order(), g->order());
  }
}

TEST(GSet, RejectsActionsThatAreNotHomomorphisms) {
  auto g = named_group("S3");
  // The 3-cycle generator cannot act as a transposition.
  EXPECT_THROW(GSet::make(g, 2, {Permutation({1, 0}), Permutation({1, 0})}), InputError);
  EXPECT_THROW(GSet::make(g, 2, {Permutation({0, 1})}), InputError);
  EXPECT_NO_THROW(GSet::make(g, 2, {Permutation({0, 1}), Permutation({1, 0})}));
}

TEST(GSet, RejectsNonEquivariantMaps) {
  auto g = named_group("C2");
  const GSet free = orbit_gset(g, g->trivial());
  const GSet pt = GSet::point(g);
  EXPECT_NO_THROW(GMap::make(free, pt, {0, 0}));
  EXPECT_THROW(GMap::make(pt, free, {0}), InputError);
  EXPECT_THROW(GMap::make(free, free, {0, 0}), InputError);
}

TEST(GSet, CosetSpaceBasics) {
  auto g = named_group("S3");
  for (std::size_t i = 0; i < 4; ++i) {
    const Subgroup& h = g->class_representative(i);
    const GSet o = orbit_gset(g, h);
    EXPECT_EQ(o.size() * h.order(), g->order());
    EXPECT_EQ(stabilizer(o, 0), h);
    EXPECT_EQ(orbits(o).size(), 1u);
  }
}

TEST(GSet, IsomorphismUnderRelabeling) {
  Rng rng(11);
  for (auto name : {"C3", "S3", "D4"}) {
    auto g = named_group(name);
    for (int t = 0; t < 20; ++t) {
      const GSet a = sample::random_gset(g, rng, 3);
      const auto [b, f] = shuffled(a, rng);
      EXPECT_EQ(canonical_form(a), canonical_form(b));
      auto iso = iso_gsets(a, b);
      ASSERT_TRUE(iso.has_value());
      EXPECT_TRUE(iso->is_bijective());
      const GSet c = sample::random_gset(g, rng, 3);
      EXPECT_EQ(iso_gsets(a, c).has_value(), canonical_form(a) == canonical_form(c));
    }
  }
}

TEST(GSet, DisjointUnionIsStrict) {
  Rng rng(5);
  auto g = named_group("S3");
  const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng), c = sample::random_gset(g, rng);
  EXPECT_EQ(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c)));
  EXPECT_EQ(disjoint_union(GSet::empty(g), a), a);
  EXPECT_EQ(disjoint_union(a, GSet::empty(g)), a);
}

TEST(GSet, FixedPointsAreMultiplicativeOnProducts) {
  Rng rng(9);
  auto g = named_group("D4");
  for (int t = 0; t < 10; ++t) {
    const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng);
    const GSet ab = product(a, b);
    EXPECT_EQ(ab.size(), a.size() * b.size());
    for (const auto& h : subgroups(*g)) EXPECT_EQ(fixed_points(ab, h), fixed_points(a, h) * fixed_points(b, h));
  }
}

TEST(GSet, DecompositionIdentifiesOrbitsWithCosetSpaces) {
  Rng rng(13);
  auto g = named_group("S3");
  for (int t = 0; t < 20; ++t) {
    const GSet a = sample::random_gset(g, rng, 4);
    const auto d = decompose(a);
    EXPECT_EQ(d.slots.size(), orbits(a).size());
    for (Point p = 0; p < a.size(); ++p) {
      const auto& slot = d.slots[d.slot_of[p]];
      const GSet o = orbit_gset(g, g->class_representative(slot.class_index));
      EXPECT_EQ(stabilizer(a, slot.base), g->class_representative(slot.class_index));
      for (Elem x = 0; x < g->order(); ++x)
        EXPECT_EQ(d.coset_of[a.act(x, p)], o.act(x, d.coset_of[p]));
    }
  }
}
