#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mackey/errors.hpp"
#include "mackey/group.hpp"
#include "random_data.hpp"

using namespace mackey;

namespace {

const char* kSmall[] = {"C1", "C2", "C3", "C4", "V4", "C6", "S3", "D4", "Q8", "C8"};

}  // namespace

TEST(Group, OrdersOfNamedGroups) {
  EXPECT_EQ(named_group("C1")->order(), 1u);
  EXPECT_EQ(named_group("C5")->order(), 5u);
  EXPECT_EQ(named_group("V4")->order(), 4u);
  EXPECT_EQ(named_group("S3")->order(), 6u);
  EXPECT_EQ(named_group("D4")->order(), 8u);
  EXPECT_EQ(named_group("Q8")->order(), 8u);
  EXPECT_EQ(named_group("S4")->order(), 24u);
  EXPECT_THROW(named_group("A7x"), InputError);
}

TEST(Group, IdentityIsElementZeroAndInversesWork) {
  for (auto name : kSmall) {
    auto g = named_group(name);
    EXPECT_TRUE(g->element(0).is_identity()) << name;
    for (Elem x = 0; x < g->order(); ++x) {
      EXPECT_EQ(g->multiply(x, g->inverse(x)), Group::identity());
      EXPECT_EQ(g->element(g->multiply(x, 1 % g->order())), g->element(x) * g->element(1 % g->order()));
    }
  }
}

TEST(Group, CompositionAppliesRightFactorFirst) {
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  const Permutation ab = a * b;
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(ab(i), a(b(i)));
}

TEST(Group, RejectsBadPermutations) {
  EXPECT_THROW(Permutation({0, 0, 1}), InputError);
  EXPECT_THROW(Permutation({0, 3}), InputError);
}

TEST(Group, OrderCapIsEnforced) {
  EXPECT_THROW(Group::make(5, {Permutation({1, 2, 3, 4, 0}), Permutation({1, 0, 2, 3, 4})}, 100),
               ResourceError);
}

TEST(Group, SubgroupsMatchBruteForce) {
  for (auto name : kSmall) {
    auto g = named_group(name);
    auto brute = sample::brute_force_subgroups(*g);
    std::set<std::vector<Elem>> expected(brute.begin(), brute.end());
    std::set<std::vector<Elem>> got;
    for (const auto& h : subgroups(*g)) got.insert(h.elements);
    EXPECT_EQ(got, expected) << name;
  }
}

TEST(Group, KnownSubgroupCounts) {
  struct Case {
    const char* name;
    std::size_t subgroups, classes;
  } cases[] = {{"C2", 2, 2}, {"C3", 2, 2}, {"S3", 6, 4}, {"D4", 10, 8}, {"Q8", 6, 6}, {"V4", 5, 5}, {"S4", 30, 11}};
  for (const auto& c : cases) {
    auto g = named_group(c.name);
    EXPECT_EQ(subgroups(*g).size(), c.subgroups) << c.name;
    EXPECT_EQ(conjugacy_classes_of_subgroups(*g).size(), c.classes) << c.name;
  }
}

TEST(Group, ClassesAreSortedByOrderAndConjugationClosed) {
  for (auto name : kSmall) {
    auto g = named_group(name);
    const auto& classes = conjugacy_classes_of_subgroups(*g);
    for (std::size_t i = 1; i < classes.size(); ++i)
      EXPECT_LE(g->class_representative(i - 1).order(), g->class_representative(i).order());
    EXPECT_EQ(g->class_representative(0).order(), 1u);
    EXPECT_EQ(g->class_representative(classes.size() - 1).order(), g->order());
    for (const auto& h : subgroups(*g))
      for (Elem x = 0; x < g->order(); ++x)
        EXPECT_EQ(g->class_of(g->conjugate(h, x)), g->class_of(h));
  }
}

TEST(Group, DoubleCosetsPartitionAndMatchBruteForce) {
  for (auto name : kSmall) {
    auto g = named_group(name);
    const auto& subs = subgroups(*g);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        const auto dcs = double_cosets(*g, h, k);
        std::set<std::set<Elem>> expected;
        for (Elem x = 0; x < g->order(); ++x) {
          std::set<Elem> d;
          for (Elem a : h.elements)
            for (Elem b : k.elements) d.insert(g->multiply(g->multiply(a, x), b));
          expected.insert(d);
        }
        std::set<std::set<Elem>> got;
        std::size_t total = 0;
        for (const auto& dc : dcs) {
          got.insert(std::set<Elem>(dc.elements.begin(), dc.elements.end()));
          total += dc.elements.size();
        }
        EXPECT_EQ(got, expected);
        EXPECT_EQ(total, g->order());
      }
  }
}

TEST(Group, NormalizersContainTheSubgroup) {
  auto g = named_group("S4");
  const auto& subs = subgroups(*g);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subgroup& n = g->normalizer(i);
    EXPECT_TRUE(subs[i].is_subgroup_of(n));
    for (Elem x : n.elements) EXPECT_EQ(g->conjugate(subs[i], x), subs[i]);
  }
}

TEST(Group, CosetIndicesNumberByLeastRepresentative) {
  auto g = named_group("S3");
  const auto& h = g->class_representative(1);
  const auto idx = coset_indices(*g, h);
  EXPECT_EQ(idx[0], 0u);
  std::uint32_t next = 0;
  for (Elem x = 0; x < g->order(); ++x) {
    EXPECT_LE(idx[x], next);
    if (idx[x] == next) ++next;
  }
  EXPECT_EQ(next, 3u);
}
