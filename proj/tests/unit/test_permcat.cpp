#include <gtest/gtest.h>

#include <numeric>

#include "mackey/coherence.hpp"
#include "mackey/completion.hpp"
#include "mackey/errors.hpp"

using namespace mackey;

namespace {

// Monoid homomorphisms m -> n by brute force over all maps fixing 0.
std::size_t count_monoid_homs(const CommMonoid& m, const CommMonoid& n) {
  std::size_t count = 0;
  std::vector<std::size_t> f(m.size, 0);
  for (;;) {
    bool ok = f[0] == 0;
    for (std::size_t a = 0; a < m.size && ok; ++a)
      for (std::size_t b = 0; b < m.size && ok; ++b) ok = f[m.add(a, b)] == n.add(f[a], f[b]);
    count += ok;
    std::size_t i = 0;
    while (i < m.size && ++f[i] == n.size) f[i++] = 0;
    if (i == m.size) break;
  }
  return count;
}

PermCatPtr discrete(std::size_t n) { return discrete_permcat(CommMonoid::cyclic(n), "Z/" + std::to_string(n)); }

}  // namespace

TEST(PermCat, CatalogValidates) {
  for (const auto& e : permcat_catalog()) EXPECT_TRUE(validate_permcat(*e.cat).ok()) << e.name;
}

TEST(PermCat, BrokenUnitIsNamed) {
  auto t = discrete(2)->tables();
  t.object_sum[1] = 0;  // 0 + 1 = 0
  t.morphism_sum[1] = 0;
  t.symmetry[1] = 0;
  const auto r = validate_permcat(FinPermCat("broken", t));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has("object-unit"));
}

TEST(PermCat, ShapeErrorsAreRejected) {
  auto t = discrete(2)->tables();
  t.object_sum.pop_back();
  EXPECT_THROW(FinPermCat("short", t), InputError);
}

TEST(PermCat, LaxFunctorsBetweenDiscreteCategoriesAreMonoidHoms) {
  const std::vector<CommMonoid> monoids = {CommMonoid::trivial(), CommMonoid::cyclic(2), CommMonoid::cyclic(3),
                                           CommMonoid::cyclic(4), CommMonoid::idempotent(),
                                           CommMonoid::product(CommMonoid::cyclic(2), CommMonoid::cyclic(2))};
  for (const auto& m : monoids)
    for (const auto& n : monoids) {
      const auto fs = enumerate_lax(discrete_permcat(m), discrete_permcat(n));
      EXPECT_EQ(fs.size(), count_monoid_homs(m, n));
      for (const auto& f : fs) EXPECT_TRUE(validate_lax(f).ok());
    }
}

TEST(PermCat, BadStructureMorphismIsNamed) {
  const auto c = group_morphism_permcat(CommMonoid::cyclic(2), CommMonoid::cyclic(3));
  auto f = zero_lax(c, c);
  EXPECT_TRUE(validate_lax(f).ok());
  f.delta[3] = c->id(1);  // f(1) + f(1) = 0, not 1
  const auto r = validate_lax(f);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has("delta-type"));
}

TEST(PermCat, LaxCompositionIsUnitalAndValid) {
  const auto a = discrete(4), b = discrete(2);
  for (const auto& f : enumerate_lax(a, b)) {
    EXPECT_EQ(compose_lax(identity_lax(b), f), f);
    EXPECT_EQ(compose_lax(f, identity_lax(a)), f);
    for (const auto& g : enumerate_lax(b, a)) EXPECT_TRUE(validate_lax(compose_lax(g, f)).ok());
  }
}

TEST(PermCat, HomCategoryIsPermutative) {
  const auto h = hom_permcat(discrete(2), discrete(2));
  EXPECT_EQ(h->functors.size(), 2u);
  EXPECT_TRUE(validate_permcat(*h->cat).ok());
  const auto h2 = hom_permcat(discrete(2), group_morphism_permcat(CommMonoid::cyclic(2), CommMonoid::cyclic(3)));
  EXPECT_TRUE(validate_permcat(*h2->cat).ok());
}

TEST(PermCat, EvaluationAndCurrying) {
  const auto h = hom_permcat(discrete(2), discrete(3));
  EXPECT_TRUE(validate_multilinear(eval_bilinear(*h)).ok());
  const auto cc = check_curry(eval_bilinear(*h), *h);
  EXPECT_TRUE(cc.report.ok());
  EXPECT_EQ(cc.factorizations, 1u);
  EXPECT_EQ(cc.g, identity_lax(h->cat));
  const auto z3 = discrete(3);
  const auto hz = hom_permcat(z3, z3);
  const auto prod = product_bilinear(z3, 3);
  EXPECT_TRUE(validate_multilinear(prod).ok());
  const auto cp = check_curry(prod, *hz);
  EXPECT_TRUE(cp.report.ok());
  EXPECT_EQ(cp.factorizations, 1u);
}

TEST(PermCat, TrilinearEvaluation) {
  EXPECT_TRUE(check_trilinear_eval(discrete(2), discrete(2), discrete(3)).ok());
}

TEST(PermCat, MultilinearRoundTrip) {
  const auto c = group_morphism_permcat(CommMonoid::cyclic(2), CommMonoid::cyclic(2));
  for (const auto& f : enumerate_lax(c, c)) EXPECT_EQ(to_lax(to_multilinear(f)), f);
}

TEST(PermCat, CapsRaiseResourceErrors) {
  Caps caps;
  caps.max_functors = 1;
  EXPECT_THROW(enumerate_lax(discrete(2), discrete(2), caps), ResourceError);
}

TEST(Completion, Pi0AndGroupCompletion) {
  EXPECT_TRUE(group_completion(CommMonoid::idempotent())->is_trivial());
  EXPECT_TRUE(group_completion(CommMonoid::cyclic(3))->isomorphic(AbelianGroup::cyclic(3)));
  EXPECT_TRUE(group_completion(CommMonoid::product(CommMonoid::cyclic(2), CommMonoid::idempotent()))
                  ->isomorphic(AbelianGroup::cyclic(2)));
  const auto c = group_morphism_permcat(CommMonoid::cyclic(4), CommMonoid::cyclic(2));
  const auto p = pi0_objects(*c);
  EXPECT_EQ(p.monoid, CommMonoid::cyclic(4));
  EXPECT_EQ(p.component_of[0], 0u);
}

TEST(Completion, InducedMaps) {
  const auto a = discrete(4), b = discrete(2);
  for (const auto& f : enumerate_lax(a, b)) {
    const auto m = induced_map_on_completions(f);
    EXPECT_TRUE(m.source().isomorphic(AbelianGroup::cyclic(4)));
    EXPECT_EQ(m.is_surjective(), f.obj[1] == 1);
  }
}
