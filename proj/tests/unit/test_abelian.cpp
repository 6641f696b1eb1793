#include <gtest/gtest.h>

#include <limits>

#include "mackey/abelian.hpp"
#include "mackey/errors.hpp"
#include "random_data.hpp"

using namespace mackey;
using mackey::sample::Rng;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(r, Vec(c));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<Int>(sample::pick(rng, 13)) - 6;
  return m;
}

std::shared_ptr<const AbelianGroup> ptr(AbelianGroup a) { return std::make_shared<const AbelianGroup>(std::move(a)); }

}  // namespace

TEST(Abelian, SmithFormIdentity) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + sample::pick(rng, 4), c = 1 + sample::pick(rng, 4);
    const Matrix a = random_matrix(r, c, rng);
    const SmithForm s = smith_normal_form(a, r, c);
    const Matrix uav = multiply(multiply(s.u, a, c), s.v, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(uav[i][j], i == j ? s.diagonal[i] : 0);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      EXPECT_GE(s.diagonal[i], 0);
      if (s.diagonal[i] != 0) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      else EXPECT_EQ(s.diagonal[i + 1], 0);
    }
    const Matrix vvi = multiply(s.v, s.v_inverse, c);
    EXPECT_EQ(vvi, identity_matrix(c));
  }
}

TEST(Abelian, Invariants) {
  const AbelianGroup a(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(a.torsion(), (Vec{6}));
  EXPECT_EQ(a.free_rank(), 0u);
  EXPECT_EQ(a.order(), 6);
  EXPECT_TRUE(a.isomorphic(AbelianGroup::cyclic(6)));
  EXPECT_FALSE(AbelianGroup::cyclic(4).isomorphic(AbelianGroup::from_invariants({2, 2}, 0)));
  const AbelianGroup b(3, {{2, 4, 0}});
  EXPECT_EQ(b.torsion(), (Vec{2}));
  EXPECT_EQ(b.free_rank(), 2u);
  EXPECT_EQ(b.describe(), "Z/2 + Z^2");
  EXPECT_EQ(AbelianGroup().describe(), "0");
  EXPECT_TRUE(AbelianGroup(1, {{1}}).is_trivial());
}

TEST(Abelian, CanonicalCoordinatesDecideEquality) {
  const AbelianGroup a(2, {{2, 0}, {0, 3}});
  EXPECT_TRUE(a.equal({1, 0}, {3, 0}));
  EXPECT_TRUE(a.is_zero({2, 3}));
  EXPECT_FALSE(a.is_zero({1, 1}));
  EXPECT_EQ(a.elements().size(), 6u);
  for (const auto& x : a.elements()) EXPECT_EQ(a.canonical(a.from_canonical(a.canonical(x))), a.canonical(x));
}

TEST(Abelian, HomomorphismChecks) {
  auto z = ptr(AbelianGroup::free(1));
  auto z2 = ptr(AbelianGroup::cyclic(2));
  auto z4 = ptr(AbelianGroup::cyclic(4));
  EXPECT_THROW(Homomorphism(z2, z, {{1}}), InputError);  // 2 must go to 0
  EXPECT_NO_THROW(Homomorphism(z2, z4, {{2}}));
  const Homomorphism f(z, z4, {{1}});
  EXPECT_TRUE(f.is_surjective());
  EXPECT_FALSE(f.is_injective());
  const Homomorphism g(z4, z2, {{1}});
  EXPECT_TRUE(compose(g, f).is_surjective());
  EXPECT_TRUE(add(g, g).is_zero());
  EXPECT_TRUE(scale(g, 2).is_zero());
  EXPECT_TRUE(Homomorphism::identity(z4).is_isomorphism());
  EXPECT_TRUE(Homomorphism(z4, z4, {{3}}).is_isomorphism());
  EXPECT_FALSE(Homomorphism(z4, z4, {{2}}).is_isomorphism());
  EXPECT_TRUE(Homomorphism(z4, z4, {{5}}).equals(Homomorphism::identity(z4)));
}

TEST(Abelian, CheckedArithmeticOverflows) {
  constexpr Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked_add(big, 1), OverflowError);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), OverflowError);
  EXPECT_THROW(checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
  EXPECT_EQ(checked_mul(-3, 4), -12);
  EXPECT_EQ(mod_floor(-1, 4), 3);
}

TEST(Abelian, CommutativeMonoids) {
  EXPECT_NO_THROW(CommMonoid::cyclic(5).validate());
  EXPECT_TRUE(CommMonoid::cyclic(5).is_group());
  EXPECT_FALSE(CommMonoid::idempotent().is_group());
  const auto p = CommMonoid::product(CommMonoid::cyclic(2), CommMonoid::idempotent());
  EXPECT_EQ(p.size, 4u);
  EXPECT_NO_THROW(p.validate());
  CommMonoid bad{2, {0, 1, 0, 0}};  // 1 + 0 != 1
  EXPECT_THROW(bad.validate(), InputError);
}
