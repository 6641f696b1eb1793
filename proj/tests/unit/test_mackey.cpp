#include <gtest/gtest.h>

#include <fstream>

#include "mackey/errors.hpp"
#include "mackey/json_io.hpp"
#include "mackey/pcfunctor.hpp"
#include "random_data.hpp"

using namespace mackey;
using mackey::sample::Rng;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(MACKEY_DATA_DIR) + "/" + name);
  return Json::parse(in);
}

MackeyFunctor load_mackey(const std::string& name) { return make_mackey(mackey_from_json(load(name))); }

GSet coset(const GroupPtr& g, std::size_t cls) { return orbit_gset(g, g->class_representative(cls)); }

bool isomorphic(const MackeyFunctor& a, const MackeyFunctor& b) {
  const auto r = mackey_iso(a, b);
  return r.iso && verify_mackey_iso(a, b, *r.iso).ok();
}

// A random unimodular matrix and its inverse, from elementary row operations.
std::pair<Matrix, Matrix> random_unimodular(std::size_t n, Rng& rng) {
  Matrix u = identity_matrix(n), v = identity_matrix(n);
  if (n < 2) {
    if (n == 1 && sample::pick(rng, 2)) u[0][0] = v[0][0] = -1;
    return {u, v};
  }
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = sample::pick(rng, n);
    std::size_t j = sample::pick(rng, n - 1);
    if (j >= i) ++j;
    const Int k = static_cast<Int>(sample::pick(rng, 5)) - 2;
    // u <- E u with E = I + k e_ij; v <- v E^-1.
    for (std::size_t c = 0; c < n; ++c) u[i][c] += k * u[j][c];
    for (std::size_t r = 0; r < n; ++r) v[r][j] -= k * v[r][i];
  }
  return {u, v};
}

// The same functor written in new generators x' = x u at each level.
MackeyFunctor change_basis(const MackeyFunctor& m, Rng& rng) {
  MackeyData d = m.data();
  std::vector<std::pair<Matrix, Matrix>> uv;
  for (auto& a : d.values) {
    const std::size_t n = a.generators();
    uv.push_back(random_unimodular(n, rng));
    a = AbelianGroup(n, multiply(a.relations(), uv.back().first, n));
  }
  auto conj = [&](const Matrix& f, std::size_t from, std::size_t to) {
    const std::size_t cols = d.values[to].generators();
    return multiply(multiply(uv[from].second, f, cols), uv[to].first, cols);
  };
  for (auto& r : d.restrictions) r.matrix = conj(r.matrix, r.arrow.dst, r.arrow.src);
  for (auto& t : d.transfers) t.matrix = conj(t.matrix, t.arrow.src, t.arrow.dst);
  return make_mackey(d);
}

}  // namespace

TEST(Mackey, OrbitCategoryArrows) {
  auto oc = orbit_category(named_group("S3"));
  // Hom(G/e, G/e) has 6 maps, Hom(G/C2, G/C2) has |W(C2)| = 1.
  std::size_t ee = 0, cc = 0;
  for (const auto& p : oc->arrows()) {
    ee += p.src == 0 && p.dst == 0;
    cc += p.src == 1 && p.dst == 1;
    EXPECT_EQ(GMap(oc->as_map(p)).source(), oc->orbit(p.src));
  }
  EXPECT_EQ(ee, 6u);
  EXPECT_EQ(cc, 1u);
  for (const auto& p : oc->arrows()) {
    if (OrbitCategory::is_iso(p)) EXPECT_EQ(oc->compose(p, oc->inverse(p)), OrbitCategory::identity(p.dst));
    for (const auto& q : oc->arrows())
      if (q.dst == p.src) EXPECT_EQ(oc->as_map(oc->compose(p, q)), compose(oc->as_map(p), oc->as_map(q)));
  }
}

TEST(Mackey, ConstantFunctor) {
  auto g = named_group("S3");
  const auto m = constant_mackey(g, AbelianGroup::free(1));
  for (const auto& p : m.orbits().arrows()) {
    EXPECT_TRUE(m.res(p).equals(Homomorphism::identity(m.value_ptr(p.src))));
    const Int index = static_cast<Int>(m.orbits().orbit(p.src).size() / m.orbits().orbit(p.dst).size());
    EXPECT_EQ(m.tr(p).matrix(), (Matrix{{index}}));
  }
}

TEST(Mackey, DataFilesValidate) {
  for (auto name : {"constant_z_c2.json", "sign_z4_c2.json", "constant_z2_s3.json"})
    EXPECT_TRUE(check_mackey(mackey_from_json(load(name))).report.ok()) << name;
}

TEST(Mackey, BrokenTransferFailsTheDoubleCosetFormula) {
  const auto r = check_mackey(mackey_from_json(load("bad_transfer_c2.json"))).report;
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has("double-coset"));
  EXPECT_THROW(make_mackey(mackey_from_json(load("bad_transfer_c2.json"))), MackeyAxiomError);
}

TEST(Mackey, MissingConjugationIsReported) {
  Json j = load("sign_z4_c2.json");
  j.erase("conjugations");
  EXPECT_TRUE(check_mackey(mackey_from_json(j)).report.has("missing"));
}

TEST(Mackey, BurnsideFunctorValues) {
  auto g = named_group("C2");
  const auto b = burnside_mackey(GSet::point(g));
  EXPECT_TRUE(b.value(0).isomorphic(AbelianGroup::free(1)));
  EXPECT_TRUE(b.value(1).isomorphic(AbelianGroup::free(2)));
  const auto s3 = burnside_mackey(GSet::point(named_group("S3")));
  EXPECT_EQ(s3.value(3).free_rank(), 4u);
}

// pt <- C2/e -> pt acts on the Burnside ring as multiplication by [C2/e].
TEST(Mackey, SpanActionOnBurnsideRing) {
  for (auto name : {"C2", "S3"}) {
    auto g = named_group(name);
    const GSet pt = GSet::point(g);
    const auto m = burnside_mackey(pt);
    const auto ring = burnside_ring(g);
    for (std::size_t i = 0; i < ring.rank; ++i) {
      const auto f = span_action(m, BurnsideElement::basis_element(pt, pt, i));
      Matrix expected;
      for (std::size_t j = 0; j < ring.rank; ++j) expected.push_back(ring.products[i][j]);
      EXPECT_EQ(f.matrix(), expected) << name;
    }
  }
  auto c2 = named_group("C2");
  const GSet pt = GSet::point(c2), free = coset(c2, 0);
  const Span s = Span::make(GMap::make(free, pt, {0, 0}), GMap::make(free, pt, {0, 0}));
  EXPECT_EQ(span_action(burnside_mackey(pt), s).matrix(), (Matrix{{2, 0}, {1, 0}}));
}

TEST(Mackey, SpanActionIsFunctorial) {
  Rng rng(41);
  for (auto name : {"C2", "S3", "D4"}) {
    auto g = named_group(name);
    const std::vector<MackeyFunctor> ms = {burnside_mackey(GSet::point(g)), constant_mackey(g, AbelianGroup::free(1)),
                                           constant_mackey(g, AbelianGroup::cyclic(3))};
    for (const auto& m : ms)
      for (int t = 0; t < 10; ++t) {
        const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng);
        const GSet c = sample::random_gset(g, rng);
        const Span s = sample::random_span(a, b, rng), u = sample::random_span(b, c, rng);
        EXPECT_TRUE(span_action(m, compose_spans(s, u)).equals(compose(span_action(m, s), span_action(m, u))));
        EXPECT_TRUE(span_action(m, s).equals(span_action(m, span_to_element(s))));
      }
  }
}

TEST(Mackey, ValuesAreAdditive) {
  Rng rng(42);
  auto g = named_group("S3");
  const auto m = burnside_mackey(GSet::point(g));
  for (int t = 0; t < 10; ++t) {
    const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng);
    const auto va = evaluate(m, a), vb = evaluate(m, b), vab = evaluate(m, disjoint_union(a, b));
    EXPECT_TRUE(vab.group->isomorphic(direct_sum({va.group.get(), vb.group.get()})));
  }
}

TEST(Mackey, IsoFindsRandomChangesOfBasis) {
  Rng rng(43);
  const auto sign = load_mackey("sign_z4_c2.json");
  auto c2 = named_group("C2");
  const std::vector<MackeyFunctor> ms = {
      sign, direct_sum(sign, constant_mackey(c2, AbelianGroup::cyclic(3))),
      direct_sum(constant_mackey(c2, AbelianGroup::free(1)), constant_mackey(c2, AbelianGroup::cyclic(2))),
      burnside_mackey(GSet::point(c2)), load_mackey("constant_z2_s3.json"),
      reduce_mod(burnside_mackey(GSet::point(named_group("S3"))), 4)};
  for (const auto& m : ms)
    for (int t = 0; t < 5; ++t) EXPECT_TRUE(isomorphic(m, change_basis(m, rng))) << &m - ms.data() << " " << t;
}

TEST(Mackey, IsoRejectsNonIsomorphicFunctors) {
  auto g = named_group("C2");
  EXPECT_FALSE(mackey_iso(constant_mackey(g, AbelianGroup::free(1)), burnside_mackey(GSet::point(g))).iso);
  // Same values with the roles of restriction and transfer exchanged.
  const auto z2 = constant_mackey(g, AbelianGroup::cyclic(2));
  MackeyData d = z2.data();
  for (auto& r : d.restrictions)
    if (!OrbitCategory::is_iso(r.arrow)) r.matrix = {{0}};
  for (auto& t : d.transfers) t.matrix = {{1}};
  const auto other = make_mackey(d);
  const auto r = mackey_iso(z2, other);
  EXPECT_FALSE(r.iso);
  EXPECT_TRUE(r.exhaustive);
}

TEST(Mackey, ReduceModAndDirectSum) {
  auto g = named_group("S3");
  EXPECT_TRUE(isomorphic(reduce_mod(constant_mackey(g, AbelianGroup::free(1)), 2), load_mackey("constant_z2_s3.json")));
  const auto z = zero_mackey(g);
  const auto b = burnside_mackey(GSet::point(g));
  EXPECT_TRUE(isomorphic(direct_sum(b, z), b));
}

TEST(Mackey, JsonRoundTrip) {
  for (const auto& m : {load_mackey("sign_z4_c2.json"), burnside_mackey(GSet::point(named_group("S3")))}) {
    const auto back = make_mackey(mackey_from_json(mackey_to_json(m)));
    ASSERT_EQ(back.restrictions().size(), m.restrictions().size());
    for (std::size_t i = 0; i < m.restrictions().size(); ++i) {
      EXPECT_TRUE(back.restrictions()[i].equals(m.restrictions()[i]));
      EXPECT_TRUE(back.transfers()[i].equals(m.transfers()[i]));
    }
  }
}

TEST(PCFunctor, DiscreteLevelsAreValid) {
  auto a = std::make_shared<const AbelianGroup>(AbelianGroup::from_invariants({2, 4}, 0));
  const auto l = discrete_level(a, 64);
  EXPECT_EQ(l.cat->objects(), 8u);
  EXPECT_TRUE(validate_permcat(*l.cat).ok());
  const Homomorphism twice(a, a, {{0, 0}, {0, 2}});
  EXPECT_TRUE(validate_lax(discrete_functor(l, l, twice)).ok());
  EXPECT_THROW(discrete_level(a, 4), ResourceError);
  EXPECT_THROW(discrete_level(std::make_shared<const AbelianGroup>(AbelianGroup::free(1)), 64), ResourceError);
}

TEST(PCFunctor, MackeyRoundTrip) {
  auto c2 = named_group("C2");
  const std::vector<MackeyFunctor> ms = {load_mackey("sign_z4_c2.json"), load_mackey("constant_z2_s3.json"),
                                         constant_mackey(c2, AbelianGroup::free(1)), burnside_mackey(GSet::point(c2))};
  for (const auto& m : ms) {
    const auto d = mackey_to_pcfunctor(m);
    EXPECT_TRUE(validate_pcfunctor(d).ok());
    EXPECT_TRUE(isomorphic(kg_pi0(d), m));
    KgOptions all_symbolic;
    all_symbolic.explicit_cap = 0;
    EXPECT_TRUE(isomorphic(kg_pi0(d, all_symbolic), m));
  }
}

TEST(PCFunctor, SuspensionRecoversRepresentable) {
  for (auto name : {"C2", "S3"}) {
    auto g = named_group(name);
    for (const GSet& x : {GSet::point(g), coset(g, 0), coset(g, 1)}) {
      const auto d = suspension_pcfunctor(x);
      EXPECT_TRUE(validate_pcfunctor(d).ok());
      EXPECT_TRUE(isomorphic(kg_pi0(d), burnside_mackey(x))) << name;
    }
  }
}
