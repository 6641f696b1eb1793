#include "mackey/coherence.hpp"

#include <map>
#include <optional>

#include "mackey/errors.hpp"

namespace mackey {

std::vector<CatalogEntry> permcat_catalog() {
  const auto z2 = CommMonoid::cyclic(2);
  const auto z3 = CommMonoid::cyclic(3);
  return {
      {"discrete(0)", discrete_permcat(CommMonoid::trivial(), "discrete(0)")},
      {"discrete(Z/2)", discrete_permcat(z2, "discrete(Z/2)")},
      {"discrete(Z/3)", discrete_permcat(z3, "discrete(Z/3)")},
      {"discrete(Z/2xZ/2)", discrete_permcat(CommMonoid::product(z2, z2), "discrete(Z/2xZ/2)")},
      {"discrete({0,1})", discrete_permcat(CommMonoid::idempotent(), "discrete({0,1})")},
      {"group_morphism(Z/2,Z/2)", group_morphism_permcat(z2, z2, "group_morphism(Z/2,Z/2)")},
      {"group_morphism(Z/2,Z/3)", group_morphism_permcat(z2, z3, "group_morphism(Z/2,Z/3)")},
  };
}

MultilinearFunctor zero_bilinear(const PermCatPtr& a, const PermCatPtr& b, const PermCatPtr& c) {
  MultilinearFunctor f;
  f.sources = {a, b};
  f.target = c;
  const std::size_t n_obj = a->objects() * b->objects();
  f.obj.assign(n_obj, 0);
  f.mor.assign(a->morphisms() * b->morphisms(), c->id(0));
  f.delta = {std::vector<Mor>(n_obj * a->objects(), c->id(0)),
             std::vector<Mor>(n_obj * b->objects(), c->id(0))};
  return f;
}

MultilinearFunctor product_bilinear(const PermCatPtr& zn, std::size_t n) {
  if (zn->objects() != n || zn->morphisms() != n)
    throw InputError("product_bilinear: expected discrete(Z/n)");
  MultilinearFunctor f;
  f.sources = {zn, zn};
  f.target = zn;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) f.obj.push_back(static_cast<Obj>((a * b) % n));
  f.mor = f.obj;  // discrete: morphism ids are object ids
  std::vector<Mor> d1, d2;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      for (Obj a1 = 0; a1 < n; ++a1) d1.push_back(static_cast<Mor>(((a + a1) % n) * b % n));
      for (Obj b1 = 0; b1 < n; ++b1) d2.push_back(static_cast<Mor>(a * ((b + b1) % n) % n));
    }
  f.delta = {std::move(d1), std::move(d2)};
  return f;
}

namespace {


class Suite {
 public:
  Suite(const std::vector<CatalogEntry>& catalog, const Caps& caps) : cat_(catalog), caps_(caps) {}

  void add(std::string check, std::string subject, ValidationReport r) {
    lines_.push_back(SuiteLine{std::move(check), std::move(subject), std::move(r), false, ""});
  }
  void skip(std::string check, std::string subject, std::string note) {
    lines_.push_back(SuiteLine{std::move(check), std::move(subject), {}, true, std::move(note)});
  }
  // Runs one check; a cap being hit is recorded as a skip rather than a failure.
  template <class F>
  void guarded(const std::string& check, const std::string& subject, F&& f) {
    try {
      add(check, subject, f());
    } catch (const ResourceError& e) {
      skip(check, subject, "cap " + e.cap() + ": " + e.what());
    }
  }

  // hom category for catalog indices, or nothing when a cap is hit.
  const HomCategory* hom(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    auto it = homs_.find(key);
    if (it == homs_.end()) {
      std::optional<HomPtr> h;
      std::string note;
      try {
        h = hom_permcat(cat_[i].cat, cat_[j].cat, caps_);
      } catch (const ResourceError& e) {
        note = "cap " + e.cap() + ": " + e.what();
      }
      it = homs_.emplace(key, std::make_pair(h.value_or(nullptr), note)).first;
    }
    return it->second.first.get();
  }
  const std::string& hom_note(std::size_t i, std::size_t j) { return homs_.at({i, j}).second; }

  std::string pair_name(std::size_t i, std::size_t j) const {
    return cat_[i].name + " -> " + cat_[j].name;
  }
  std::string triple_name(std::size_t i, std::size_t j, std::size_t k) const {
    return cat_[i].name + ", " + cat_[j].name + ", " + cat_[k].name;
  }

  std::vector<SuiteLine> run() {
    const std::size_t n = cat_.size();
    for (std::size_t i = 0; i < n; ++i) add("permcat", cat_[i].name, validate_permcat(*cat_[i].cat));

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const HomCategory* h = hom(i, j);
        if (!h) {
          skip("hom", pair_name(i, j), hom_note(i, j));
          continue;
        }
        add("hom-permcat", pair_name(i, j), validate_permcat(*h->cat));
        ValidationReport lax;
        for (std::size_t f = 0; f < h->functors.size(); ++f)
          lax.merge(validate_lax(h->functors[f]), "functor " + std::to_string(f) + ": ");
        add("lax", pair_name(i, j), lax);
        add("eval", pair_name(i, j), validate_multilinear(eval_bilinear(*h)));
      }

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) lax_composition(i, j, k);

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) bilinear_composition(i, j, k);

    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) currying(j, k);
    products();
    return std::move(lines_);
  }

 private:
  void lax_composition(std::size_t i, std::size_t j, std::size_t k) {
    const HomCategory* f = hom(i, j);
    const HomCategory* g = hom(j, k);
    if (!f || !g) return;
    ValidationReport r;
    const auto id_i = identity_lax(cat_[i].cat);
    const auto id_j = identity_lax(cat_[j].cat);
    for (std::size_t a = 0; a < f->functors.size(); ++a) {
      const auto& fa = f->functors[a];
      if (!(compose_lax(fa, id_i) == fa) || !(compose_lax(id_j, fa) == fa))
        r.fail("lax-unit", "functor " + std::to_string(a));
      for (std::size_t b = 0; b < g->functors.size(); ++b) {
        auto gf = compose_lax(g->functors[b], fa);
        auto sub = validate_lax(gf);
        if (!sub.ok()) r.merge(sub, "g=" + std::to_string(b) + " f=" + std::to_string(a) + ": ");
      }
    }
    // Associativity over every chain i -> j -> k -> l.
    for (std::size_t l = 0; l < cat_.size(); ++l) {
      const HomCategory* h = hom(k, l);
      if (!h) continue;
      for (std::size_t a = 0; a < f->functors.size(); ++a)
        for (std::size_t b = 0; b < g->functors.size(); ++b) {
          const auto gf = compose_lax(g->functors[b], f->functors[a]);
          for (std::size_t c = 0; c < h->functors.size(); ++c) {
            const auto& hc = h->functors[c];
            if (!(compose_lax(hc, gf) == compose_lax(compose_lax(hc, g->functors[b]), f->functors[a])))
              r.fail("lax-associativity", tuple_witness({{"f", static_cast<long long>(a)},
                                                         {"g", static_cast<long long>(b)},
                                                         {"h", static_cast<long long>(c)}}));
          }
        }
    }
    add("lax-compose", triple_name(i, j, k), r);
  }

  void bilinear_composition(std::size_t i, std::size_t j, std::size_t k) {
    const HomCategory* ab = hom(i, j);
    const HomCategory* bc = hom(j, k);
    const HomCategory* ac = hom(i, k);
    if (!ab || !bc || !ac) return;
    const std::size_t limit = caps_.max_bilinear_morphisms;
    if (ab->cat->morphisms() > limit || bc->cat->morphisms() > limit || ac->cat->morphisms() > limit) {
      skip("composition", triple_name(i, j, k),
           "hom categories above " + std::to_string(limit) + " morphisms");
      return;
    }
    guarded("composition", triple_name(i, j, k),
            [&] { return validate_multilinear(composition_bilinear(*bc, *ab, *ac)); });
    guarded("trilinear", triple_name(i, j, k),
            [&] { return check_trilinear_eval(cat_[i].cat, cat_[j].cat, cat_[k].cat, caps_); });
  }

  void currying(std::size_t j, std::size_t k) {
    const HomCategory* bc = hom(j, k);
    if (!bc) return;
    const std::string subject = pair_name(j, k);
    // curry(ev) is the identity of Perm(B, C).
    ValidationReport r;
    const auto ev = eval_bilinear(*bc);
    const auto g = curry(ev, *bc);
    if (!(g == identity_lax(bc->cat))) r.fail("curry-ev", "curry(ev) is not the identity");
    add("curry-ev", subject, r);
    if (bc->cat->objects() > caps_.max_objects || bc->cat->morphisms() > caps_.max_morphisms) {
      skip("curry-uniqueness", subject, "Perm(B, C) above the enumeration caps");
      return;
    }
    guarded("curry-uniqueness", "ev: " + subject, [&] { return check_curry(ev, *bc, caps_).report; });
    // The zero bilinear map curries to the zero functor.
    for (std::size_t i = 0; i < cat_.size(); ++i) {
      if (cat_[i].cat->objects() > 3) continue;
      guarded("curry-zero", cat_[i].name + " x " + subject, [&] {
        ValidationReport z;
        const auto zb = zero_bilinear(cat_[i].cat, cat_[j].cat, cat_[k].cat);
        auto cc = check_curry(zb, *bc, caps_);
        if (!(cc.g == zero_lax(cat_[i].cat, bc->cat))) z.fail("curry-zero", "curry(0) is not 0");
        z.merge(cc.report);
        return z;
      });
    }
  }

  void products() {
    for (std::size_t i = 0; i < cat_.size(); ++i) {
      const auto& c = cat_[i].cat;
      const std::size_t n = c->objects();
      if (n < 2 || c->morphisms() != n) continue;
      // Only the cyclic discrete entries carry a ring structure.
      bool cyclic = true;
      for (Obj a = 0; a < n && cyclic; ++a)
        for (Obj b = 0; b < n && cyclic; ++b) cyclic = c->osum(a, b) == (a + b) % n;
      if (!cyclic) continue;
      const auto f = product_bilinear(c, n);
      add("bilinear-product", cat_[i].name, validate_multilinear(f));
      const HomCategory* bc = hom(i, i);
      if (bc) guarded("curry-product", cat_[i].name, [&] { return check_curry(f, *bc, caps_).report; });
    }
  }

  const std::vector<CatalogEntry>& cat_;
  Caps caps_;
  std::vector<SuiteLine> lines_;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<HomPtr, std::string>> homs_;
};

}  // namespace

std::vector<SuiteLine> coherence_suite(const std::vector<CatalogEntry>& catalog, const Caps& caps) {
  return Suite(catalog, caps).run();
}

}  // namespace mackey
