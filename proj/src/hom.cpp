#include "mackey/hom.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

constexpr int kFixed = -1;

// Backtracking over a vector of slots, some of which are variables with finite
// domains. Each constraint is checked as soon as its last variable is assigned.
class SlotSearch {
 public:
  using Check = std::function<bool(const std::vector<Mor>&)>;

  SlotSearch(std::vector<Mor> initial, std::vector<std::size_t> var_slots,
             std::vector<std::vector<Mor>> domains)
      : vals_(std::move(initial)), var_slot_(std::move(var_slots)), domains_(std::move(domains)),
        slot_var_(vals_.size(), kFixed), buckets_(var_slot_.size()) {
    for (std::size_t v = 0; v < var_slot_.size(); ++v) slot_var_[var_slot_[v]] = static_cast<int>(v);
  }

  void add(std::initializer_list<std::size_t> slots, Check check) {
    int last = kFixed;
    for (auto s : slots) last = std::max(last, slot_var_[s]);
    if (last == kFixed) fixed_.push_back(std::move(check));
    else buckets_[static_cast<std::size_t>(last)].push_back(std::move(check));
  }

  template <typename F>
  void run(F&& on_solution, std::size_t& nodes, std::size_t node_cap) {
    for (const auto& c : fixed_)
      if (!c(vals_)) return;
    descend(0, on_solution, nodes, node_cap);
  }

 private:
  template <typename F>
  void descend(std::size_t v, F& on_solution, std::size_t& nodes, std::size_t node_cap) {
    if (v == var_slot_.size()) {
      on_solution(vals_);
      return;
    }
    for (Mor x : domains_[v]) {
      if (++nodes > node_cap)
        throw ResourceError("search-nodes", "enumeration exceeded " + std::to_string(node_cap) +
                                                " search nodes");
      vals_[var_slot_[v]] = x;
      bool ok = true;
      for (const auto& c : buckets_[v])
        if (!c(vals_)) {
          ok = false;
          break;
        }
      if (ok) descend(v + 1, on_solution, nodes, node_cap);
    }
  }

  std::vector<Mor> vals_;
  std::vector<std::size_t> var_slot_;
  std::vector<std::vector<Mor>> domains_;
  std::vector<int> slot_var_;
  std::vector<std::vector<Check>> buckets_;
  std::vector<Check> fixed_;
};

void check_input_caps(const FinPermCat& c, const Caps& caps) {
  if (c.objects() > caps.max_objects)
    throw ResourceError("hom-objects", "category '" + c.name() + "' has " +
                                           std::to_string(c.objects()) + " objects, cap is " +
                                           std::to_string(caps.max_objects));
  if (c.morphisms() > caps.max_morphisms)
    throw ResourceError("hom-morphisms", "category '" + c.name() + "' has " +
                                             std::to_string(c.morphisms()) + " morphisms, cap is " +
                                             std::to_string(caps.max_morphisms));
}

std::vector<std::uint32_t> functor_key(const LaxFunctor& f) {
  std::vector<std::uint32_t> k(f.obj.begin(), f.obj.end());
  k.insert(k.end(), f.mor.begin(), f.mor.end());
  k.insert(k.end(), f.delta.begin(), f.delta.end());
  return k;
}

std::vector<std::uint32_t> transformation_key(Obj dom, Obj cod, const std::vector<Mor>& comps) {
  std::vector<std::uint32_t> k{dom, cod};
  k.insert(k.end(), comps.begin(), comps.end());
  return k;
}

// All morphism and structure-morphism choices over a fixed object map.
void enumerate_over_objects(const FinPermCat& a, const FinPermCat& b, const PermCatPtr& ap,
                            const PermCatPtr& bp, const std::vector<Obj>& o,
                            std::vector<LaxFunctor>& out, const Caps& caps, std::size_t& nodes) {
  const std::size_t m = a.objects();
  const std::size_t nm = a.morphisms();
  auto mslot = [](Mor u) -> std::size_t { return u; };
  auto dslot = [&](Obj x, Obj y) -> std::size_t { return nm + x * m + y; };

  std::vector<Mor> init(nm + m * m, kNoMor);
  std::vector<std::size_t> vars;
  std::vector<std::vector<Mor>> domains;
  for (Mor u = 0; u < nm; ++u) {
    if (a.id(a.dom(u)) == u) {
      init[mslot(u)] = b.id(o[a.dom(u)]);
      continue;
    }
    vars.push_back(mslot(u));
    domains.push_back(b.hom(o[a.dom(u)], o[a.cod(u)]));
  }
  for (Obj x = 0; x < m; ++x)
    for (Obj y = 0; y < m; ++y) {
      if (x == 0 || y == 0) {
        init[dslot(x, y)] = b.id(o[a.osum(x, y)]);
        continue;
      }
      vars.push_back(dslot(x, y));
      domains.push_back(b.hom(b.osum(o[x], o[y]), o[a.osum(x, y)]));
    }
  SlotSearch search(std::move(init), std::move(vars), std::move(domains));

  for (Mor u = 0; u < nm; ++u)
    for (Obj y = 0; y < m; ++y)
      for (Mor v : a.hom(a.cod(u), y)) {
        const Mor vu = a.comp(v, u);
        search.add({mslot(u), mslot(v), mslot(vu)}, [&b, u, v, vu](const std::vector<Mor>& s) {
          return s[vu] == b.comp(s[v], s[u]);
        });
      }
  for (Mor u = 0; u < nm; ++u)
    for (Mor v = 0; v < nm; ++v) {
      const std::size_t uv = mslot(a.msum(u, v));
      const std::size_t d0 = dslot(a.dom(u), a.dom(v));
      const std::size_t d1 = dslot(a.cod(u), a.cod(v));
      search.add({uv, d0, d1, mslot(u), mslot(v)}, [&b, u, v, uv, d0, d1](const std::vector<Mor>& s) {
        return b.comp(s[uv], s[d0]) == b.comp(s[d1], b.msum(s[u], s[v]));
      });
    }
  for (Obj x = 0; x < m; ++x)
    for (Obj y = 0; y < m; ++y) {
      const std::size_t dxy = dslot(x, y), dyx = dslot(y, x), g = mslot(a.gamma(x, y));
      const Mor tw = b.gamma(o[x], o[y]);
      search.add({dxy, dyx, g}, [&b, dxy, dyx, g, tw](const std::vector<Mor>& s) {
        return b.comp(s[g], s[dxy]) == b.comp(s[dyx], tw);
      });
      for (Obj z = 0; z < m; ++z) {
        const std::size_t top1 = dslot(x, a.osum(y, z)), top2 = dslot(y, z);
        const std::size_t bot1 = dslot(a.osum(x, y), z);
        const Mor idx = b.id(o[x]), idz = b.id(o[z]);
        search.add({top1, top2, bot1, dxy},
                   [&b, top1, top2, bot1, dxy, idx, idz](const std::vector<Mor>& s) {
                     const Mor top = b.comp(s[top1], b.msum(idx, s[top2]));
                     return top != kNoMor && top == b.comp(s[bot1], b.msum(s[dxy], idz));
                   });
      }
    }

  search.run(
      [&](const std::vector<Mor>& s) {
        if (out.size() >= caps.max_functors)
          throw ResourceError("hom-functors", "more than " + std::to_string(caps.max_functors) +
                                                  " lax functors");
        LaxFunctor f{ap, bp, o, {}, {}};
        f.mor.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nm));
        f.delta.assign(s.begin() + static_cast<std::ptrdiff_t>(nm), s.end());
        out.push_back(std::move(f));
      },
      nodes, caps.max_search_nodes);
}

}  // namespace

std::vector<LaxFunctor> enumerate_lax(const PermCatPtr& ap, const PermCatPtr& bp, const Caps& caps) {
  const FinPermCat& a = *ap;
  const FinPermCat& b = *bp;
  check_input_caps(a, caps);
  check_input_caps(b, caps);
  const std::size_t m = a.objects();
  std::vector<LaxFunctor> out;
  std::size_t nodes = 0;
  std::vector<Obj> o(m, 0);

  // Object maps, pruned by requiring every needed hom set to be nonempty.
  std::function<void(Obj)> assign = [&](Obj p) {
    if (p == m) {
      enumerate_over_objects(a, b, ap, bp, o, out, caps, nodes);
      return;
    }
    for (Obj x = 0; x < b.objects(); ++x) {
      if (++nodes > caps.max_search_nodes)
        throw ResourceError("search-nodes", "enumeration exceeded " +
                                                std::to_string(caps.max_search_nodes) + " search nodes");
      o[p] = x;
      bool ok = true;
      for (Obj y = 0; y <= p && ok; ++y)
        for (Obj z = 0; z <= p && ok; ++z) {
          const Obj s = a.osum(y, z);
          if (s <= p && (y == p || z == p || s == p))
            ok = !b.hom(b.osum(o[y], o[z]), o[s]).empty();
        }
      for (Mor u = 0; u < a.morphisms() && ok; ++u) {
        const Obj d = a.dom(u), c = a.cod(u);
        if (d <= p && c <= p && (d == p || c == p)) ok = !b.hom(o[d], o[c]).empty();
      }
      if (ok) assign(p + 1);
    }
  };
  o[0] = 0;
  assign(1);
  return out;
}

std::vector<std::vector<Mor>> enumerate_transformations(const LaxFunctor& f, const LaxFunctor& g,
                                                        const Caps& caps) {
  const FinPermCat& a = *f.source;
  const FinPermCat& b = *f.target;
  const std::size_t m = a.objects();
  std::vector<Mor> init(m, kNoMor);
  init[0] = b.id(0);
  std::vector<std::size_t> vars;
  std::vector<std::vector<Mor>> domains;
  for (Obj x = 1; x < m; ++x) {
    vars.push_back(x);
    domains.push_back(b.hom(f.obj[x], g.obj[x]));
  }
  SlotSearch search(std::move(init), std::move(vars), std::move(domains));
  for (Mor u = 0; u < a.morphisms(); ++u) {
    const Obj x = a.dom(u), y = a.cod(u);
    const Mor fu = f.mor[u], gu = g.mor[u];
    search.add({x, y}, [&b, x, y, fu, gu](const std::vector<Mor>& s) {
      return b.comp(s[y], fu) == b.comp(gu, s[x]);
    });
  }
  for (Obj x = 0; x < m; ++x)
    for (Obj y = 0; y < m; ++y) {
      const Obj xy = a.osum(x, y);
      const Mor df = f.d(x, y), dg = g.d(x, y);
      search.add({x, y, xy}, [&b, x, y, xy, df, dg](const std::vector<Mor>& s) {
        return b.comp(s[xy], df) == b.comp(dg, b.msum(s[x], s[y]));
      });
    }
  std::vector<std::vector<Mor>> out;
  std::size_t nodes = 0;
  search.run([&](const std::vector<Mor>& s) { out.push_back(s); }, nodes, caps.max_search_nodes);
  return out;
}

Obj HomCategory::find_functor(const LaxFunctor& f) const {
  auto it = functor_index.find(functor_key(f));
  return it == functor_index.end() ? kNoMor : it->second;
}

Mor HomCategory::find_transformation(Obj dom, Obj cod, const std::vector<Mor>& comps) const {
  auto it = transformation_index.find(transformation_key(dom, cod, comps));
  return it == transformation_index.end() ? kNoMor : it->second;
}

HomPtr hom_permcat(const PermCatPtr& ap, const PermCatPtr& bp, const Caps& caps) {
  auto h = std::make_shared<HomCategory>();
  h->source = ap;
  h->target = bp;
  const FinPermCat& a = *ap;
  const FinPermCat& b = *bp;
  const std::size_t m = a.objects();

  auto functors = enumerate_lax(ap, bp, caps);
  const LaxFunctor zero = zero_lax(ap, bp);
  h->functors.push_back(zero);
  for (auto& f : functors)
    if (!(f == zero)) h->functors.push_back(std::move(f));
  if (h->functors.size() != functors.size())
    throw std::logic_error("hom_permcat: the zero functor was not enumerated");
  for (std::size_t i = 0; i < h->functors.size(); ++i)
    h->functor_index.emplace(functor_key(h->functors[i]), static_cast<Obj>(i));

  const std::size_t nf = h->functors.size();
  FinPermCat::Tables t;
  t.objects = nf;
  auto lookup_functor = [&](const LaxFunctor& f) {
    Obj i = h->find_functor(f);
    if (i == kNoMor) throw std::logic_error("hom_permcat: functor sum is not a lax functor");
    return i;
  };
  for (Obj i = 0; i < nf; ++i)
    for (Obj j = 0; j < nf; ++j) {
      const auto& f = h->functors[i];
      const auto& g = h->functors[j];
      LaxFunctor s{ap, bp, {}, {}, {}};
      for (Obj x = 0; x < m; ++x) s.obj.push_back(b.osum(f.obj[x], g.obj[x]));
      for (Mor u = 0; u < a.morphisms(); ++u) s.mor.push_back(b.msum(f.mor[u], g.mor[u]));
      for (Obj x = 0; x < m; ++x)
        for (Obj y = 0; y < m; ++y) {
          const Mor twist = b.msum(b.msum(b.id(f.obj[x]), b.gamma(g.obj[x], f.obj[y])), b.id(g.obj[y]));
          s.delta.push_back(b.comp(b.msum(f.d(x, y), g.d(x, y)), twist));
        }
      t.object_sum.push_back(lookup_functor(s));
    }

  for (Obj i = 0; i < nf; ++i)
    for (Obj j = 0; j < nf; ++j)
      for (auto& comps : enumerate_transformations(h->functors[i], h->functors[j], caps)) {
        if (h->components.size() >= caps.max_transformations)
          throw ResourceError("hom-transformations",
                              "more than " + std::to_string(caps.max_transformations) +
                                  " monoidal transformations");
        const Mor id = static_cast<Mor>(h->components.size());
        h->transformation_index.emplace(transformation_key(i, j, comps), id);
        t.dom.push_back(i);
        t.cod.push_back(j);
        h->components.push_back(std::move(comps));
      }
  const std::size_t nt = h->components.size();
  auto lookup = [&](Obj d, Obj c, const std::vector<Mor>& comps) {
    Mor k = h->find_transformation(d, c, comps);
    if (k == kNoMor) throw std::logic_error("hom_permcat: transformation table is not closed");
    return k;
  };
  for (Obj i = 0; i < nf; ++i) {
    std::vector<Mor> comps;
    for (Obj x = 0; x < m; ++x) comps.push_back(b.id(h->functors[i].obj[x]));
    t.identity.push_back(lookup(i, i, comps));
  }
  t.compose.assign(nt * nt, kNoMor);
  t.morphism_sum.resize(nt * nt);
  for (Mor s = 0; s < nt; ++s)
    for (Mor r = 0; r < nt; ++r) {
      std::vector<Mor> sum(m);
      for (Obj x = 0; x < m; ++x) sum[x] = b.msum(h->components[s][x], h->components[r][x]);
      t.morphism_sum[s * nt + r] =
          lookup(t.object_sum[t.dom[s] * nf + t.dom[r]], t.object_sum[t.cod[s] * nf + t.cod[r]], sum);
      if (t.cod[r] != t.dom[s]) continue;
      std::vector<Mor> comp(m);
      for (Obj x = 0; x < m; ++x) comp[x] = b.comp(h->components[s][x], h->components[r][x]);
      t.compose[s * nt + r] = lookup(t.dom[r], t.cod[s], comp);
    }
  for (Obj i = 0; i < nf; ++i)
    for (Obj j = 0; j < nf; ++j) {
      std::vector<Mor> comps;
      for (Obj x = 0; x < m; ++x) comps.push_back(b.gamma(h->functors[i].obj[x], h->functors[j].obj[x]));
      t.symmetry.push_back(lookup(t.object_sum[i * nf + j], t.object_sum[j * nf + i], comps));
    }
  h->cat = std::make_shared<FinPermCat>("hom(" + a.name() + "," + b.name() + ")", std::move(t));
  return h;
}

MultilinearFunctor eval_bilinear(const HomCategory& h) {
  const FinPermCat& hc = *h.cat;
  const FinPermCat& a = *h.source;
  const FinPermCat& b = *h.target;
  MultilinearFunctor ev;
  ev.sources = {h.cat, h.source};
  ev.target = h.target;
  for (Obj f = 0; f < hc.objects(); ++f)
    for (Obj x = 0; x < a.objects(); ++x) ev.obj.push_back(h.functors[f].obj[x]);
  for (Mor th = 0; th < hc.morphisms(); ++th)
    for (Mor u = 0; u < a.morphisms(); ++u)
      ev.mor.push_back(b.comp(h.components[th][a.cod(u)], h.functors[hc.dom(th)].mor[u]));
  std::vector<Mor> d1, d2;
  for (Obj f = 0; f < hc.objects(); ++f)
    for (Obj x = 0; x < a.objects(); ++x) {
      for (Obj g = 0; g < hc.objects(); ++g) d1.push_back(b.id(h.functors[hc.osum(f, g)].obj[x]));
      for (Obj y = 0; y < a.objects(); ++y) d2.push_back(h.functors[f].d(x, y));
    }
  ev.delta = {std::move(d1), std::move(d2)};
  return ev;
}

MultilinearFunctor composition_bilinear(const HomCategory& bc, const HomCategory& ab,
                                        const HomCategory& ac) {
  const FinPermCat& c = *bc.target;
  const FinPermCat& hbc = *bc.cat;
  const FinPermCat& hab = *ab.cat;
  const std::size_t m = ab.source->objects();
  auto find = [&](const LaxFunctor& f) {
    Obj i = ac.find_functor(f);
    if (i == kNoMor) throw std::logic_error("composition_bilinear: composite is not in Perm(A, C)");
    return i;
  };
  auto transformation = [&](Obj d, Obj e, const std::vector<Mor>& comps) {
    Mor k = ac.find_transformation(d, e, comps);
    if (k == kNoMor)
      throw std::logic_error("composition_bilinear: components are not a monoidal transformation");
    return k;
  };

  MultilinearFunctor cm;
  cm.sources = {bc.cat, ab.cat};
  cm.target = ac.cat;
  std::vector<Obj> composite(hbc.objects() * hab.objects());
  for (Obj g = 0; g < hbc.objects(); ++g)
    for (Obj f = 0; f < hab.objects(); ++f) {
      composite[g * hab.objects() + f] = find(compose_lax(bc.functors[g], ab.functors[f]));
      cm.obj.push_back(composite[g * hab.objects() + f]);
    }
  for (Mor s = 0; s < hbc.morphisms(); ++s)
    for (Mor th = 0; th < hab.morphisms(); ++th) {
      const auto& g = bc.functors[hbc.dom(s)];
      const auto& f1 = ab.functors[hab.cod(th)];
      std::vector<Mor> comps(m);
      for (Obj x = 0; x < m; ++x) comps[x] = c.comp(bc.components[s][f1.obj[x]], g.mor[ab.components[th][x]]);
      cm.mor.push_back(transformation(composite[hbc.dom(s) * hab.objects() + hab.dom(th)],
                                      composite[hbc.cod(s) * hab.objects() + hab.cod(th)], comps));
    }
  std::vector<Mor> d1, d2;
  for (Obj g = 0; g < hbc.objects(); ++g)
    for (Obj f = 0; f < hab.objects(); ++f) {
      for (Obj g1 = 0; g1 < hbc.objects(); ++g1)
        d1.push_back(ac.cat->id(composite[hbc.osum(g, g1) * hab.objects() + f]));
      for (Obj f1 = 0; f1 < hab.objects(); ++f1) {
        std::vector<Mor> comps(m);
        for (Obj x = 0; x < m; ++x)
          comps[x] = bc.functors[g].d(ab.functors[f].obj[x], ab.functors[f1].obj[x]);
        d2.push_back(transformation(ac.cat->osum(composite[g * hab.objects() + f],
                                                 composite[g * hab.objects() + f1]),
                                    composite[g * hab.objects() + hab.osum(f, f1)], comps));
      }
    }
  cm.delta = {std::move(d1), std::move(d2)};
  return cm;
}

MultilinearFunctor identity_multilinear(const PermCatPtr& c) { return to_multilinear(identity_lax(c)); }

ValidationReport check_trilinear_eval(const PermCatPtr& a, const PermCatPtr& b, const PermCatPtr& c,
                                      const Caps& caps) {
  auto ab = hom_permcat(a, b, caps);
  auto bc = hom_permcat(b, c, caps);
  auto ac = hom_permcat(a, c, caps);
  const auto left = compose_multilinear(eval_bilinear(*ac),
                                        {composition_bilinear(*bc, *ab, *ac), identity_multilinear(a)});
  const auto right =
      compose_multilinear(eval_bilinear(*bc), {identity_multilinear(bc->cat), eval_bilinear(*ab)});
  ValidationReport r;
  if (left.obj != right.obj) r.fail("trilinear-objects", "ev(comp(g,f),a) != ev(g,ev(f,a))");
  if (left.mor != right.mor) r.fail("trilinear-morphisms", "morphism tables differ");
  for (std::size_t i = 0; i < 3; ++i)
    if (left.delta[i] != right.delta[i])
      r.fail("trilinear-constraint", "slot=" + std::to_string(i + 1));
  r.merge(validate_multilinear(left), "trilinear-left:");
  return r;
}

LaxFunctor curry(const MultilinearFunctor& f, const HomCategory& bc) {
  if (f.arity() != 2) throw InputError("curry: expected a bilinear functor");
  const FinPermCat& a = *f.sources[0];
  const FinPermCat& b = *f.sources[1];
  const FinPermCat& hc = *bc.cat;
  auto missing = [](const char* what) {
    return InputError(std::string("curry: ") + what + " is not in Perm(B, C); f is not bilinear");
  };
  LaxFunctor g{f.sources[0], bc.cat, {}, {}, {}};
  for (Obj x = 0; x < a.objects(); ++x) {
    LaxFunctor fx{f.sources[1], f.target, {}, {}, {}};
    for (Obj y = 0; y < b.objects(); ++y) fx.obj.push_back(f.at({x, y}));
    for (Mor v = 0; v < b.morphisms(); ++v) fx.mor.push_back(f.at_mor({a.id(x), v}));
    for (Obj y = 0; y < b.objects(); ++y)
      for (Obj y1 = 0; y1 < b.objects(); ++y1) fx.delta.push_back(f.d(1, {x, y}, y1));
    const Obj i = bc.find_functor(fx);
    if (i == kNoMor) throw missing("f(a, -)");
    g.obj.push_back(i);
  }
  for (Mor l = 0; l < a.morphisms(); ++l) {
    std::vector<Mor> comps;
    for (Obj y = 0; y < b.objects(); ++y) comps.push_back(f.at_mor({l, b.id(y)}));
    const Mor k = bc.find_transformation(g.obj[a.dom(l)], g.obj[a.cod(l)], comps);
    if (k == kNoMor) throw missing("f(l, -)");
    g.mor.push_back(k);
  }
  for (Obj x = 0; x < a.objects(); ++x)
    for (Obj x1 = 0; x1 < a.objects(); ++x1) {
      std::vector<Mor> comps;
      for (Obj y = 0; y < b.objects(); ++y) comps.push_back(f.d(0, {x, y}, x1));
      const Mor k = bc.find_transformation(hc.osum(g.obj[x], g.obj[x1]), g.obj[a.osum(x, x1)], comps);
      if (k == kNoMor) throw missing("delta_1");
      g.delta.push_back(k);
    }
  return g;
}

CurryCheck check_curry(const MultilinearFunctor& f, const HomCategory& bc, const Caps& caps) {
  CurryCheck out;
  out.g = curry(f, bc);
  out.report = validate_lax(out.g);
  const auto ev = eval_bilinear(bc);
  const auto id_b = identity_multilinear(f.sources[1]);
  auto factors = [&](const LaxFunctor& g) {
    const auto h = compose_multilinear(ev, {to_multilinear(g), id_b});
    return h.obj == f.obj && h.mor == f.mor && h.delta == f.delta;
  };
  if (!factors(out.g)) out.report.fail("curry-factorization", "ev . (g, id) != f");
  for (const auto& g : enumerate_lax(f.sources[0], bc.cat, caps))
    if (factors(g)) {
      ++out.factorizations;
      if (!(g == out.g)) out.report.fail("curry-uniqueness", "a second factorization exists");
    }
  if (out.factorizations != 1)
    out.report.fail("curry-uniqueness", "found " + std::to_string(out.factorizations) + " factorizations");
  return out;
}

}  // namespace mackey
