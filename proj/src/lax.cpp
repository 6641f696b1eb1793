#include "mackey/lax.hpp"

#include <string>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

bool same_cat(const PermCatPtr& a, const PermCatPtr& b) {
  if (a == b) return true;
  const auto& x = a->tables();
  const auto& y = b->tables();
  return x.objects == y.objects && x.object_sum == y.object_sum && x.dom == y.dom &&
         x.cod == y.cod && x.identity == y.identity && x.compose == y.compose &&
         x.morphism_sum == y.morphism_sum && x.symmetry == y.symmetry;
}

std::string list_witness(const char* name, const std::vector<std::uint32_t>& t) {
  std::string s = std::string(name) + "=(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Checks one commuting square: both composites defined, with the expected
// endpoints, and equal.
bool square_ok(const FinPermCat& c, Mor lhs, Mor rhs, Obj from, Obj to) {
  return lhs != kNoMor && rhs != kNoMor && lhs == rhs && c.dom(lhs) == from && c.cod(lhs) == to;
}

}  // namespace

LaxFunctor identity_lax(const PermCatPtr& c) {
  LaxFunctor f{c, c, {}, {}, {}};
  for (Obj a = 0; a < c->objects(); ++a) f.obj.push_back(a);
  for (Mor u = 0; u < c->morphisms(); ++u) f.mor.push_back(u);
  for (Obj a = 0; a < c->objects(); ++a)
    for (Obj b = 0; b < c->objects(); ++b) f.delta.push_back(c->id(c->osum(a, b)));
  return f;
}

LaxFunctor zero_lax(const PermCatPtr& source, const PermCatPtr& target) {
  LaxFunctor f{source, target, {}, {}, {}};
  f.obj.assign(source->objects(), 0);
  f.mor.assign(source->morphisms(), target->id(0));
  f.delta.assign(source->objects() * source->objects(), target->id(0));
  return f;
}

std::size_t MultilinearFunctor::object_index(const std::vector<Obj>& t) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) idx = idx * sources[i]->objects() + t[i];
  return idx;
}

std::size_t MultilinearFunctor::morphism_index(const std::vector<Mor>& t) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) idx = idx * sources[i]->morphisms() + t[i];
  return idx;
}

std::vector<std::vector<std::uint32_t>> all_tuples(const std::vector<std::size_t>& radix) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto r : radix)
    if (r == 0) return out;
  std::vector<std::uint32_t> t(radix.size(), 0);
  for (;;) {
    out.push_back(t);
    std::size_t i = t.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++t[i] < radix[i]) break;
      t[i] = 0;
    }
  }
}

MultilinearFunctor to_multilinear(const LaxFunctor& f) {
  return MultilinearFunctor{{f.source}, f.target, f.obj, f.mor, {f.delta}};
}

LaxFunctor to_lax(const MultilinearFunctor& f) {
  if (f.arity() != 1) throw InputError("to_lax: functor is not unary");
  return LaxFunctor{f.sources[0], f.target, f.obj, f.mor, f.delta[0]};
}

ValidationReport validate_multilinear(const MultilinearFunctor& f) {
  ValidationReport r;
  const FinPermCat& c = *f.target;
  const std::size_t k = f.arity();
  std::vector<std::size_t> orad, mrad;
  std::size_t n_obj = 1, n_mor = 1;
  for (const auto& s : f.sources) {
    orad.push_back(s->objects());
    mrad.push_back(s->morphisms());
    n_obj *= s->objects();
    n_mor *= s->morphisms();
  }
  bool shape = f.obj.size() == n_obj && f.mor.size() == n_mor && f.delta.size() == k;
  for (std::size_t i = 0; shape && i < k; ++i) shape = f.delta[i].size() == n_obj * orad[i];
  if (shape)
    for (auto x : f.obj) shape = shape && x < c.objects();
  if (shape)
    for (auto x : f.mor) shape = shape && x < c.morphisms();
  for (std::size_t i = 0; shape && i < k; ++i)
    for (auto x : f.delta[i]) shape = shape && x < c.morphisms();
  if (!shape) {
    r.fail("shape", "tables do not match the source and target sizes");
    return r;
  }

  const auto otuples = all_tuples(orad);
  const auto mtuples = all_tuples(mrad);
  auto dom_tuple = [&](const std::vector<Mor>& u) {
    std::vector<Obj> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = f.sources[i]->dom(u[i]);
    return t;
  };
  auto cod_tuple = [&](const std::vector<Mor>& u) {
    std::vector<Obj> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = f.sources[i]->cod(u[i]);
    return t;
  };
  auto id_tuple = [&](const std::vector<Obj>& t) {
    std::vector<Mor> u(k);
    for (std::size_t i = 0; i < k; ++i) u[i] = f.sources[i]->id(t[i]);
    return u;
  };
  auto with = [](std::vector<std::uint32_t> t, std::size_t i, std::uint32_t v) {
    t[i] = v;
    return t;
  };

  // Functoriality and strict unitality.
  for (const auto& t : otuples) {
    bool has_zero = false;
    for (auto x : t) has_zero = has_zero || x == 0;
    if (has_zero && f.at(t) != 0) r.fail("strict-unit", list_witness("a", t));
    if (f.at_mor(id_tuple(t)) != c.id(f.at(t))) r.fail("functoriality", list_witness("id", t));
  }
  for (const auto& u : mtuples) {
    const Mor fu = f.at_mor(u);
    if (c.dom(fu) != f.at(dom_tuple(u)) || c.cod(fu) != f.at(cod_tuple(u)))
      r.fail("functoriality", list_witness("type", u));
  }
  for (const auto& u : mtuples) {
    // Every tuple v composable after u.
    std::vector<std::size_t> vrad(k);
    std::vector<std::vector<Mor>> outs(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& s = *f.sources[i];
      for (Obj b = 0; b < s.objects(); ++b)
        for (Mor v : s.hom(s.cod(u[i]), b)) outs[i].push_back(v);
      vrad[i] = outs[i].size();
    }
    for (const auto& pick : all_tuples(vrad)) {
      std::vector<Mor> v(k), vu(k);
      for (std::size_t i = 0; i < k; ++i) {
        v[i] = outs[i][pick[i]];
        vu[i] = f.sources[i]->comp(v[i], u[i]);
      }
      if (f.at_mor(vu) != c.comp(f.at_mor(v), f.at_mor(u)))
        r.fail("functoriality", list_witness("f", u) + " " + list_witness("g", v));
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    const FinPermCat& s = *f.sources[i];
    const std::string slot = "slot=" + std::to_string(i + 1) + " ";
    for (const auto& t : otuples) {
      const Obj a = t[i];
      bool other_zero = false;
      for (std::size_t j = 0; j < k; ++j) other_zero = other_zero || (j != i && t[j] == 0);
      for (Obj a1 = 0; a1 < s.objects(); ++a1) {
        const auto t1 = with(t, i, a1);
        const auto ts = with(t, i, s.osum(a, a1));
        const Mor d = f.d(i, t, a1);
        const std::string w = slot + list_witness("a", t) + " a'=" + std::to_string(a1);
        if (c.dom(d) != c.osum(f.at(t), f.at(t1)) || c.cod(d) != f.at(ts))
          r.fail("delta-type", w);
        if ((a == 0 || a1 == 0 || other_zero) && d != c.id(f.at(ts))) r.fail("delta-unit", w);

        // Symmetry square.
        {
          std::vector<Mor> g = id_tuple(t);
          g[i] = s.gamma(a, a1);
          const Mor lhs = c.comp(f.at_mor(g), d);
          const Mor rhs = c.comp(f.d(i, t1, a), c.gamma(f.at(t), f.at(t1)));
          if (!square_ok(c, lhs, rhs, c.osum(f.at(t), f.at(t1)), f.at(with(t, i, s.osum(a1, a)))))
            r.fail("symmetry", w);
        }
        // Associativity square.
        for (Obj a2 = 0; a2 < s.objects(); ++a2) {
          const auto t2 = with(t, i, a2);
          const Mor top = c.comp(f.d(i, t, s.osum(a1, a2)), c.msum(c.id(f.at(t)), f.d(i, t1, a2)));
          const Mor bottom = c.comp(f.d(i, ts, a2), c.msum(d, c.id(f.at(t2))));
          const Obj from = c.osum(c.osum(f.at(t), f.at(t1)), f.at(t2));
          const Obj to = f.at(with(t, i, s.osum(s.osum(a, a1), a2)));
          if (!square_ok(c, top, bottom, from, to))
            r.fail("associativity", w + " a''=" + std::to_string(a2));
        }
      }
    }
    // Naturality in every slot.
    for (const auto& u : mtuples) {
      const auto x = dom_tuple(u);
      const auto y = cod_tuple(u);
      for (Mor v = 0; v < s.morphisms(); ++v) {
        const Mor lhs = c.comp(f.at_mor(with(u, i, s.msum(u[i], v))), f.d(i, x, s.dom(v)));
        const Mor rhs = c.comp(f.d(i, y, s.cod(v)), c.msum(f.at_mor(u), f.at_mor(with(u, i, v))));
        const Obj from = c.osum(f.at(x), f.at(with(x, i, s.dom(v))));
        const Obj to = f.at(with(y, i, s.osum(y[i], s.cod(v))));
        if (!square_ok(c, lhs, rhs, from, to))
          r.fail("naturality", slot + list_witness("u", u) + " v=" + std::to_string(v));
      }
    }
  }

  // Interchange between slots i < j.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const FinPermCat& si = *f.sources[i];
      const FinPermCat& sj = *f.sources[j];
      for (const auto& t : otuples)
        for (Obj a1 = 0; a1 < si.objects(); ++a1)
          for (Obj b1 = 0; b1 < sj.objects(); ++b1) {
            const Obj a = t[i], b = t[j];
            auto T = [&](Obj x, Obj y) { return with(with(t, i, x), j, y); };
            const Obj fab = f.at(T(a, b)), fab1 = f.at(T(a, b1)), fa1b = f.at(T(a1, b)),
                      fa1b1 = f.at(T(a1, b1));
            const Mor path_a = c.comp(f.d(i, T(a, sj.osum(b, b1)), a1),
                                      c.msum(f.d(j, T(a, b), b1), f.d(j, T(a1, b), b1)));
            const Mor twist = c.msum(c.msum(c.id(fab), c.gamma(fab1, fa1b)), c.id(fa1b1));
            const Mor path_b =
                c.comp(c.comp(f.d(j, T(si.osum(a, a1), b), b1),
                              c.msum(f.d(i, T(a, b), a1), f.d(i, T(a, b1), a1))),
                       twist);
            const Obj from = c.osum(c.osum(c.osum(fab, fab1), fa1b), fa1b1);
            const Obj to = f.at(T(si.osum(a, a1), sj.osum(b, b1)));
            if (!square_ok(c, path_a, path_b, from, to))
              r.fail("interchange", "slots=" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        " " + list_witness("a", t) + " a'=" + std::to_string(a1) +
                                        " b'=" + std::to_string(b1));
          }
    }
  return r;
}

ValidationReport validate_lax(const LaxFunctor& f) {
  ValidationReport r;
  const FinPermCat& a = *f.source;
  const FinPermCat& c = *f.target;
  const std::size_t m = a.objects();
  if (f.obj.size() != m || f.mor.size() != a.morphisms() || f.delta.size() != m * m) {
    r.fail("shape", "tables do not match the source and target sizes");
    return r;
  }
  for (auto x : f.obj)
    if (x >= c.objects()) {
      r.fail("shape", "object image out of range");
      return r;
    }
  for (auto x : f.mor)
    if (x >= c.morphisms()) {
      r.fail("shape", "morphism image out of range");
      return r;
    }
  for (auto x : f.delta)
    if (x >= c.morphisms()) {
      r.fail("shape", "structure morphism out of range");
      return r;
    }

  // (1) f(0) = 0, and f is a functor.
  if (f.obj[0] != 0) r.fail("strict-unit", "f(0) != 0");
  for (Obj x = 0; x < m; ++x)
    if (f.mor[a.id(x)] != c.id(f.obj[x])) r.fail("functoriality", tuple_witness({{"id", x}}));
  for (Mor u = 0; u < a.morphisms(); ++u) {
    if (c.dom(f.mor[u]) != f.obj[a.dom(u)] || c.cod(f.mor[u]) != f.obj[a.cod(u)])
      r.fail("functoriality", tuple_witness({{"type", u}}));
    for (Obj y = 0; y < m; ++y)
      for (Mor v : a.hom(a.cod(u), y))
        if (f.mor[a.comp(v, u)] != c.comp(f.mor[v], f.mor[u]))
          r.fail("functoriality", tuple_witness({{"f", u}, {"g", v}}));
  }

  for (Obj x = 0; x < m; ++x)
    for (Obj y = 0; y < m; ++y) {
      const Mor d = f.d(x, y);
      const auto w = tuple_witness({{"a", x}, {"a'", y}});
      if (c.dom(d) != c.osum(f.obj[x], f.obj[y]) || c.cod(d) != f.obj[a.osum(x, y)])
        r.fail("delta-type", w);
      // (2) unit condition.
      if ((x == 0 || y == 0) && d != c.id(f.obj[a.osum(x, y)])) r.fail("delta-unit", w);
      // (4) symmetry.
      if (!square_ok(c, c.comp(f.mor[a.gamma(x, y)], d), c.comp(f.d(y, x), c.gamma(f.obj[x], f.obj[y])),
                     c.osum(f.obj[x], f.obj[y]), f.obj[a.osum(y, x)]))
        r.fail("symmetry", w);
      // (3) associativity.
      for (Obj z = 0; z < m; ++z) {
        const Mor top = c.comp(f.d(x, a.osum(y, z)), c.msum(c.id(f.obj[x]), f.d(y, z)));
        const Mor bottom = c.comp(f.d(a.osum(x, y), z), c.msum(d, c.id(f.obj[z])));
        if (!square_ok(c, top, bottom, c.osum(c.osum(f.obj[x], f.obj[y]), f.obj[z]),
                       f.obj[a.osum(a.osum(x, y), z)]))
          r.fail("associativity", tuple_witness({{"a", x}, {"a'", y}, {"a''", z}}));
      }
    }
  // Naturality of delta.
  for (Mor u = 0; u < a.morphisms(); ++u)
    for (Mor v = 0; v < a.morphisms(); ++v) {
      const Mor lhs = c.comp(f.mor[a.msum(u, v)], f.d(a.dom(u), a.dom(v)));
      const Mor rhs = c.comp(f.d(a.cod(u), a.cod(v)), c.msum(f.mor[u], f.mor[v]));
      if (!square_ok(c, lhs, rhs, c.osum(f.obj[a.dom(u)], f.obj[a.dom(v)]),
                     f.obj[a.osum(a.cod(u), a.cod(v))]))
        r.fail("naturality", tuple_witness({{"u", u}, {"v", v}}));
    }
  return r;
}

LaxFunctor compose_lax(const LaxFunctor& g, const LaxFunctor& f) {
  if (!same_cat(f.target, g.source)) throw InputError("compose_lax: categories do not match");
  const std::size_t m = f.source->objects();
  LaxFunctor h{f.source, g.target, {}, {}, {}};
  for (Obj a = 0; a < m; ++a) h.obj.push_back(g.obj[f.obj[a]]);
  for (Mor u = 0; u < f.source->morphisms(); ++u) h.mor.push_back(g.mor[f.mor[u]]);
  for (Obj a = 0; a < m; ++a)
    for (Obj b = 0; b < m; ++b)
      h.delta.push_back(g.target->comp(g.mor[f.d(a, b)], g.d(f.obj[a], f.obj[b])));
  return h;
}

MultilinearFunctor compose_multilinear(const MultilinearFunctor& g,
                                       const std::vector<MultilinearFunctor>& fs) {
  if (fs.size() != g.arity()) throw InputError("compose_multilinear: arity mismatch");
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (!same_cat(fs[j].target, g.sources[j]))
      throw InputError("compose_multilinear: categories do not match in slot " + std::to_string(j + 1));

  MultilinearFunctor h;
  h.target = g.target;
  std::vector<std::size_t> block;  // first slot of each f_j
  std::vector<std::size_t> orad, mrad;
  for (const auto& fj : fs) {
    block.push_back(h.sources.size());
    for (const auto& s : fj.sources) {
      h.sources.push_back(s);
      orad.push_back(s->objects());
      mrad.push_back(s->morphisms());
    }
  }
  const std::size_t n = fs.size();
  auto part = [&](const std::vector<std::uint32_t>& t, std::size_t j) {
    return std::vector<std::uint32_t>(t.begin() + static_cast<std::ptrdiff_t>(block[j]),
                                      t.begin() + static_cast<std::ptrdiff_t>(block[j] + fs[j].arity()));
  };
  auto images = [&](const std::vector<Obj>& t) {
    std::vector<Obj> y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = fs[j].at(part(t, j));
    return y;
  };

  const auto otuples = all_tuples(orad);
  for (const auto& t : otuples) h.obj.push_back(g.at(images(t)));
  for (const auto& u : all_tuples(mrad)) {
    std::vector<Mor> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = fs[j].at_mor(part(u, j));
    h.mor.push_back(g.at_mor(v));
  }
  const FinPermCat& c = *g.target;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < fs[j].arity(); ++i) {
      const std::size_t s = block[j] + i;
      std::vector<Mor> d;
      d.reserve(otuples.size() * orad[s]);
      for (const auto& t : otuples) {
        const auto y = images(t);
        const auto xj = part(t, j);
        for (Obj a1 = 0; a1 < orad[s]; ++a1) {
          auto xj1 = xj;
          xj1[i] = a1;
          const Mor outer = g.d(j, y, fs[j].at(xj1));
          std::vector<Mor> inner(n);
          for (std::size_t l = 0; l < n; ++l) inner[l] = g.sources[l]->id(y[l]);
          inner[j] = fs[j].d(i, xj, a1);
          d.push_back(c.comp(g.at_mor(inner), outer));
        }
      }
      h.delta.push_back(std::move(d));
    }
  return h;
}

}  // namespace mackey
