#include "mackey/pcfunctor.hpp"

#include "mackey/errors.hpp"

namespace mackey {

PCFunctorData mackey_to_pcfunctor(const MackeyFunctor& m) {
  PCFunctorData d;
  d.family = PCFunctorData::Family::mackey;
  d.orbits = orbit_category(m.group());
  for (std::size_t i = 0; i < m.levels(); ++i) d.values.push_back(m.value_ptr(i));
  d.res = m.restrictions();
  d.tr = m.transfers();
  return d;
}

PCFunctorData suspension_pcfunctor(const GSet& x) {
  PCFunctorData d;
  d.family = PCFunctorData::Family::representable;
  d.orbits = orbit_category(x.group());
  d.x = x;
  return d;
}

namespace {

MackeyData as_data(const PCFunctorData& d) {
  MackeyData md;
  md.group = d.group();
  for (const auto& v : d.values) md.values.push_back(*v);
  const auto& arrows = d.orbits->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    md.restrictions.push_back({arrows[a], d.res.at(a).matrix()});
    md.transfers.push_back({arrows[a], d.tr.at(a).matrix()});
  }
  return md;
}

}  // namespace

ValidationReport validate_pcfunctor(const PCFunctorData& d) {
  ValidationReport r;
  if (d.family == PCFunctorData::Family::mackey) {
    if (d.res.size() != d.orbits->arrows().size() || d.tr.size() != d.orbits->arrows().size()) {
      r.fail("shape", "one restriction and one transfer per orbit map");
      return r;
    }
    return check_mackey(as_data(d)).report;
  }
  if (!d.x || !(*d.x->group() == *d.group())) {
    r.fail("shape", "representable family needs a G-set over the same group");
    return r;
  }
  for (const auto& p : d.orbits->arrows()) {
    const Span f = d.orbits->forward(p);
    const Span b = d.orbits->backward(p);
    if (!(f.source() == d.orbits->orbit(p.src)) || !(f.target() == d.orbits->orbit(p.dst)) ||
        !(b.source() == d.orbits->orbit(p.dst)) || !(b.target() == d.orbits->orbit(p.src)))
      r.fail("shape", "structure span of " + describe(p));
  }
  return r;
}

DiscreteLevel discrete_level(const std::shared_ptr<const AbelianGroup>& a, std::size_t cap) {
  if (!a->is_finite() || a->order() > static_cast<Int>(cap))
    throw ResourceError("discrete-level", "level " + a->describe() + " is above the explicit cap of " +
                                              std::to_string(cap) + " elements");
  DiscreteLevel l;
  l.group = a;
  l.elements = a->elements();
  for (std::size_t i = 0; i < l.elements.size(); ++i)
    l.by_canonical.emplace(a->canonical(l.elements[i]), static_cast<Obj>(i));
  CommMonoid m;
  m.size = l.elements.size();
  m.table.resize(m.size * m.size);
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j < m.size; ++j) {
      Vec s = l.elements[i];
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = checked_add(s[k], l.elements[j][k]);
      m.table[i * m.size + j] = l.object_of(s);
    }
  l.cat = discrete_permcat(m, "discrete(" + a->describe() + ")");
  return l;
}

LaxFunctor discrete_functor(const DiscreteLevel& a, const DiscreteLevel& b, const Homomorphism& f) {
  LaxFunctor out;
  out.source = a.cat;
  out.target = b.cat;
  for (const auto& x : a.elements) out.obj.push_back(b.object_of(f.apply(x)));
  out.mor = out.obj;  // discrete: morphisms are identities, numbered like objects
  const std::size_t n = a.elements.size();
  out.delta.resize(n * n);
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) out.delta[x * n + y] = out.obj[a.cat->osum(x, y)];
  return out;
}

std::vector<TransitiveSpanKey> pi0_basis(const PCFunctorData& d, std::size_t level) {
  if (d.family != PCFunctorData::Family::representable) throw InputError("pi0_basis: not a representable family");
  return transitive_span_basis(d.orbits->orbit(level), *d.x);
}

namespace {

// One level of the output: Gr(pi_0) with a way in and out of the level's value.
struct Level {
  std::shared_ptr<const AbelianGroup> gr;
  std::optional<DiscreteLevel> explicit_level;
  std::vector<Vec> decode;  // per Gr generator, an element of the value it stands for
  std::vector<std::size_t> component_of;  // explicit levels: per object
};

Level complete_level(const std::shared_ptr<const AbelianGroup>& a, const KgOptions& opt) {
  Level l;
  if (a->is_finite() && a->order() <= static_cast<Int>(opt.explicit_cap)) {
    l.explicit_level = discrete_level(a, opt.explicit_cap);
    const Pi0 p = pi0_objects(*l.explicit_level->cat);
    l.gr = group_completion(p.monoid);
    for (Obj rep : p.representative) l.decode.push_back(l.explicit_level->elements[rep]);
    l.component_of = p.component_of;
  } else {
    l.gr = a;
    for (std::size_t g = 0; g < a->generators(); ++g) {
      Vec e(a->generators(), 0);
      e[g] = 1;
      l.decode.push_back(std::move(e));
    }
  }
  return l;
}

Vec encode(const Level& l, const Vec& x) {
  if (!l.explicit_level) return x;
  Vec out(l.gr->generators(), 0);
  out[l.component_of[l.explicit_level->object_of(x)]] = 1;
  return out;
}

Homomorphism induced(const Level& s, const Level& t, const Homomorphism& f) {
  if (s.explicit_level && t.explicit_level) {
    const auto g = induced_map_on_completions(discrete_functor(*s.explicit_level, *t.explicit_level, f));
    return Homomorphism(s.gr, t.gr, g.matrix());
  }
  Matrix m;
  for (const auto& x : s.decode) m.push_back(encode(t, f.apply(x)));
  return Homomorphism(s.gr, t.gr, std::move(m));
}

MackeyFunctor kg_mackey_family(const PCFunctorData& d, const KgOptions& opt) {
  std::vector<Level> levels;
  for (const auto& v : d.values) levels.push_back(complete_level(v, opt));
  MackeyData out;
  out.group = d.group();
  for (const auto& l : levels) out.values.push_back(*l.gr);
  const auto& arrows = d.orbits->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const OrbitArrow& p = arrows[a];
    out.restrictions.push_back({p, induced(levels[p.dst], levels[p.src], d.res[a]).matrix()});
    out.transfers.push_back({p, induced(levels[p.src], levels[p.dst], d.tr[a]).matrix()});
  }
  return make_mackey(out);
}

MackeyFunctor kg_representable_family(const PCFunctorData& d) {
  const OrbitCategory& oc = *d.orbits;
  const GSet& x = *d.x;
  std::vector<Pi0Enrichment> levels;
  MackeyData out;
  out.group = d.group();
  for (std::size_t i = 0; i < oc.classes(); ++i) {
    levels.push_back(pi0_enrichment(oc.orbit(i), x));
    out.values.push_back(levels.back().group);
  }
  // Precompose each basis span of `from` with `along`, landing in level `to`.
  auto act = [&](std::size_t from, std::size_t to, const Span& along) {
    Matrix m;
    for (const auto& key : levels[from].basis->keys) {
      const Span s = compose_spans(along, representative_span(oc.orbit(from), x, key));
      m.push_back(levels[to].quotient(s).coefficients());
    }
    return m;
  };
  for (const auto& p : oc.arrows()) {
    out.restrictions.push_back({p, act(p.dst, p.src, oc.forward(p))});
    out.transfers.push_back({p, act(p.src, p.dst, oc.backward(p))});
  }
  return make_mackey(out);
}

}  // namespace

MackeyFunctor kg_pi0(const PCFunctorData& d, const KgOptions& opt) {
  if (d.family == PCFunctorData::Family::mackey) return kg_mackey_family(d, opt);
  if (!d.x) throw InputError("kg_pi0: representable family without a G-set");
  return kg_representable_family(d);
}

}  // namespace mackey
