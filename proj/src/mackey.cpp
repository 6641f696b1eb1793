#include "mackey/mackey.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mackey/errors.hpp"

namespace mackey {

std::string describe(const OrbitArrow& p) {
  return "H" + std::to_string(p.src) + "->H" + std::to_string(p.dst) + "@" + std::to_string(p.point + 1);
}

OrbitCategory::OrbitCategory(GroupPtr g) : group_(std::move(g)) {
  const Group& G = *group_;
  const auto& classes = conjugacy_classes_of_subgroups(G);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    orbits_.push_back(orbit_gset(group_, G.class_representative(i)));
    const GSet& o = orbits_.back();
    std::vector<Elem> rep(o.size(), static_cast<Elem>(G.order()));
    for (Elem x = 0; x < G.order(); ++x) {
      Point y = o.act(x, 0);
      if (rep[y] == G.order()) rep[y] = x;
    }
    coset_rep_.push_back(std::move(rep));
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Subgroup& hk = G.class_representative(k);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (G.class_representative(i).order() % hk.order() != 0) continue;
      const GSet& o = orbits_[i];
      for (Point y = 0; y < o.size(); ++y) {
        bool fixed = true;
        for (Elem h : hk.elements)
          if (o.act(h, y) != y) {
            fixed = false;
            break;
          }
        if (fixed) arrows_.push_back({k, i, y});
      }
    }
  }

  std::vector<std::vector<OrbitArrow>> out(classes.size());
  for (const auto& p : arrows_)
    if (!is_iso(p)) out[p.src].push_back(p);
  for (const auto& p : arrows_) {
    bool decomposable = false;
    if (!is_iso(p)) {
      for (const auto& q : out[p.src]) {
        if (q.dst == p.dst) continue;
        for (const auto& r : out[q.dst])
          if (r.dst == p.dst && compose(r, q) == p) {
            decomposable = true;
            break;
          }
        if (decomposable) break;
      }
    }
    if (!decomposable) generating_.push_back(p);
  }
}

std::optional<std::size_t> OrbitCategory::find(const OrbitArrow& p) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), p);
  if (it == arrows_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::size_t OrbitCategory::index(const OrbitArrow& p) const {
  if (auto i = find(p)) return *i;
  throw InputError("not an orbit map: " + describe(p));
}

OrbitArrow OrbitCategory::compose(const OrbitArrow& p, const OrbitArrow& q) const {
  if (q.dst != p.src) throw InputError("orbit maps are not composable");
  return {q.src, p.dst, orbits_[p.dst].act(coset_rep_[p.src][q.point], p.point)};
}

OrbitArrow OrbitCategory::inverse(const OrbitArrow& p) const {
  if (!is_iso(p)) throw InputError("orbit map is not invertible: " + describe(p));
  const Elem n = coset_rep_[p.dst][p.point];
  return {p.src, p.dst, orbits_[p.src].act(group_->inverse(n), 0)};
}

std::vector<std::pair<OrbitArrow, OrbitArrow>> OrbitCategory::pullback(const OrbitArrow& p,
                                                                        const OrbitArrow& q) const {
  if (p.dst != q.dst) throw InputError("pullback needs a common target");
  const GSet& ok = orbits_[p.src];
  const GSet& ol = orbits_[q.src];
  const GSet& oi = orbits_[p.dst];
  std::vector<std::pair<Point, Point>> pairs;
  std::map<std::pair<Point, Point>, Point> index;
  for (Point a = 0; a < ok.size(); ++a) {
    const Point pa = oi.act(coset_rep_[p.src][a], p.point);
    for (Point b = 0; b < ol.size(); ++b)
      if (oi.act(coset_rep_[q.src][b], q.point) == pa) {
        index.emplace(std::make_pair(a, b), static_cast<Point>(pairs.size()));
        pairs.emplace_back(a, b);
      }
  }
  const std::size_t n = pairs.size();
  std::vector<Point> table(group_->order() * n);
  for (Elem x = 0; x < group_->order(); ++x)
    for (std::size_t t = 0; t < n; ++t)
      table[x * n + t] = index.at({ok.act(x, pairs[t].first), ol.act(x, pairs[t].second)});
  const auto d = decompose(GSet::from_table(group_, n, std::move(table)));
  std::vector<std::pair<OrbitArrow, OrbitArrow>> out;
  for (const auto& slot : d.slots) {
    const auto [a, b] = pairs[slot.base];
    out.push_back({{slot.class_index, p.src, a}, {slot.class_index, q.src, b}});
  }
  return out;
}

GMap OrbitCategory::as_map(const OrbitArrow& p) const {
  const GSet& src = orbits_[p.src];
  std::vector<Point> images(src.size());
  for (Point a = 0; a < src.size(); ++a) images[a] = orbits_[p.dst].act(coset_rep_[p.src][a], p.point);
  return GMap::make(src, orbits_[p.dst], std::move(images));
}

Span OrbitCategory::forward(const OrbitArrow& p) const {
  return Span::make(GMap::identity(orbits_[p.src]), as_map(p));
}

Span OrbitCategory::backward(const OrbitArrow& p) const {
  return Span::make(as_map(p), GMap::identity(orbits_[p.src]));
}

std::shared_ptr<const OrbitCategory> orbit_category(const GroupPtr& g) {
  static std::mutex mu;
  static std::map<const Group*, std::pair<GroupPtr, std::shared_ptr<const OrbitCategory>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(g.get());
    if (it != cache.end()) return it->second.second;
  }
  auto c = std::make_shared<const OrbitCategory>(g);
  std::lock_guard lock(mu);
  // Holding the group keeps the address from being reused by another group.
  return cache.emplace(g.get(), std::make_pair(g, c)).first->second.second;
}

// ---------------------------------------------------------------------------

MackeyAxiomError::MackeyAxiomError(ValidationReport r)
    : std::runtime_error("Mackey axiom failed: " +
                         (r.failures.empty() ? std::string("?")
                                             : r.failures.front().axiom + " " + r.failures.front().witness)),
      report_(std::move(r)) {}

namespace {

Homomorphism reduced(const Homomorphism& f) {
  Matrix m = f.matrix();
  for (auto& row : m) row = f.target().reduce(row);
  return Homomorphism(f.source_ptr(), f.target_ptr(), std::move(m));
}

using Slots = std::vector<std::optional<Homomorphism>>;

// Fills in composites and inverses until nothing changes.
void close_under_composition(const OrbitCategory& oc, Slots& res, Slots& tr) {
  const auto& arrows = oc.arrows();
  std::vector<std::vector<std::size_t>> into(oc.classes());
  for (std::size_t a = 0; a < arrows.size(); ++a) into[arrows[a].dst].push_back(a);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t ip = 0; ip < arrows.size(); ++ip) {
      const OrbitArrow& p = arrows[ip];
      if (OrbitCategory::is_iso(p)) {
        const std::size_t inv = oc.index(oc.inverse(p));
        if (!tr[ip] && res[inv]) tr[ip] = res[inv], changed = true;
        if (!res[ip] && tr[inv]) res[ip] = tr[inv], changed = true;
      }
      for (std::size_t iq : into[p.src]) {
        const std::size_t ic = oc.index(oc.compose(p, arrows[iq]));
        if (!res[ic] && res[ip] && res[iq]) {
          res[ic] = reduced(compose(*res[iq], *res[ip]));
          changed = true;
        }
        if (!tr[ic] && tr[ip] && tr[iq]) {
          tr[ic] = reduced(compose(*tr[ip], *tr[iq]));
          changed = true;
        }
      }
    }
  }
}

Homomorphism sum(std::shared_ptr<const AbelianGroup> src, std::shared_ptr<const AbelianGroup> dst,
                 const std::vector<Homomorphism>& terms) {
  Homomorphism out = Homomorphism::zero(std::move(src), std::move(dst));
  for (const auto& t : terms) out = add(out, t);
  return out;
}

}  // namespace

MackeyCheck check_mackey(const MackeyData& d) {
  MackeyCheck out;
  ValidationReport& r = out.report;
  if (!d.group) throw InputError("Mackey data has no group");
  auto oc = orbit_category(d.group);
  const auto& arrows = oc->arrows();
  if (d.values.size() != oc->classes()) {
    r.fail("shape", "expected " + std::to_string(oc->classes()) + " values, got " +
                        std::to_string(d.values.size()));
    return out;
  }
  std::vector<std::shared_ptr<const AbelianGroup>> values;
  for (const auto& v : d.values) values.push_back(std::make_shared<const AbelianGroup>(v));

  Slots res(arrows.size()), tr(arrows.size());
  auto load = [&](const std::vector<MackeyData::Map>& maps, Slots& slots, bool is_res) {
    const char* kind = is_res ? "restriction " : "transfer ";
    for (const auto& m : maps) {
      auto idx = oc->find(m.arrow);
      if (!idx) {
        r.fail("shape", kind + describe(m.arrow) + " is not an orbit map");
        continue;
      }
      if (slots[*idx]) {
        r.fail("shape", kind + describe(m.arrow) + " given twice");
        continue;
      }
      const auto& from = is_res ? values[m.arrow.dst] : values[m.arrow.src];
      const auto& to = is_res ? values[m.arrow.src] : values[m.arrow.dst];
      try {
        slots[*idx] = Homomorphism(from, to, m.matrix);
      } catch (const InputError& e) {
        r.fail("well-defined", kind + describe(m.arrow) + ": " + e.what());
      }
    }
  };
  load(d.restrictions, res, true);
  load(d.transfers, tr, false);
  if (!r.ok()) return out;
  for (std::size_t i = 0; i < oc->classes(); ++i) {
    const std::size_t id = oc->index(OrbitCategory::identity(i));
    if (!res[id]) res[id] = Homomorphism::identity(values[i]);
    if (!tr[id]) tr[id] = Homomorphism::identity(values[i]);
  }
  close_under_composition(*oc, res, tr);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    if (!res[a]) r.fail("missing", "restriction " + describe(arrows[a]) + " is not generated");
    if (!tr[a]) r.fail("missing", "transfer " + describe(arrows[a]) + " is not generated");
  }
  if (!r.ok()) return out;

  for (std::size_t i = 0; i < oc->classes(); ++i) {
    const std::size_t id = oc->index(OrbitCategory::identity(i));
    const auto one = Homomorphism::identity(values[i]);
    if (!res[id]->equals(one)) r.fail("identity", "restriction along id of class " + std::to_string(i));
    if (!tr[id]->equals(one)) r.fail("identity", "transfer along id of class " + std::to_string(i));
  }
  for (std::size_t ip = 0; ip < arrows.size(); ++ip)
    for (std::size_t iq = 0; iq < arrows.size(); ++iq) {
      const OrbitArrow& p = arrows[ip];
      const OrbitArrow& q = arrows[iq];
      if (q.dst == p.src) {
        const std::size_t ic = oc->index(oc->compose(p, q));
        const std::string w = "p=" + describe(p) + " q=" + describe(q);
        if (!res[ic]->equals(compose(*res[iq], *res[ip]))) r.fail("res-functoriality", w);
        if (!tr[ic]->equals(compose(*tr[ip], *tr[iq]))) r.fail("tr-functoriality", w);
      }
      if (q.dst == p.dst) {
        // res_q tr_p = sum over pullback orbits of tr_b res_a.
        std::vector<Homomorphism> terms;
        for (const auto& [a, b] : oc->pullback(p, q))
          terms.push_back(compose(*tr[oc->index(b)], *res[oc->index(a)]));
        const auto rhs = sum(values[p.src], values[q.src], terms);
        if (!compose(*res[iq], *tr[ip]).equals(rhs))
          r.fail("double-coset", "transfer p=" + describe(p) + " restriction q=" + describe(q));
      }
    }
  if (!r.ok()) return out;

  MackeyFunctor m;
  m.orbits_ = oc;
  m.values_ = std::move(values);
  for (auto& h : res) m.res_.push_back(std::move(*h));
  for (auto& h : tr) m.tr_.push_back(std::move(*h));
  out.functor = std::move(m);
  return out;
}

MackeyFunctor make_mackey(const MackeyData& d) {
  auto c = check_mackey(d);
  if (!c.functor) throw MackeyAxiomError(std::move(c.report));
  return std::move(*c.functor);
}

MackeyData MackeyFunctor::data() const {
  MackeyData d;
  d.group = group();
  for (const auto& v : values_) d.values.push_back(*v);
  for (const auto& p : orbits_->generating_arrows()) {
    if (OrbitCategory::is_iso(p) && p.point == 0) continue;
    const std::size_t i = orbits_->index(p);
    d.restrictions.push_back({p, res_[i].matrix()});
    if (!OrbitCategory::is_iso(p)) d.transfers.push_back({p, tr_[i].matrix()});
  }
  return d;
}

// ---------------------------------------------------------------------------

AbelianGroup direct_sum(const std::vector<const AbelianGroup*>& parts) {
  std::size_t total = 0;
  for (const auto* p : parts) total += p->generators();
  Matrix rel;
  std::size_t off = 0;
  for (const auto* p : parts) {
    for (const auto& row : p->relations()) {
      Vec r(total, 0);
      std::copy(row.begin(), row.end(), r.begin() + static_cast<std::ptrdiff_t>(off));
      rel.push_back(std::move(r));
    }
    off += p->generators();
  }
  return AbelianGroup(total, std::move(rel));
}

MackeyFunctor zero_mackey(const GroupPtr& g) {
  MackeyData d;
  d.group = g;
  d.values.assign(orbit_category(g)->classes(), AbelianGroup::free(0));
  for (const auto& p : orbit_category(g)->generating_arrows()) {
    d.restrictions.push_back({p, {}});
    d.transfers.push_back({p, {}});
  }
  return make_mackey(d);
}

MackeyFunctor constant_mackey(const GroupPtr& g, const AbelianGroup& a) {
  auto oc = orbit_category(g);
  MackeyData d;
  d.group = g;
  d.values.assign(oc->classes(), a);
  const std::size_t n = a.generators();
  for (const auto& p : oc->generating_arrows()) {
    const Int index = static_cast<Int>(oc->orbit(p.src).size() / oc->orbit(p.dst).size());
    Matrix t = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) t[i][i] = index;
    d.restrictions.push_back({p, identity_matrix(n)});
    d.transfers.push_back({p, std::move(t)});
  }
  return make_mackey(d);
}

MackeyFunctor burnside_mackey(const GSet& x) {
  const GroupPtr& g = x.group();
  auto oc = orbit_category(g);
  MackeyData d;
  d.group = g;
  std::vector<std::shared_ptr<const HomBasis>> bases;
  for (std::size_t i = 0; i < oc->classes(); ++i) {
    bases.push_back(hom_basis(oc->orbit(i), x));
    d.values.push_back(AbelianGroup::free(bases.back()->size()));
  }
  // Row j of the matrix is basis element j of `from` composed with `along`.
  auto precompose = [&](std::size_t from, const Span& along) {
    const auto s = span_to_element(along);
    Matrix m;
    for (std::size_t j = 0; j < bases[from]->size(); ++j)
      m.push_back(compose_elements(BurnsideElement::basis_element(oc->orbit(from), x, j), s).coefficients());
    return m;
  };
  for (const auto& p : oc->arrows()) {
    d.restrictions.push_back({p, precompose(p.dst, oc->forward(p))});
    d.transfers.push_back({p, precompose(p.src, oc->backward(p))});
  }
  return make_mackey(d);
}

namespace {

Matrix block_diagonal(const Matrix& a, std::size_t ac, const Matrix& b, std::size_t bc) {
  Matrix out;
  for (const auto& row : a) {
    Vec r(ac + bc, 0);
    std::copy(row.begin(), row.end(), r.begin());
    out.push_back(std::move(r));
  }
  for (const auto& row : b) {
    Vec r(ac + bc, 0);
    std::copy(row.begin(), row.end(), r.begin() + static_cast<std::ptrdiff_t>(ac));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

MackeyFunctor direct_sum(const MackeyFunctor& m, const MackeyFunctor& n) {
  if (!(*m.group() == *n.group())) throw InputError("direct_sum: different groups");
  MackeyData d;
  d.group = m.group();
  for (std::size_t i = 0; i < m.levels(); ++i) d.values.push_back(direct_sum({&m.value(i), &n.value(i)}));
  for (const auto& p : m.orbits().generating_arrows()) {
    const auto& rm = m.res(p);
    const auto& rn = n.res(p);
    d.restrictions.push_back(
        {p, block_diagonal(rm.matrix(), m.value(p.src).generators(), rn.matrix(), n.value(p.src).generators())});
    const auto& tm = m.tr(p);
    const auto& tn = n.tr(p);
    d.transfers.push_back(
        {p, block_diagonal(tm.matrix(), m.value(p.dst).generators(), tn.matrix(), n.value(p.dst).generators())});
  }
  return make_mackey(d);
}

MackeyFunctor reduce_mod(const MackeyFunctor& m, Int n) {
  if (n <= 0) throw InputError("reduce_mod: modulus must be positive");
  MackeyData d;
  d.group = m.group();
  for (std::size_t i = 0; i < m.levels(); ++i) {
    const AbelianGroup& v = m.value(i);
    Matrix rel = v.relations();
    for (std::size_t j = 0; j < v.generators(); ++j) {
      Vec r(v.generators(), 0);
      r[j] = n;
      rel.push_back(std::move(r));
    }
    d.values.emplace_back(v.generators(), std::move(rel));
  }
  for (const auto& p : m.orbits().generating_arrows()) {
    d.restrictions.push_back({p, m.res(p).matrix()});
    d.transfers.push_back({p, m.tr(p).matrix()});
  }
  return make_mackey(d);
}

// ---------------------------------------------------------------------------

MackeyValue evaluate(const MackeyFunctor& m, const GSet& a) {
  if (!(*a.group() == *m.group())) throw InputError("evaluate: G-set over a different group");
  MackeyValue v;
  v.orbits = decompose(a);
  std::vector<const AbelianGroup*> parts;
  std::size_t off = 0;
  for (const auto& slot : v.orbits.slots) {
    parts.push_back(&m.value(slot.class_index));
    v.offset.push_back(off);
    off += parts.back()->generators();
  }
  v.group = std::make_shared<const AbelianGroup>(direct_sum(parts));
  return v;
}

Homomorphism span_action(const MackeyFunctor& m, const Span& s) {
  const auto va = evaluate(m, s.source());
  const auto vb = evaluate(m, s.target());
  const auto dc = decompose(s.middle());
  Matrix out = zero_matrix(vb.group->generators(), va.group->generators());
  for (const auto& slot : dc.slots) {
    const Point a = s.left()(slot.base);
    const Point b = s.right()(slot.base);
    const std::size_t sa = va.orbits.slot_of[a];
    const std::size_t sb = vb.orbits.slot_of[b];
    const OrbitArrow pa{slot.class_index, va.orbits.slots[sa].class_index, va.orbits.coset_of[a]};
    const OrbitArrow pb{slot.class_index, vb.orbits.slots[sb].class_index, vb.orbits.coset_of[b]};
    const auto piece = compose(m.tr(pa), m.res(pb));
    const auto& pm = piece.matrix();
    for (std::size_t i = 0; i < pm.size(); ++i)
      for (std::size_t j = 0; j < pm[i].size(); ++j) {
        Int& e = out[vb.offset[sb] + i][va.offset[sa] + j];
        e = checked_add(e, pm[i][j]);
      }
  }
  for (auto& row : out) row = va.group->reduce(row);
  return Homomorphism(vb.group, va.group, std::move(out));
}

Homomorphism span_action(const MackeyFunctor& m, const BurnsideElement& x) {
  const auto va = evaluate(m, x.source());
  const auto vb = evaluate(m, x.target());
  Homomorphism out = Homomorphism::zero(vb.group, va.group);
  for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
    const Int c = x.coefficients()[j];
    if (c == 0) continue;
    const auto piece = span_action(m, representative_span(x.source(), x.target(), x.basis().keys[j]));
    out = add(out, scale(Homomorphism(vb.group, va.group, piece.matrix()), c));
  }
  Matrix reduced_rows = out.matrix();
  for (auto& row : reduced_rows) row = va.group->reduce(row);
  return Homomorphism(vb.group, va.group, std::move(reduced_rows));
}

}  // namespace mackey
