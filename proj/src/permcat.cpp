#include "mackey/permcat.hpp"

#include "mackey/errors.hpp"

namespace mackey {

namespace {

constexpr std::size_t kKeptPerAxiom = 8;

void check_size(const char* what, std::size_t got, std::size_t want) {
  if (got != want)
    throw InputError(std::string("permutative category table '") + what + "' has " +
                     std::to_string(got) + " entries, expected " + std::to_string(want));
}

template <typename T>
void check_range(const char* what, const std::vector<T>& v, std::size_t bound, bool allow_none) {
  for (auto x : v)
    if (!(allow_none && x == kNoMor) && x >= bound)
      throw InputError(std::string("permutative category table '") + what + "' entry " +
                       std::to_string(x) + " out of range");
}

}  // namespace

FinPermCat::FinPermCat(std::string name, Tables tables) : name_(std::move(name)), t_(std::move(tables)) {
  const std::size_t m = t_.objects;
  if (m == 0) throw InputError("a permutative category needs at least the unit object");
  const std::size_t n = t_.dom.size();
  check_size("object_sum", t_.object_sum.size(), m * m);
  check_size("cod", t_.cod.size(), n);
  check_size("identity", t_.identity.size(), m);
  check_size("compose", t_.compose.size(), n * n);
  check_size("morphism_sum", t_.morphism_sum.size(), n * n);
  check_size("symmetry", t_.symmetry.size(), m * m);
  check_range("object_sum", t_.object_sum, m, false);
  check_range("dom", t_.dom, m, false);
  check_range("cod", t_.cod, m, false);
  check_range("identity", t_.identity, n, false);
  check_range("compose", t_.compose, n, true);
  check_range("morphism_sum", t_.morphism_sum, n, false);
  check_range("symmetry", t_.symmetry, n, false);
  homs_.assign(m * m, {});
  for (Mor f = 0; f < n; ++f) homs_[t_.dom[f] * m + t_.cod[f]].push_back(f);
}

Mor FinPermCat::comp(Mor g, Mor f) const {
  if (g == kNoMor || f == kNoMor) return kNoMor;
  return t_.compose[g * morphisms() + f];
}

Mor FinPermCat::msum(Mor f, Mor g) const {
  if (f == kNoMor || g == kNoMor) return kNoMor;
  return t_.morphism_sum[f * morphisms() + g];
}

bool ValidationReport::has(const std::string& axiom) const {
  for (const auto& f : failures)
    if (f.axiom == axiom) return true;
  return false;
}

void ValidationReport::fail(const std::string& axiom, std::string witness) {
  ++total;
  std::size_t kept = 0;
  for (const auto& f : failures)
    if (f.axiom == axiom) ++kept;
  if (kept < kKeptPerAxiom) failures.push_back(Failure{axiom, std::move(witness)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  total += other.total;
  for (const auto& f : other.failures)
    failures.push_back(Failure{prefix + f.axiom, f.witness});
}

std::string tuple_witness(std::initializer_list<std::pair<const char*, long long>> items) {
  std::string s = "(";
  bool first = true;
  for (const auto& [k, v] : items) {
    if (!first) s += ", ";
    first = false;
    s += k;
    s += "=";
    s += std::to_string(v);
  }
  return s + ")";
}

ValidationReport validate_permcat(const FinPermCat& c) {
  ValidationReport r;
  const std::size_t m = c.objects();
  const std::size_t n = c.morphisms();

  // Category axioms.
  for (Obj a = 0; a < m; ++a)
    if (c.dom(c.id(a)) != a || c.cod(c.id(a)) != a)
      r.fail("identity-type", tuple_witness({{"a", a}}));
  for (Mor g = 0; g < n; ++g)
    for (Mor f = 0; f < n; ++f) {
      const Mor h = c.comp(g, f);
      if ((h == kNoMor) != (c.cod(f) != c.dom(g))) {
        r.fail("composition-defined", tuple_witness({{"g", g}, {"f", f}}));
        continue;
      }
      if (h != kNoMor && (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g)))
        r.fail("composition-type", tuple_witness({{"g", g}, {"f", f}}));
    }
  for (Mor f = 0; f < n; ++f)
    if (c.comp(f, c.id(c.dom(f))) != f || c.comp(c.id(c.cod(f)), f) != f)
      r.fail("identity-law", tuple_witness({{"f", f}}));
  for (Mor f = 0; f < n; ++f)
    for (Obj b = 0; b < m; ++b)
      for (Mor g : c.hom(c.cod(f), b))
        for (Obj d = 0; d < m; ++d)
          for (Mor h : c.hom(b, d))
            if (c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f))
              r.fail("composition-associativity", tuple_witness({{"f", f}, {"g", g}, {"h", h}}));

  // Strict monoidal structure on objects.
  for (Obj a = 0; a < m; ++a) {
    if (c.osum(0, a) != a || c.osum(a, 0) != a) r.fail("object-unit", tuple_witness({{"a", a}}));
    for (Obj b = 0; b < m; ++b)
      for (Obj d = 0; d < m; ++d)
        if (c.osum(c.osum(a, b), d) != c.osum(a, c.osum(b, d)))
          r.fail("object-associativity", tuple_witness({{"a", a}, {"b", b}, {"c", d}}));
  }

  // The sum is a strict monoidal functor.
  for (Mor f = 0; f < n; ++f) {
    if (c.msum(c.id(0), f) != f || c.msum(f, c.id(0)) != f)
      r.fail("morphism-unit", tuple_witness({{"f", f}}));
    for (Mor g = 0; g < n; ++g) {
      const Mor s = c.msum(f, g);
      if (c.dom(s) != c.osum(c.dom(f), c.dom(g)) || c.cod(s) != c.osum(c.cod(f), c.cod(g)))
        r.fail("sum-type", tuple_witness({{"f", f}, {"g", g}}));
      for (Mor h = 0; h < n; ++h)
        if (c.msum(c.msum(f, g), h) != c.msum(f, c.msum(g, h)))
          r.fail("morphism-associativity", tuple_witness({{"f", f}, {"g", g}, {"h", h}}));
    }
  }
  for (Obj a = 0; a < m; ++a)
    for (Obj b = 0; b < m; ++b)
      if (c.msum(c.id(a), c.id(b)) != c.id(c.osum(a, b)))
        r.fail("sum-identity", tuple_witness({{"a", a}, {"b", b}}));
  // Interchange (g f) + (g' f') = (g + g')(f + f') over all composable pairs.
  for (Mor f = 0; f < n; ++f)
    for (Obj x = 0; x < m; ++x)
      for (Mor g : c.hom(c.cod(f), x))
        for (Mor f2 = 0; f2 < n; ++f2)
          for (Obj y = 0; y < m; ++y)
            for (Mor g2 : c.hom(c.cod(f2), y))
              if (c.msum(c.comp(g, f), c.comp(g2, f2)) != c.comp(c.msum(g, g2), c.msum(f, f2)))
                r.fail("sum-functoriality",
                       tuple_witness({{"f", f}, {"g", g}, {"f'", f2}, {"g'", g2}}));

  // Symmetry.
  for (Obj a = 0; a < m; ++a) {
    if (c.gamma(a, 0) != c.id(a) || c.gamma(0, a) != c.id(a))
      r.fail("symmetry-unit", tuple_witness({{"a", a}}));
    for (Obj b = 0; b < m; ++b) {
      const Mor g = c.gamma(a, b);
      if (c.dom(g) != c.osum(a, b) || c.cod(g) != c.osum(b, a)) {
        r.fail("symmetry-type", tuple_witness({{"a", a}, {"b", b}}));
        continue;
      }
      if (c.comp(c.gamma(b, a), g) != c.id(c.osum(a, b)))
        r.fail("symmetry-involution", tuple_witness({{"a", a}, {"b", b}}));
      for (Obj d = 0; d < m; ++d) {
        const Mor lhs = c.gamma(c.osum(a, b), d);
        const Mor rhs = c.comp(c.msum(c.gamma(a, d), c.id(b)), c.msum(c.id(a), c.gamma(b, d)));
        if (lhs != rhs) r.fail("hexagon", tuple_witness({{"a", a}, {"b", b}, {"c", d}}));
      }
    }
  }
  for (Mor f = 0; f < n; ++f)
    for (Mor g = 0; g < n; ++g) {
      const Mor lhs = c.comp(c.gamma(c.cod(f), c.cod(g)), c.msum(f, g));
      const Mor rhs = c.comp(c.msum(g, f), c.gamma(c.dom(f), c.dom(g)));
      if (lhs == kNoMor || lhs != rhs)
        r.fail("symmetry-naturality", tuple_witness({{"f", f}, {"g", g}}));
    }
  return r;
}

PermCatPtr discrete_permcat(const CommMonoid& m, std::string name) {
  m.validate();
  const std::size_t k = m.size;
  FinPermCat::Tables t;
  t.objects = k;
  for (auto v : m.table) t.object_sum.push_back(static_cast<Obj>(v));
  for (Obj a = 0; a < k; ++a) {
    t.dom.push_back(a);
    t.cod.push_back(a);
    t.identity.push_back(a);
  }
  t.compose.assign(k * k, kNoMor);
  for (Mor a = 0; a < k; ++a) t.compose[a * k + a] = a;
  t.morphism_sum = t.object_sum;
  t.symmetry.resize(k * k);
  for (Obj a = 0; a < k; ++a)
    for (Obj b = 0; b < k; ++b) t.symmetry[a * k + b] = t.object_sum[a * k + b];
  if (name.empty()) name = "discrete(" + std::to_string(k) + ")";
  return std::make_shared<FinPermCat>(std::move(name), std::move(t));
}

PermCatPtr group_morphism_permcat(const CommMonoid& m, const CommMonoid& h, std::string name) {
  m.validate();
  h.validate();
  if (!h.is_group()) throw InputError("group_morphism_permcat: hom table is not a group");
  const std::size_t k = m.size;
  const std::size_t q = h.size;
  const std::size_t n = k * q;
  // Morphism (a, x) has id a * q + x.
  FinPermCat::Tables t;
  t.objects = k;
  for (auto v : m.table) t.object_sum.push_back(static_cast<Obj>(v));
  for (Obj a = 0; a < k; ++a)
    for (std::size_t x = 0; x < q; ++x) {
      t.dom.push_back(a);
      t.cod.push_back(a);
    }
  for (Obj a = 0; a < k; ++a) t.identity.push_back(static_cast<Mor>(a * q));
  t.compose.assign(n * n, kNoMor);
  t.morphism_sum.resize(n * n);
  for (Mor f = 0; f < n; ++f)
    for (Mor g = 0; g < n; ++g) {
      const std::size_t a = f / q, b = g / q;
      const std::size_t x = h.add(f % q, g % q);
      if (a == b) t.compose[g * n + f] = static_cast<Mor>(a * q + x);
      t.morphism_sum[f * n + g] = static_cast<Mor>(m.add(a, b) * q + x);
    }
  t.symmetry.resize(k * k);
  for (Obj a = 0; a < k; ++a)
    for (Obj b = 0; b < k; ++b) t.symmetry[a * k + b] = static_cast<Mor>(m.add(a, b) * q);
  if (name.empty()) name = "group_morphism(" + std::to_string(k) + "," + std::to_string(q) + ")";
  return std::make_shared<FinPermCat>(std::move(name), std::move(t));
}

}  // namespace mackey
