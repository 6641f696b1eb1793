#include "mackey/burnside.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

using Fingerprint = std::pair<const Group*, std::vector<std::uint32_t>>;

void append(std::vector<std::uint32_t>& out, const GSet& a) {
  out.push_back(static_cast<std::uint32_t>(a.size()));
  out.insert(out.end(), a.table().begin(), a.table().end());
}

Fingerprint fingerprint(std::initializer_list<const GSet*> sets) {
  Fingerprint f{(*sets.begin())->group().get(), {}};
  for (const GSet* s : sets) append(f.second, *s);
  return f;
}

// Sparse coefficient list of the composite of two basis spans.
using Sparse = std::vector<std::pair<std::size_t, Int>>;

struct StructureConstants {
  std::size_t ny = 0;
  std::vector<Sparse> products;  // [ix * ny + iy]
};

std::mutex g_basis_mutex;
std::map<Fingerprint, std::shared_ptr<const HomBasis>> g_basis_cache;
std::mutex g_constants_mutex;
std::map<Fingerprint, std::shared_ptr<const StructureConstants>> g_constants_cache;

void require_same(const GSet& a, const GSet& b, const char* what) {
  if (!(a == b)) throw InputError(std::string(what) + ": objects do not match");
}

}  // namespace

std::size_t HomBasis::position(const TransitiveSpanKey& key) const {
  auto it = index.find(key);
  if (it == index.end()) throw std::logic_error("transitive span key is not in the basis");
  return it->second;
}

std::shared_ptr<const HomBasis> hom_basis(const GSet& a, const GSet& b) {
  auto key = fingerprint({&a, &b});
  {
    std::lock_guard lock(g_basis_mutex);
    auto it = g_basis_cache.find(key);
    if (it != g_basis_cache.end()) return it->second;
  }
  auto basis = std::make_shared<HomBasis>();
  basis->source = a;
  basis->target = b;
  basis->keys = transitive_span_basis(a, b);
  for (std::size_t i = 0; i < basis->keys.size(); ++i) basis->index.emplace(basis->keys[i], i);
  std::lock_guard lock(g_basis_mutex);
  return g_basis_cache.emplace(std::move(key), std::move(basis)).first->second;
}

BurnsideElement::BurnsideElement(std::shared_ptr<const HomBasis> basis, Vec coefficients)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != basis_->size())
    throw InputError("Burnside element has " + std::to_string(coeffs_.size()) +
                     " coefficients for a basis of size " + std::to_string(basis_->size()));
}

BurnsideElement BurnsideElement::zero(const GSet& a, const GSet& b) {
  auto basis = hom_basis(a, b);
  Vec c(basis->size(), 0);
  return BurnsideElement(std::move(basis), std::move(c));
}

BurnsideElement BurnsideElement::identity(const GSet& a) { return span_to_element(Span::identity(a)); }

BurnsideElement BurnsideElement::basis_element(const GSet& a, const GSet& b, std::size_t i) {
  auto x = zero(a, b);
  x.coeffs_.at(i) = 1;
  return x;
}

bool BurnsideElement::is_zero() const {
  for (Int c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool operator==(const BurnsideElement& x, const BurnsideElement& y) {
  return x.source() == y.source() && x.target() == y.target() && x.coeffs_ == y.coeffs_;
}

BurnsideElement span_to_element(const Span& s) {
  auto x = BurnsideElement::zero(s.source(), s.target());
  Vec c = x.coefficients();
  for (const auto& key : canonicalize_span(s).keys) ++c[x.basis().position(key)];
  return BurnsideElement(x.basis_ptr(), std::move(c));
}

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) {
  require_same(x.source(), y.source(), "add");
  require_same(x.target(), y.target(), "add");
  Vec c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], y.coefficients()[i]);
  return BurnsideElement(x.basis_ptr(), std::move(c));
}

BurnsideElement scale(const BurnsideElement& x, Int k) {
  Vec c = x.coefficients();
  for (auto& v : c) v = checked_mul(v, k);
  return BurnsideElement(x.basis_ptr(), std::move(c));
}

BurnsideElement negate(const BurnsideElement& x) { return scale(x, -1); }

BurnsideElement subtract(const BurnsideElement& x, const BurnsideElement& y) {
  return add(x, negate(y));
}

namespace {

std::shared_ptr<const StructureConstants> structure_constants(const GSet& a, const GSet& b,
                                                              const GSet& e) {
  auto key = fingerprint({&a, &b, &e});
  {
    std::lock_guard lock(g_constants_mutex);
    auto it = g_constants_cache.find(key);
    if (it != g_constants_cache.end()) return it->second;
  }
  auto bx = hom_basis(b, e);
  auto by = hom_basis(a, b);
  auto bout = hom_basis(a, e);
  auto sc = std::make_shared<StructureConstants>();
  sc->ny = by->size();
  sc->products.resize(bx->size() * by->size());
  std::vector<Span> ys;
  for (const auto& k : by->keys) ys.push_back(representative_span(a, b, k));
  for (std::size_t ix = 0; ix < bx->size(); ++ix) {
    const Span sx = representative_span(b, e, bx->keys[ix]);
    for (std::size_t iy = 0; iy < by->size(); ++iy) {
      std::map<std::size_t, Int> acc;
      for (const auto& k : canonicalize_span(compose_spans(ys[iy], sx)).keys)
        ++acc[bout->position(k)];
      sc->products[ix * sc->ny + iy].assign(acc.begin(), acc.end());
    }
  }
  std::lock_guard lock(g_constants_mutex);
  return g_constants_cache.emplace(std::move(key), std::move(sc)).first->second;
}

}  // namespace

BurnsideElement compose_elements(const BurnsideElement& x, const BurnsideElement& y) {
  require_same(y.target(), x.source(), "compose_elements");
  auto sc = structure_constants(y.source(), y.target(), x.target());
  auto out = BurnsideElement::zero(y.source(), x.target());
  Vec c = out.coefficients();
  for (std::size_t ix = 0; ix < x.coefficients().size(); ++ix) {
    const Int cx = x.coefficients()[ix];
    if (cx == 0) continue;
    for (std::size_t iy = 0; iy < y.coefficients().size(); ++iy) {
      const Int cy = y.coefficients()[iy];
      if (cy == 0) continue;
      const Int w = checked_mul(cx, cy);
      for (const auto& [pos, mult] : sc->products[ix * sc->ny + iy])
        c[pos] = checked_add(c[pos], checked_mul(w, mult));
    }
  }
  return BurnsideElement(out.basis_ptr(), std::move(c));
}

BurnsideRing burnside_ring(const GroupPtr& g) {
  const auto pt = GSet::point(g);
  BurnsideRing ring;
  ring.rank = hom_basis(pt, pt)->size();
  ring.products.assign(ring.rank, std::vector<Vec>(ring.rank));
  for (std::size_t i = 0; i < ring.rank; ++i)
    for (std::size_t j = 0; j < ring.rank; ++j)
      ring.products[i][j] = compose_elements(BurnsideElement::basis_element(pt, pt, i),
                                             BurnsideElement::basis_element(pt, pt, j))
                                .coefficients();
  return ring;
}

Matrix table_of_marks(const GroupPtr& g) {
  const std::size_t k = g->subgroup_classes().size();
  Matrix m = zero_matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto orbit = orbit_gset(g, g->class_representative(i));
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = static_cast<Int>(fixed_points(orbit, g->class_representative(j)));
  }
  return m;
}

Vec mark_hom(const BurnsideElement& x) {
  const auto& g = x.source().group();
  const auto pt = GSet::point(g);
  if (!(x.source() == pt) || !(x.target() == pt))
    throw InputError("mark_hom: element is not an endomorphism of the point");
  const Matrix marks = table_of_marks(g);
  Vec out(marks.size(), 0);
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    // Basis keys of Burnside(pt, pt) are (L, 0, 0), one per class.
    const std::size_t cls = x.basis().keys[i].L;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = checked_add(out[j], checked_mul(x.coefficients()[i], marks[cls][j]));
  }
  return out;
}

Int determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

BurnsideElement Pi0Enrichment::quotient(const Span& s) const {
  if (!(s.source() == basis->source) || !(s.target() == basis->target))
    throw InputError("pi0_enrichment: span has the wrong endpoints");
  return span_to_element(s);
}

Pi0Enrichment pi0_enrichment(const GSet& a, const GSet& b) {
  auto basis = hom_basis(a, b);
  auto group = AbelianGroup::free(basis->size());
  return Pi0Enrichment{std::move(basis), std::move(group)};
}

}  // namespace mackey
