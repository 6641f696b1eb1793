#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "mackey/errors.hpp"
#include "mackey/mackey.hpp"

namespace mackey {

namespace {

// Extended gcd with g >= 0 and x*a + y*b = g.
void ext_gcd(Int a, Int b, Int& g, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = checked_sub(x0, checked_mul(q, x1));
    x0 = x1;
    x1 = t;
    t = checked_sub(y0, checked_mul(q, y1));
    y0 = y1;
    y1 = t;
  }
  if (a < 0) a = -a, x0 = -x0, y0 = -y0;
  g = a;
  x = x0;
  y = y0;
}

// Unimodular row reduction to echelon form on the first `lead` columns (the rest of
// each row is carried along). Returns the number of pivot rows; pivot columns are
// appended to `pivots`.
std::size_t echelon(Matrix& rows, std::size_t lead, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < lead && r < rows.size(); ++c) {
    std::size_t p = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Int a = rows[r][c], b = rows[i][c];
      Int g, x, y;
      ext_gcd(a, b, g, x, y);
      const Int ag = a / g, bg = b / g;
      Vec& u = rows[r];
      Vec& v = rows[i];
      for (std::size_t k = c; k < u.size(); ++k) {
        const Int nu = checked_add(checked_mul(x, u[k]), checked_mul(y, v[k]));
        const Int nv = checked_sub(checked_mul(bg, u[k]), checked_mul(ag, v[k]));
        u[k] = nu;
        v[k] = nv;
      }
    }
    if (rows[r][c] < 0)
      for (auto& e : rows[r]) e = -e;
    // Keep entries above the pivot small.
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = rows[i][c] >= 0 ? rows[i][c] / rows[r][c] : -((-rows[i][c] + rows[r][c] - 1) / rows[r][c]);
      if (q == 0) continue;
      for (std::size_t k = c; k < rows[i].size(); ++k)
        rows[i][k] = checked_sub(rows[i][k], checked_mul(q, rows[r][k]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

// One level's coordinate frame: canonical coordinates with their moduli (0 = free).
struct Frame {
  const AbelianGroup* group;
  Vec mod;

  explicit Frame(const AbelianGroup& g) : group(&g), mod(g.torsion()) { mod.resize(g.canonical_size(), 0); }
  std::size_t size() const { return mod.size(); }
};

// Matrix of f between canonical coordinates.
Matrix canonical_matrix(const Homomorphism& f) {
  const AbelianGroup& a = f.source();
  const AbelianGroup& b = f.target();
  Matrix m;
  for (std::size_t j = 0; j < a.canonical_size(); ++j) {
    Vec e(a.canonical_size(), 0);
    e[j] = 1;
    m.push_back(b.canonical(f.apply(a.from_canonical(e))));
  }
  return m;
}

class HomSolver {
 public:
  HomSolver(const MackeyFunctor& m1, const MackeyFunctor& m2) : m1_(m1), m2_(m2) {
    for (std::size_t i = 0; i < m1.levels(); ++i) {
      f1_.emplace_back(m1.value(i));
      f2_.emplace_back(m2.value(i));
      off_.push_back(nphi_);
      nphi_ += f1_[i].size() * f2_[i].size();
    }
  }

  std::size_t var(std::size_t i, std::size_t j, std::size_t l) const { return off_[i] + j * f2_[i].size() + l; }

  // Congruences on the phi variables, one per coordinate of each constraint.
  void build() {
    for (std::size_t i = 0; i < f1_.size(); ++i)
      for (std::size_t j = 0; j < f1_[i].size(); ++j) {
        if (f1_[i].mod[j] == 0) continue;
        for (std::size_t l = 0; l < f2_[i].size(); ++l) {
          std::map<std::size_t, Int> e;
          e[var(i, j, l)] = f1_[i].mod[j];
          close(e, f2_[i].mod[l]);
        }
      }
    const auto& oc = m1_.orbits();
    for (const auto& p : oc.generating_arrows()) {
      // phi_src res1 = res2 phi_dst and phi_dst tr1 = tr2 phi_src.
      commute(canonical_matrix(m1_.res(p)), canonical_matrix(m2_.res(p)), p.dst, p.src);
      commute(canonical_matrix(m1_.tr(p)), canonical_matrix(m2_.tr(p)), p.src, p.dst);
    }
  }

  // Hom(M1, M2) as a quotient of a lattice of phi vectors.
  struct Lattice {
    Matrix basis;  // echelon rows in phi coordinates
    std::vector<std::size_t> pivots;
    AbelianGroup group;  // in basis coordinates
  };

  // The lattice is cut down one congruence at a time, re-echeloned together with the
  // trivial generators after each step so entries stay small.
  Lattice solve() const {
    const Matrix trivial = trivial_generators();
    Matrix basis = identity_matrix(nphi_);
    for (const auto& [eq, modulus] : eqs_) {
      Vec val(basis.size(), 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto& [v, c] : eq) val[i] = checked_add(val[i], checked_mul(c, basis[i][v]));
        if (modulus > 0) val[i] = mod_floor(val[i], modulus);
      }
      // Euclid on the values by unimodular row operations until one row is left.
      for (;;) {
        std::size_t best = basis.size();
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (val[i] != 0 && (best == basis.size() || std::abs(val[i]) < std::abs(val[best]))) best = i;
        if (best == basis.size()) break;
        bool done = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (i == best || val[i] == 0) continue;
          const Int q = val[i] / val[best];
          for (std::size_t k = 0; k < nphi_; ++k) basis[i][k] = checked_sub(basis[i][k], checked_mul(q, basis[best][k]));
          val[i] -= q * val[best];
          if (modulus > 0) val[i] = mod_floor(val[i], modulus);
          if (val[i] != 0) done = false;
        }
        if (!done) continue;
        if (modulus == 0) {
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(best));
        } else {
          const Int k = modulus / std::gcd(val[best], modulus);
          for (auto& x : basis[best]) x = checked_mul(x, k);
        }
        break;
      }
      basis.insert(basis.end(), trivial.begin(), trivial.end());
      for (auto& row : basis) row = reduce(row);
      basis.resize(echelon(basis, nphi_));
    }

    Lattice out;
    basis.insert(basis.end(), trivial.begin(), trivial.end());
    const std::size_t prank = echelon(basis, nphi_, &out.pivots);
    basis.resize(prank);
    out.basis = std::move(basis);
    Matrix rel;
    for (const auto& t : trivial) rel.push_back(coordinates(out, t));
    out.group = AbelianGroup(prank, std::move(rel));
    return out;
  }

  static Vec coordinates(const Lattice& l, Vec w) {
    Vec c(l.basis.size(), 0);
    for (std::size_t k = 0; k < l.basis.size(); ++k) {
      const std::size_t p = l.pivots[k];
      if (w[p] % l.basis[k][p] != 0) throw std::logic_error("vector outside the Hom lattice");
      c[k] = w[p] / l.basis[k][p];
      for (std::size_t j = p; j < w.size(); ++j) w[j] = checked_sub(w[j], checked_mul(c[k], l.basis[k][j]));
    }
    return c;
  }

  Vec reduce(Vec w) const {
    for (std::size_t i = 0; i < f1_.size(); ++i)
      for (std::size_t j = 0; j < f1_[i].size(); ++j)
        for (std::size_t l = 0; l < f2_[i].size(); ++l)
          if (f2_[i].mod[l] > 0) w[var(i, j, l)] = mod_floor(w[var(i, j, l)], f2_[i].mod[l]);
    return w;
  }

  // Level maps in the functors' own generator coordinates.
  std::vector<Homomorphism> level_maps(const Vec& phi) const {
    std::vector<Homomorphism> out;
    for (std::size_t i = 0; i < f1_.size(); ++i) {
      const AbelianGroup& a = m1_.value(i);
      const AbelianGroup& b = m2_.value(i);
      Matrix m;
      for (std::size_t g = 0; g < a.generators(); ++g) {
        Vec e(a.generators(), 0);
        e[g] = 1;
        const Vec c = a.canonical(e);
        Vec img(f2_[i].size(), 0);
        for (std::size_t j = 0; j < c.size(); ++j)
          for (std::size_t l = 0; l < img.size(); ++l)
            img[l] = checked_add(img[l], checked_mul(c[j], phi[var(i, j, l)]));
        m.push_back(b.from_canonical(img));
      }
      out.emplace_back(m1_.value_ptr(i), m2_.value_ptr(i), std::move(m));
    }
    return out;
  }

  std::size_t phi_size() const { return nphi_; }

 private:
  void close(std::map<std::size_t, Int>& e, Int modulus) { eqs_.emplace_back(std::move(e), modulus); }

  // a: M1(x) -> M1(y), b: M2(x) -> M2(y) canonical; requires a phi_y = phi_x b mod M2(y).
  void commute(const Matrix& a, const Matrix& b, std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < f1_[x].size(); ++j)
      for (std::size_t l = 0; l < f2_[y].size(); ++l) {
        std::map<std::size_t, Int> e;
        for (std::size_t m = 0; m < f1_[y].size(); ++m)
          if (a[j][m] != 0) e[var(y, m, l)] = checked_add(e[var(y, m, l)], a[j][m]);
        for (std::size_t m = 0; m < f2_[x].size(); ++m)
          if (b[m][l] != 0) e[var(x, j, m)] = checked_sub(e[var(x, j, m)], b[m][l]);
        close(e, f2_[y].mod[l]);
      }
  }

  Matrix trivial_generators() const {
    Matrix out;
    for (std::size_t i = 0; i < f1_.size(); ++i)
      for (std::size_t j = 0; j < f1_[i].size(); ++j)
        for (std::size_t l = 0; l < f2_[i].size(); ++l)
          if (f2_[i].mod[l] > 0) {
            Vec w(nphi_, 0);
            w[var(i, j, l)] = f2_[i].mod[l];
            out.push_back(std::move(w));
          }
    return out;
  }

  const MackeyFunctor& m1_;
  const MackeyFunctor& m2_;
  std::vector<Frame> f1_, f2_;
  std::vector<std::size_t> off_;
  std::size_t nphi_ = 0;
  std::vector<std::pair<std::map<std::size_t, Int>, Int>> eqs_;  // sum = 0 mod modulus
};

bool commutes(const MackeyFunctor& m1, const MackeyFunctor& m2, const std::vector<Homomorphism>& phi,
              const OrbitArrow& p, ValidationReport* r) {
  bool ok = true;
  if (!compose(phi[p.src], m1.res(p)).equals(compose(m2.res(p), phi[p.dst]))) {
    ok = false;
    if (r) r->fail("iso-restriction", describe(p));
  }
  if (!compose(phi[p.dst], m1.tr(p)).equals(compose(m2.tr(p), phi[p.src]))) {
    ok = false;
    if (r) r->fail("iso-transfer", describe(p));
  }
  return ok;
}

std::optional<MackeyIso> identity_candidate(const MackeyFunctor& m1, const MackeyFunctor& m2) {
  MackeyIso iso;
  for (std::size_t i = 0; i < m1.levels(); ++i) {
    const std::size_t n = m1.value(i).generators();
    if (m2.value(i).generators() != n) return std::nullopt;
    try {
      iso.levels.emplace_back(m1.value_ptr(i), m2.value_ptr(i), identity_matrix(n));
    } catch (const InputError&) {
      return std::nullopt;
    }
    if (!iso.levels.back().is_isomorphism()) return std::nullopt;
  }
  for (const auto& p : m1.orbits().generating_arrows())
    if (!commutes(m1, m2, iso.levels, p, nullptr)) return std::nullopt;
  return iso;
}

}  // namespace

MackeyIsoResult mackey_iso(const MackeyFunctor& m1, const MackeyFunctor& m2, const IsoOptions& opt) {
  if (!(*m1.group() == *m2.group())) throw InputError("mackey_iso: functors over different groups");
  MackeyIsoResult out;
  for (std::size_t i = 0; i < m1.levels(); ++i)
    if (!m1.value(i).isomorphic(m2.value(i))) return out;
  if (auto iso = identity_candidate(m1, m2)) {
    out.iso = std::move(iso);
    out.candidates = 1;
    return out;
  }

  HomSolver solver(m1, m2);
  solver.build();
  const auto lattice = solver.solve();
  const AbelianGroup& h = lattice.group;

  // Candidates: all of the torsion of Hom(M1, M2) times a box on its free part, the
  // box shrunk to fit the cap and searched in shells of growing max-norm.
  const Vec& torsion = h.torsion();
  const std::size_t nt = torsion.size();
  const std::size_t nf = h.free_rank();
  auto count = [&](Int bound) {
    double total = 1;
    for (Int r : torsion) total *= static_cast<double>(r);
    for (std::size_t k = 0; k < nf; ++k) total *= static_cast<double>(2 * bound + 1);
    return total;
  };
  Int bound = nf == 0 ? 0 : std::max<Int>(opt.free_bound, 1);
  while (bound > 1 && count(bound) > static_cast<double>(opt.max_candidates)) --bound;
  if (count(bound) > static_cast<double>(opt.max_candidates))
    throw ResourceError("iso-candidates", "isomorphism search needs " + std::to_string(count(bound)) +
                                              " candidates, cap " + std::to_string(opt.max_candidates));
  out.exhaustive = nf == 0;

  auto attempt = [&](const Vec& coords) {
    ++out.candidates;
    const Vec c = h.from_canonical(coords);
    Vec phi(solver.phi_size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0)
        for (std::size_t j = 0; j < phi.size(); ++j)
          phi[j] = checked_add(phi[j], checked_mul(c[k], lattice.basis[k][j]));
    phi = solver.reduce(phi);
    auto maps = solver.level_maps(phi);
    for (const auto& f : maps)
      if (!f.is_isomorphism()) return false;
    if (!verify_mackey_iso(m1, m2, MackeyIso{maps}).ok()) return false;
    out.iso = MackeyIso{std::move(maps)};
    return true;
  };

  Vec radix = torsion;
  for (std::size_t k = 0; k < nf; ++k) radix.push_back(2 * bound + 1);
  for (Int shell = 0; shell <= bound; ++shell) {
    Vec digit(radix.size(), 0);
    for (;;) {
      Vec coords(digit.size());
      Int norm = 0;
      for (std::size_t k = 0; k < digit.size(); ++k) {
        coords[k] = k < nt ? digit[k] : digit[k] - bound;
        if (k >= nt) norm = std::max(norm, coords[k] < 0 ? -coords[k] : coords[k]);
      }
      if (norm == shell && attempt(coords)) return out;
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
  return out;
}

ValidationReport verify_mackey_iso(const MackeyFunctor& m1, const MackeyFunctor& m2, const MackeyIso& iso) {
  ValidationReport r;
  if (iso.levels.size() != m1.levels() || m1.levels() != m2.levels()) {
    r.fail("iso-shape", "wrong number of levels");
    return r;
  }
  std::vector<Homomorphism> phi;
  for (std::size_t i = 0; i < m1.levels(); ++i) {
    try {
      phi.emplace_back(m1.value_ptr(i), m2.value_ptr(i), iso.levels[i].matrix());
    } catch (const InputError& e) {
      r.fail("iso-shape", "level " + std::to_string(i) + ": " + e.what());
      return r;
    }
    if (!phi.back().is_isomorphism()) r.fail("iso-bijective", "level " + std::to_string(i));
  }
  for (const auto& p : m1.orbits().arrows()) commutes(m1, m2, phi, p, &r);
  return r;
}

}  // namespace mackey
