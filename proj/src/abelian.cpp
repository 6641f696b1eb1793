#include "mackey/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mackey/errors.hpp"

namespace mackey {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, Vec(cols, 0)); }

Matrix identity_matrix(std::size_t n) {
  auto m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vec multiply(const Vec& x, const Matrix& m, std::size_t cols) {
  Vec out(cols, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) out[j] = checked_add(out[j], checked_mul(x[i], m[i][j]));
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t cols) {
  Matrix out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(multiply(row, b, cols));
  return out;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const Matrix& a, std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), a_(a), u_(identity_matrix(rows)), v_(identity_matrix(cols)),
        vi_(identity_matrix(cols)) {
    for (const auto& row : a_)
      if (row.size() != n_) throw InputError("matrix rows have inconsistent lengths");
    if (a_.size() != m_) throw InputError("matrix has the wrong number of rows");
  }

  SmithForm run() {
    const std::size_t k = std::min(m_, n_);
    for (std::size_t t = 0; t < k; ++t) {
      if (!pivot(t)) break;
      for (;;) {
        clear(t);
        // Divisibility: fold a row with an indivisible entry into row t and retry.
        bool bad = false;
        for (std::size_t i = t + 1; i < m_ && !bad; ++i)
          for (std::size_t j = t + 1; j < n_; ++j)
            if (a_[i][j] % a_[t][t] != 0) {
              add_row(t, i, 1);
              bad = true;
              break;
            }
        if (!bad) break;
      }
      if (a_[t][t] < 0) negate_row(t);
    }
    SmithForm out;
    out.diagonal.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.diagonal[i] = a_[i][i];
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.v_inverse = std::move(vi_);
    return out;
  }

 private:
  // Moves a least nonzero entry of the trailing block to (t, t); false if none.
  bool pivot(std::size_t t) {
    std::size_t bi = m_, bj = n_;
    Int best = 0;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        Int v = a_[i][j];
        if (v == 0) continue;
        Int av = v < 0 ? checked_sub(0, v) : v;
        if (bi == m_ || av < best) {
          best = av;
          bi = i;
          bj = j;
        }
      }
    if (bi == m_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Zeroes row t and column t outside the pivot.
  void clear(std::size_t t) {
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (a_[i][t] == 0) continue;
        add_row(i, t, -(a_[i][t] / a_[t][t]));
        if (a_[i][t] != 0) {
          swap_rows(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a_[t][j] == 0) continue;
        add_col(j, t, -(a_[t][j] / a_[t][t]));
        if (a_[t][j] != 0) {
          swap_cols(t, j);
          changed = true;
        }
      }
      if (!changed) return;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    std::swap(u_[i], u_[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a_) std::swap(row[i], row[j]);
    for (auto& row : v_) std::swap(row[i], row[j]);
    std::swap(vi_[i], vi_[j]);
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, Int k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < n_; ++c) a_[i][c] = checked_add(a_[i][c], checked_mul(k, a_[j][c]));
    for (std::size_t c = 0; c < m_; ++c) u_[i][c] = checked_add(u_[i][c], checked_mul(k, u_[j][c]));
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, Int k) {
    if (k == 0) return;
    for (auto& row : a_) row[i] = checked_add(row[i], checked_mul(k, row[j]));
    for (auto& row : v_) row[i] = checked_add(row[i], checked_mul(k, row[j]));
    for (std::size_t c = 0; c < n_; ++c)
      vi_[j][c] = checked_sub(vi_[j][c], checked_mul(k, vi_[i][c]));
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    for (auto& x : u_[i]) x = -x;
  }

  std::size_t m_, n_;
  Matrix a_, u_, v_, vi_;
};

}  // namespace

SmithForm smith_normal_form(const Matrix& a, std::size_t rows, std::size_t cols) {
  return SmithReducer(a, rows, cols).run();
}

AbelianGroup::AbelianGroup(std::size_t generators, Matrix relations)
    : r_(generators), relations_(std::move(relations)) {
  for (const auto& row : relations_)
    if (row.size() != r_)
      throw InputError("relation row has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(r_));
  auto snf = smith_normal_form(relations_, relations_.size(), r_);
  std::size_t rank = 0;
  for (Int d : snf.diagonal) {
    if (d == 0) break;
    ++rank;
    if (d == 1) ++skip_;
    else torsion_.push_back(d);
  }
  free_rank_ = r_ - rank;
  v_ = std::move(snf.v);
  v_inverse_ = std::move(snf.v_inverse);
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(rank, {}); }

AbelianGroup AbelianGroup::cyclic(Int n) {
  if (n < 0) throw InputError("cyclic group order must be nonnegative");
  if (n == 0) return free(1);
  return AbelianGroup(1, {{n}});
}

AbelianGroup AbelianGroup::from_invariants(const Vec& torsion, std::size_t free_rank) {
  const std::size_t r = torsion.size() + free_rank;
  Matrix rel;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] <= 0) throw InputError("torsion coefficients must be positive");
    Vec row(r, 0);
    row[i] = torsion[i];
    rel.push_back(std::move(row));
  }
  return AbelianGroup(r, std::move(rel));
}

Int AbelianGroup::order() const {
  if (!is_finite()) throw InputError("order of an infinite group");
  Int n = 1;
  for (Int d : torsion_) n = checked_mul(n, d);
  return n;
}

bool AbelianGroup::isomorphic(const AbelianGroup& other) const {
  return torsion_ == other.torsion_ && free_rank_ == other.free_rank_;
}

Vec AbelianGroup::canonical(const Vec& x) const {
  if (x.size() != r_) throw InputError("element has the wrong number of coordinates");
  const Vec y = multiply(x, v_, r_);
  Vec out;
  out.reserve(canonical_size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) out.push_back(mod_floor(y[skip_ + i], torsion_[i]));
  for (std::size_t j = skip_ + torsion_.size(); j < r_; ++j) out.push_back(y[j]);
  return out;
}

bool AbelianGroup::is_zero(const Vec& x) const {
  for (Int c : canonical(x))
    if (c != 0) return false;
  return true;
}

bool AbelianGroup::equal(const Vec& x, const Vec& y) const {
  return canonical(x) == canonical(y);
}

Vec AbelianGroup::from_canonical(const Vec& c) const {
  if (c.size() != canonical_size()) throw InputError("canonical coordinates have the wrong size");
  Vec y(r_, 0);
  for (std::size_t i = 0; i < c.size(); ++i) y[skip_ + i] = c[i];
  return multiply(y, v_inverse_, r_);
}

Vec AbelianGroup::reduce(const Vec& x) const { return from_canonical(canonical(x)); }

std::vector<Vec> AbelianGroup::elements() const {
  if (!is_finite()) throw InputError("cannot list the elements of an infinite group");
  std::vector<Vec> out;
  Vec c(torsion_.size(), 0);
  for (;;) {
    out.push_back(from_canonical(c));
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] < torsion_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (c.empty()) return out;
  }
}

std::string AbelianGroup::describe() const {
  std::string s;
  for (Int d : torsion_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  if (free_rank_ > 0) {
    if (!s.empty()) s += " + ";
    s += "Z";
    if (free_rank_ > 1) s += "^" + std::to_string(free_rank_);
  }
  return s.empty() ? "0" : s;
}

Homomorphism::Homomorphism(std::shared_ptr<const AbelianGroup> source,
                           std::shared_ptr<const AbelianGroup> target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != source_->generators())
    throw InputError("homomorphism matrix has " + std::to_string(matrix_.size()) +
                     " rows, expected " + std::to_string(source_->generators()));
  for (const auto& row : matrix_)
    if (row.size() != target_->generators())
      throw InputError("homomorphism matrix row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(target_->generators()));
  for (std::size_t i = 0; i < source_->relations().size(); ++i)
    if (!target_->is_zero(apply(source_->relations()[i])))
      throw InputError("homomorphism does not respect relation " + std::to_string(i + 1));
}

Homomorphism Homomorphism::zero(std::shared_ptr<const AbelianGroup> source,
                                std::shared_ptr<const AbelianGroup> target) {
  auto m = zero_matrix(source->generators(), target->generators());
  return Homomorphism(std::move(source), std::move(target), std::move(m));
}

Homomorphism Homomorphism::identity(std::shared_ptr<const AbelianGroup> a) {
  auto m = identity_matrix(a->generators());
  return Homomorphism(a, a, std::move(m));
}

Vec Homomorphism::apply(const Vec& x) const { return multiply(x, matrix_, target_->generators()); }

bool Homomorphism::equals(const Homomorphism& other) const {
  if (matrix_.size() != other.matrix_.size()) return false;
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    Vec d(target_->generators());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = checked_sub(matrix_[i][j], other.matrix_[i][j]);
    if (!target_->is_zero(d)) return false;
  }
  return true;
}

bool Homomorphism::is_zero() const {
  for (const auto& row : matrix_)
    if (!target_->is_zero(row)) return false;
  return true;
}

bool Homomorphism::is_surjective() const {
  const std::size_t rb = target_->generators();
  Matrix stacked = matrix_;
  for (const auto& row : target_->relations()) stacked.push_back(row);
  auto snf = smith_normal_form(stacked, stacked.size(), rb);
  if (snf.diagonal.size() < rb) return false;
  for (std::size_t i = 0; i < rb; ++i)
    if (snf.diagonal[i] != 1) return false;
  return true;
}

bool Homomorphism::is_injective() const {
  // x maps to zero iff (x, z) is in the left kernel of [M; -R_B] for some z.
  const std::size_t ra = source_->generators();
  const std::size_t rb = target_->generators();
  Matrix stacked = matrix_;
  for (const auto& row : target_->relations()) {
    Vec neg(rb);
    for (std::size_t j = 0; j < rb; ++j) neg[j] = -row[j];
    stacked.push_back(std::move(neg));
  }
  auto snf = smith_normal_form(stacked, stacked.size(), rb);
  std::size_t rank = 0;
  while (rank < snf.diagonal.size() && snf.diagonal[rank] != 0) ++rank;
  for (std::size_t i = rank; i < stacked.size(); ++i) {
    Vec x(snf.u[i].begin(), snf.u[i].begin() + static_cast<std::ptrdiff_t>(ra));
    if (!source_->is_zero(x)) return false;
  }
  return true;
}

bool Homomorphism::is_isomorphism() const {
  // Finitely generated abelian groups are Hopfian.
  return source_->isomorphic(*target_) && is_surjective();
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.target().generators() != g.source().generators())
    throw InputError("compose: homomorphisms are not composable");
  return Homomorphism(f.source_ptr(), g.target_ptr(),
                      multiply(f.matrix(), g.matrix(), g.target().generators()));
}

Homomorphism add(const Homomorphism& f, const Homomorphism& g) {
  Matrix m = f.matrix();
  if (g.matrix().size() != m.size()) throw InputError("add: homomorphisms have different shapes");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = checked_add(m[i][j], g.matrix()[i][j]);
  return Homomorphism(f.source_ptr(), f.target_ptr(), std::move(m));
}

Homomorphism scale(const Homomorphism& f, Int k) {
  Matrix m = f.matrix();
  for (auto& row : m)
    for (auto& x : row) x = checked_mul(x, k);
  return Homomorphism(f.source_ptr(), f.target_ptr(), std::move(m));
}

void CommMonoid::validate() const {
  if (size == 0 || table.size() != size * size) throw InputError("monoid table has the wrong size");
  for (auto v : table)
    if (v >= size) throw InputError("monoid table entry out of range");
  for (std::size_t a = 0; a < size; ++a) {
    if (add(0, a) != a || add(a, 0) != a) throw InputError("monoid element 0 is not a unit");
    for (std::size_t b = 0; b < size; ++b) {
      if (add(a, b) != add(b, a)) throw InputError("monoid is not commutative");
      for (std::size_t c = 0; c < size; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) throw InputError("monoid is not associative");
    }
  }
}

bool CommMonoid::is_group() const {
  for (std::size_t a = 0; a < size; ++a) {
    bool inv = false;
    for (std::size_t b = 0; b < size && !inv; ++b) inv = add(a, b) == 0;
    if (!inv) return false;
  }
  return true;
}

CommMonoid CommMonoid::trivial() { return CommMonoid{}; }

CommMonoid CommMonoid::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic monoid order must be positive");
  CommMonoid m{n, std::vector<std::size_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table[a * n + b] = (a + b) % n;
  return m;
}

CommMonoid CommMonoid::product(const CommMonoid& a, const CommMonoid& b) {
  const std::size_t n = a.size * b.size;
  CommMonoid m{n, std::vector<std::size_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      m.table[x * n + y] = a.add(x / b.size, y / b.size) * b.size + b.add(x % b.size, y % b.size);
  return m;
}

CommMonoid CommMonoid::idempotent() { return CommMonoid{2, {0, 1, 1, 1}}; }

}  // namespace mackey
