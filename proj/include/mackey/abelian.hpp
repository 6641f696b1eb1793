#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mackey {

using Int = std::int64_t;
using Vec = std::vector<Int>;
/// Row-major integer matrix as a list of rows.
using Matrix = std::vector<Vec>;

// Overflow-checked arithmetic; throws OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
/// Nonnegative residue.
Int mod_floor(Int a, Int m);

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
/// a * b; `cols` is the column count of b, needed when b has no rows.
Matrix multiply(const Matrix& a, const Matrix& b, std::size_t cols);
/// Row vector times matrix with `cols` columns.
Vec multiply(const Vec& x, const Matrix& m, std::size_t cols);

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... (nonnegative).
struct SmithForm {
  Matrix u, v, v_inverse;
  Vec diagonal;  // min(rows, cols) entries
};

SmithForm smith_normal_form(const Matrix& a, std::size_t rows, std::size_t cols);

/// A finitely generated abelian group Z^r / (row space of the relation matrix).
///
/// Smith data is computed once on construction. Canonical coordinates of x are
/// x * V: entries for the invariant factors d > 1 reduced mod d, followed by the
/// free coordinates, so two elements are equal iff their canonical coordinates are.
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(0, {}) {}
  /// Throws InputError on ragged relation rows.
  AbelianGroup(std::size_t generators, Matrix relations);

  static AbelianGroup free(std::size_t rank);
  static AbelianGroup cyclic(Int n);  // n = 0 gives Z
  /// Z/d1 + ... + Z/dk + Z^free, one generator per summand.
  static AbelianGroup from_invariants(const Vec& torsion, std::size_t free_rank);

  std::size_t generators() const { return r_; }
  const Matrix& relations() const { return relations_; }

  /// Invariant factors > 1 in divisibility order.
  const Vec& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of a finite group; throws OverflowError when it does not fit.
  Int order() const;
  /// Same invariants.
  bool isomorphic(const AbelianGroup& other) const;

  Vec canonical(const Vec& x) const;
  bool is_zero(const Vec& x) const;
  bool equal(const Vec& x, const Vec& y) const;
  /// Least-coordinates representative of x in generator coordinates.
  Vec reduce(const Vec& x) const;
  /// Generator coordinates of the element with the given canonical coordinates.
  Vec from_canonical(const Vec& c) const;
  /// Number of canonical coordinates (torsion plus free).
  std::size_t canonical_size() const { return torsion_.size() + free_rank_; }

  /// For finite groups: every element in canonical order (mixed radix over torsion).
  std::vector<Vec> elements() const;

  /// "Z/2 + Z^3", or "0".
  std::string describe() const;

 private:
  std::size_t r_;
  Matrix relations_;
  Vec torsion_;
  std::size_t free_rank_ = 0;
  std::size_t skip_ = 0;  // number of unit invariant factors
  Matrix v_, v_inverse_;
};

/// A homomorphism A -> B given by the images of A's generators: row i of `matrix`
/// is the image of generator i in B's generator coordinates, so x maps to x * matrix.
class Homomorphism {
 public:
  Homomorphism() = default;
  /// Throws InputError unless every relation of A maps to zero in B.
  Homomorphism(std::shared_ptr<const AbelianGroup> source, std::shared_ptr<const AbelianGroup> target,
               Matrix matrix);

  static Homomorphism zero(std::shared_ptr<const AbelianGroup> source,
                           std::shared_ptr<const AbelianGroup> target);
  static Homomorphism identity(std::shared_ptr<const AbelianGroup> a);

  const AbelianGroup& source() const { return *source_; }
  const AbelianGroup& target() const { return *target_; }
  const std::shared_ptr<const AbelianGroup>& source_ptr() const { return source_; }
  const std::shared_ptr<const AbelianGroup>& target_ptr() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vec apply(const Vec& x) const;
  /// Equality of maps modulo the target's relations.
  bool equals(const Homomorphism& other) const;
  bool is_zero() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_isomorphism() const;

 private:
  std::shared_ptr<const AbelianGroup> source_;
  std::shared_ptr<const AbelianGroup> target_;
  Matrix matrix_;
};

/// g after f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
Homomorphism add(const Homomorphism& f, const Homomorphism& g);
Homomorphism scale(const Homomorphism& f, Int k);

/// A finite commutative monoid {0..k-1} with unit 0.
struct CommMonoid {
  std::size_t size = 1;
  std::vector<std::size_t> table{0};  // size * size

  std::size_t add(std::size_t a, std::size_t b) const { return table[a * size + b]; }
  /// Throws InputError unless the table is associative, commutative and unital.
  void validate() const;
  bool is_group() const;

  static CommMonoid trivial();
  static CommMonoid cyclic(std::size_t n);
  static CommMonoid product(const CommMonoid& a, const CommMonoid& b);
  /// {0, 1} with 1 + 1 = 1.
  static CommMonoid idempotent();

  friend bool operator==(const CommMonoid&, const CommMonoid&) = default;
};

}  // namespace mackey
