#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mackey/abelian.hpp"
#include "mackey/span.hpp"

namespace mackey {

/// The ordered transitive-span basis of Burnside(A, B).
struct HomBasis {
  GSet source;
  GSet target;
  std::vector<TransitiveSpanKey> keys;
  std::map<TransitiveSpanKey, std::size_t> index;

  std::size_t size() const { return keys.size(); }
  /// Position of a key; throws std::logic_error when absent.
  std::size_t position(const TransitiveSpanKey& key) const;
};

/// Cached basis lookup; safe to call concurrently.
std::shared_ptr<const HomBasis> hom_basis(const GSet& a, const GSet& b);

/// A morphism A -> B of the Burnside category: integer coefficients on hom_basis(A, B).
class BurnsideElement {
 public:
  BurnsideElement() = default;
  BurnsideElement(std::shared_ptr<const HomBasis> basis, Vec coefficients);

  static BurnsideElement zero(const GSet& a, const GSet& b);
  static BurnsideElement identity(const GSet& a);
  static BurnsideElement basis_element(const GSet& a, const GSet& b, std::size_t i);

  const GSet& source() const { return basis_->source; }
  const GSet& target() const { return basis_->target; }
  const HomBasis& basis() const { return *basis_; }
  const std::shared_ptr<const HomBasis>& basis_ptr() const { return basis_; }
  const Vec& coefficients() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const BurnsideElement& x, const BurnsideElement& y);

 private:
  std::shared_ptr<const HomBasis> basis_;
  Vec coeffs_;
};

BurnsideElement span_to_element(const Span& s);

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement negate(const BurnsideElement& x);
BurnsideElement subtract(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement scale(const BurnsideElement& x, Int k);

/// x after y, for y: A -> B and x: B -> E, extended bilinearly from composition of
/// representative spans. Structure constants are cached per (A, B, E).
BurnsideElement compose_elements(const BurnsideElement& x, const BurnsideElement& y);

/// Structure constants of A(G) = Burnside(pt, pt) on the subgroup-class basis:
/// `products[i][j]` is the coefficient vector of [G/H_i] * [G/H_j].
struct BurnsideRing {
  std::size_t rank = 0;
  std::vector<std::vector<Vec>> products;
};

BurnsideRing burnside_ring(const GroupPtr& g);

/// Entry (i, j) = |(G/H_i)^{H_j}|, classes in the global order (increasing size).
Matrix table_of_marks(const GroupPtr& g);

/// Linear extension of the rows of the table of marks; x must be an endomorphism of
/// the point.
Vec mark_hom(const BurnsideElement& x);

/// Determinant by fraction-free elimination.
Int determinant(Matrix m);

/// Burnside(A, B) as the free abelian group on its transitive-span basis.
struct Pi0Enrichment {
  std::shared_ptr<const HomBasis> basis;
  AbelianGroup group;

  BurnsideElement quotient(const Span& s) const;
};

Pi0Enrichment pi0_enrichment(const GSet& a, const GSet& b);

}  // namespace mackey
