#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mackey/abelian.hpp"
#include "mackey/burnside.hpp"
#include "mackey/permcat.hpp"

namespace mackey {

/// The G-map G/H_src -> G/H_dst sending the base coset to `point`, where H_i is the
/// representative of subgroup class i and `point` is a coset of G/H_dst fixed by
/// H_src. Every map between orbits is isomorphic to exactly one of these.
struct OrbitArrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  Point point = 0;

  friend auto operator<=>(const OrbitArrow&, const OrbitArrow&) = default;
};

std::string describe(const OrbitArrow& p);

/// The skeletal orbit category of G on the class representatives.
class OrbitCategory {
 public:
  explicit OrbitCategory(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  std::size_t classes() const { return orbits_.size(); }
  const GSet& orbit(std::size_t i) const { return orbits_[i]; }
  /// Every arrow, sorted.
  const std::vector<OrbitArrow>& arrows() const { return arrows_; }
  /// Position in arrows(), or nothing for a non-arrow.
  std::optional<std::size_t> find(const OrbitArrow& p) const;
  std::size_t index(const OrbitArrow& p) const;  // throws InputError

  static OrbitArrow identity(std::size_t i) { return {i, i, 0}; }
  /// p after q; requires q.dst == p.src.
  OrbitArrow compose(const OrbitArrow& p, const OrbitArrow& q) const;
  /// Self-maps of G/H are automorphisms.
  static bool is_iso(const OrbitArrow& p) { return p.src == p.dst; }
  OrbitArrow inverse(const OrbitArrow& p) const;

  /// Orbits of the pullback of p and q over their common target, each as a pair
  /// (a: G/H_m -> G/H_{p.src}, b: G/H_m -> G/H_{q.src}).
  std::vector<std::pair<OrbitArrow, OrbitArrow>> pullback(const OrbitArrow& p, const OrbitArrow& q) const;

  /// Automorphisms together with the non-iso arrows that do not factor through an
  /// intermediate orbit by non-iso arrows.
  const std::vector<OrbitArrow>& generating_arrows() const { return generating_; }

  GMap as_map(const OrbitArrow& p) const;
  /// The span G/H_src <- G/H_src -> G/H_dst (identity left leg).
  Span forward(const OrbitArrow& p) const;
  /// The span G/H_dst <- G/H_src -> G/H_src (identity right leg).
  Span backward(const OrbitArrow& p) const;

 private:
  GroupPtr group_;
  std::vector<GSet> orbits_;
  std::vector<std::vector<Elem>> coset_rep_;  // per class, least element of each coset
  std::vector<OrbitArrow> arrows_;
  std::vector<OrbitArrow> generating_;
};

/// Cached per group; safe to call concurrently.
std::shared_ptr<const OrbitCategory> orbit_category(const GroupPtr& g);

/// Unvalidated Mackey functor data. Maps are integer matrices in generator
/// coordinates (row i is the image of generator i). Restriction along p goes
/// M(p.dst) -> M(p.src) and transfer along p goes M(p.src) -> M(p.dst); maps not
/// listed are generated by composition, and a missing transfer along an automorphism
/// is the restriction along its inverse.
struct MackeyData {
  struct Map {
    OrbitArrow arrow;
    Matrix matrix;
  };
  GroupPtr group;
  std::vector<AbelianGroup> values;  // per subgroup class
  std::vector<Map> restrictions;
  std::vector<Map> transfers;
};

class MackeyFunctor {
 public:
  const GroupPtr& group() const { return orbits_->group(); }
  const OrbitCategory& orbits() const { return *orbits_; }
  std::size_t levels() const { return values_.size(); }
  const AbelianGroup& value(std::size_t i) const { return *values_[i]; }
  const std::shared_ptr<const AbelianGroup>& value_ptr(std::size_t i) const { return values_[i]; }
  const Homomorphism& res(const OrbitArrow& p) const { return res_[orbits_->index(p)]; }
  const Homomorphism& tr(const OrbitArrow& p) const { return tr_[orbits_->index(p)]; }
  /// Indexed like orbits().arrows().
  const std::vector<Homomorphism>& restrictions() const { return res_; }
  const std::vector<Homomorphism>& transfers() const { return tr_; }

  /// Data on the generating arrows only; make_mackey reproduces this functor from it.
  MackeyData data() const;

 private:
  friend struct MackeyCheck check_mackey(const MackeyData& d);
  std::shared_ptr<const OrbitCategory> orbits_;
  std::vector<std::shared_ptr<const AbelianGroup>> values_;
  std::vector<Homomorphism> res_, tr_;
};

struct MackeyCheck {
  std::optional<MackeyFunctor> functor;  // set iff the report is clean
  ValidationReport report;
};

/// Completes the data by composition and checks identities, functoriality of
/// restriction and transfer, and the double coset formula on every pair of arrows
/// with a common target.
MackeyCheck check_mackey(const MackeyData& d);

class MackeyAxiomError : public std::runtime_error {
 public:
  explicit MackeyAxiomError(ValidationReport r);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws MackeyAxiomError carrying the failed relations.
MackeyFunctor make_mackey(const MackeyData& d);

MackeyFunctor zero_mackey(const GroupPtr& g);
/// Value a at every level, restriction the identity, transfer multiplication by the
/// index.
MackeyFunctor constant_mackey(const GroupPtr& g, const AbelianGroup& a);
/// M(G/H) = Burnside(G/H, X); structure maps by precomposition with the forward and
/// backward spans of each arrow.
MackeyFunctor burnside_mackey(const GSet& x);
MackeyFunctor direct_sum(const MackeyFunctor& m, const MackeyFunctor& n);
/// M tensor Z/n.
MackeyFunctor reduce_mod(const MackeyFunctor& m, Int n);

/// Block sum of abelian groups.
AbelianGroup direct_sum(const std::vector<const AbelianGroup*>& parts);

/// M evaluated on an arbitrary G-set: the sum of the values on its orbits, in the
/// order of decompose(a).
struct MackeyValue {
  OrbitDecomposition orbits;
  std::shared_ptr<const AbelianGroup> group;
  std::vector<std::size_t> offset;  // first generator of each orbit's block
};

MackeyValue evaluate(const MackeyFunctor& m, const GSet& a);

/// The action M(B) -> M(A) of a span or Burnside element A -> B: each transitive
/// piece G/H_m <- ... contributes transfer along the left leg after restriction along
/// the right leg.
Homomorphism span_action(const MackeyFunctor& m, const Span& s);
Homomorphism span_action(const MackeyFunctor& m, const BurnsideElement& x);

/// Level isomorphisms phi_i: M1(i) -> M2(i) commuting with every restriction and
/// transfer.
struct MackeyIso {
  std::vector<Homomorphism> levels;
};

struct MackeyIsoResult {
  std::optional<MackeyIso> iso;
  /// False when the search was bounded on free summands and came up empty, so that
  /// absence is not proved.
  bool exhaustive = true;
  std::size_t candidates = 0;
};

struct IsoOptions {
  /// Coefficient range on free summands of Hom(M1, M2), shrunk (down to 1) to fit
  /// max_candidates; small coefficients are tried first.
  Int free_bound = 8;
  std::size_t max_candidates = 1000000;  // ResourceError "iso-candidates" beyond this
};

MackeyIsoResult mackey_iso(const MackeyFunctor& m1, const MackeyFunctor& m2, const IsoOptions& opt = {});

/// Independent check of a claimed isomorphism over every arrow.
ValidationReport verify_mackey_iso(const MackeyFunctor& m1, const MackeyFunctor& m2, const MackeyIso& iso);

}  // namespace mackey
