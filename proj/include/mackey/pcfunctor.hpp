#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mackey/completion.hpp"
#include "mackey/mackey.hpp"

namespace mackey {

/// Input to the machine, restricted to the two families it is instantiated on.
///
/// Family `mackey`: level i is the discrete permutative category on values[i], and
/// each orbit map acts by the strictly unital monoidal functors given by the
/// restriction and transfer homomorphisms.
///
/// Family `representable`: level i is the span category on G/H_i and x, kept
/// symbolic through its transitive-span basis; orbit maps act by precomposition
/// with their forward and backward spans.
struct PCFunctorData {
  enum class Family { mackey, representable };

  Family family = Family::mackey;
  std::shared_ptr<const OrbitCategory> orbits;
  // mackey family; indexed like orbits->arrows()
  std::vector<std::shared_ptr<const AbelianGroup>> values;
  std::vector<Homomorphism> res, tr;
  // representable family
  std::optional<GSet> x;

  const GroupPtr& group() const { return orbits->group(); }
};

PCFunctorData mackey_to_pcfunctor(const MackeyFunctor& m);
PCFunctorData suspension_pcfunctor(const GSet& x);

/// Mackey family: the assigned homomorphisms form a Mackey functor. Representable
/// family: every structure span has the right endpoints.
ValidationReport validate_pcfunctor(const PCFunctorData& d);

/// The discrete permutative category on a finite abelian group, objects numbered by
/// canonical order (so 0 is the unit).
struct DiscreteLevel {
  PermCatPtr cat;
  std::shared_ptr<const AbelianGroup> group;
  std::vector<Vec> elements;        // generator coordinates per object
  std::map<Vec, Obj> by_canonical;  // canonical coordinates -> object

  Obj object_of(const Vec& x) const { return by_canonical.at(group->canonical(x)); }
};

/// Throws ResourceError "discrete-level" above `cap` elements or for infinite groups.
DiscreteLevel discrete_level(const std::shared_ptr<const AbelianGroup>& a, std::size_t cap);

/// The strictly unital monoidal functor of a homomorphism between finite levels.
LaxFunctor discrete_functor(const DiscreteLevel& a, const DiscreteLevel& b, const Homomorphism& f);

/// Transitive-span basis of level i (representable family).
std::vector<TransitiveSpanKey> pi0_basis(const PCFunctorData& d, std::size_t level);

struct KgOptions {
  /// Finite levels up to this order go through explicit permutative categories,
  /// components and group completion; larger or infinite levels use Gr(A) = A.
  std::size_t explicit_cap = 64;
};

/// The pi_0 Mackey functor of the machine's output: Gr of the components of each
/// level, with the induced maps on group completions.
MackeyFunctor kg_pi0(const PCFunctorData& d, const KgOptions& opt = {});

}  // namespace mackey
