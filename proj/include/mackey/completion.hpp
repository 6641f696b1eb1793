#pragma once

#include <memory>
#include <vector>

#include "mackey/abelian.hpp"
#include "mackey/lax.hpp"

namespace mackey {

/// Connected components of objects (zig-zag classes) with the induced monoid.
/// Components are numbered by least object, so the unit's component is 0.
struct Pi0 {
  CommMonoid monoid;
  std::vector<std::size_t> component_of;  // per object
  std::vector<Obj> representative;        // least object per component
};

Pi0 pi0_objects(const FinPermCat& c);

/// The universal abelian group of m: one generator e_x per element, relations
/// e_x + e_y - e_{x+y} and e_0.
std::shared_ptr<const AbelianGroup> group_completion(const CommMonoid& m);

/// Gr(pi0 A) -> Gr(pi0 B) sending e_[a] to e_[f(a)].
Homomorphism induced_map_on_completions(const LaxFunctor& f);

}  // namespace mackey
