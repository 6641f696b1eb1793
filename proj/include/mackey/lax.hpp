#pragma once

#include <vector>

#include "mackey/permcat.hpp"

namespace mackey {

/// A strictly unital lax symmetric monoidal functor (f, delta) between finite
/// permutative categories. `delta[a * m + a']` is the structure morphism
/// f(a) + f(a') -> f(a + a').
struct LaxFunctor {
  PermCatPtr source;
  PermCatPtr target;
  std::vector<Obj> obj;
  std::vector<Mor> mor;
  std::vector<Mor> delta;

  Mor d(Obj a, Obj b) const { return delta[a * source->objects() + b]; }

  friend bool operator==(const LaxFunctor& x, const LaxFunctor& y) {
    return x.source == y.source && x.target == y.target && x.obj == y.obj && x.mor == y.mor &&
           x.delta == y.delta;
  }
};

LaxFunctor identity_lax(const PermCatPtr& c);
/// Constant at 0 with identity structure morphisms.
LaxFunctor zero_lax(const PermCatPtr& source, const PermCatPtr& target);

/// Object and morphism tuples are flattened in mixed radix with slot 0 most
/// significant. `delta[i][tuple * m_i + a']` is the i-th linearity constraint
/// f(.., a_i, ..) + f(.., a'_i, ..) -> f(.., a_i + a'_i, ..).
struct MultilinearFunctor {
  std::vector<PermCatPtr> sources;
  PermCatPtr target;
  std::vector<Obj> obj;
  std::vector<Mor> mor;
  std::vector<std::vector<Mor>> delta;

  std::size_t arity() const { return sources.size(); }
  std::size_t object_index(const std::vector<Obj>& t) const;
  std::size_t morphism_index(const std::vector<Mor>& t) const;
  Obj at(const std::vector<Obj>& t) const { return obj[object_index(t)]; }
  Mor at_mor(const std::vector<Mor>& t) const { return mor[morphism_index(t)]; }
  Mor d(std::size_t slot, const std::vector<Obj>& t, Obj other) const {
    return delta[slot][object_index(t) * sources[slot]->objects() + other];
  }

  friend bool operator==(const MultilinearFunctor& x, const MultilinearFunctor& y) {
    return x.sources == y.sources && x.target == y.target && x.obj == y.obj && x.mor == y.mor &&
           x.delta == y.delta;
  }
};

/// All tuples of the given radices, in flattening order.
std::vector<std::vector<std::uint32_t>> all_tuples(const std::vector<std::size_t>& radix);

MultilinearFunctor to_multilinear(const LaxFunctor& f);
LaxFunctor to_lax(const MultilinearFunctor& f);

/// Checks functoriality, the unit conditions, typing of the constraints, naturality,
/// the associativity and symmetry squares in each slot, and for k >= 2 the
/// interchange condition between slots i < j:
///   delta_j . (delta_i + delta_i) . (1 + gamma + 1) = delta_i . (delta_j + delta_j)
/// as maps f(a,b) + f(a,b') + f(a',b) + f(a',b') -> f(a + a', b + b') (a in slot i,
/// b in slot j, other slots fixed).
ValidationReport validate_multilinear(const MultilinearFunctor& f);

/// Definition-level checks for k = 1; same axiom names as validate_multilinear.
ValidationReport validate_lax(const LaxFunctor& f);

/// g after f, with structure morphism g(delta^f) . delta^g.
LaxFunctor compose_lax(const LaxFunctor& g, const LaxFunctor& f);

/// g after (f_1 x ... x f_n). The constraint for slot i of f_j is
/// g(id, .., delta_i^{f_j}, .., id) . delta_j^g.
MultilinearFunctor compose_multilinear(const MultilinearFunctor& g,
                                       const std::vector<MultilinearFunctor>& fs);

}  // namespace mackey
