#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mackey/lax.hpp"

namespace mackey {

/// Enumeration limits for hom permutative categories.
struct Caps {
  std::size_t max_objects = 8;      // per input category
  std::size_t max_morphisms = 64;   // per input category
  std::size_t max_functors = 4096;  // objects of a hom category
  std::size_t max_transformations = 1024;
  std::size_t max_search_nodes = 20'000'000;
  std::size_t max_bilinear_morphisms = 512; // per hom category fed to a bilinear check
};

/// Perm(A, B): strictly unital lax functors and monoidal natural transformations,
/// with pointwise sum. Object 0 is the zero functor.
struct HomCategory {
  PermCatPtr source;
  PermCatPtr target;
  PermCatPtr cat;
  std::vector<LaxFunctor> functors;
  std::vector<std::vector<Mor>> components;  // per morphism of cat, one per source object

  /// Index of a functor by its data, or kNoMor.
  Obj find_functor(const LaxFunctor& f) const;
  /// Index of a transformation dom => cod with the given components, or kNoMor.
  Mor find_transformation(Obj dom, Obj cod, const std::vector<Mor>& comps) const;

  std::map<std::vector<std::uint32_t>, Obj> functor_index;
  std::map<std::vector<std::uint32_t>, Mor> transformation_index;
};

using HomPtr = std::shared_ptr<const HomCategory>;

/// Every strictly unital lax symmetric monoidal functor A -> B satisfying Def-level
/// coherence, in deterministic order. Throws ResourceError past the caps.
std::vector<LaxFunctor> enumerate_lax(const PermCatPtr& a, const PermCatPtr& b, const Caps& caps = {});

/// Monoidal natural transformations f => g, as component lists.
std::vector<std::vector<Mor>> enumerate_transformations(const LaxFunctor& f, const LaxFunctor& g,
                                                        const Caps& caps = {});

HomPtr hom_permcat(const PermCatPtr& a, const PermCatPtr& b, const Caps& caps = {});

/// ev: (Perm(A, B), A) -> B with delta_1 = id and delta_2 = structure morphism.
MultilinearFunctor eval_bilinear(const HomCategory& h);

/// Composition (Perm(B, C), Perm(A, B)) -> Perm(A, C) with delta_1 = id and delta_2
/// given by the structure morphism of the outer functor.
MultilinearFunctor composition_bilinear(const HomCategory& bc, const HomCategory& ab,
                                        const HomCategory& ac);

MultilinearFunctor identity_multilinear(const PermCatPtr& c);

/// ev . (comp, id) = ev . (id, ev) on (Perm(B, C), Perm(A, B), A), compared as data.
ValidationReport check_trilinear_eval(const PermCatPtr& a, const PermCatPtr& b, const PermCatPtr& c,
                                      const Caps& caps = {});

/// The adjoint A -> Perm(B, C) of a bilinear f: (A, B) -> C.
LaxFunctor curry(const MultilinearFunctor& f, const HomCategory& bc);

struct CurryCheck {
  LaxFunctor g;
  ValidationReport report;
  std::size_t factorizations = 0;  // lax functors g' with ev . (g', id) = f
};

/// Curries f, validates the result, checks ev . (g, id) = f as data, and counts all
/// factorizations by exhaustive enumeration of lax functors A -> Perm(B, C).
CurryCheck check_curry(const MultilinearFunctor& f, const HomCategory& bc, const Caps& caps = {});

}  // namespace mackey
