#pragma once

#include <string>
#include <vector>

#include "mackey/hom.hpp"

namespace mackey {

struct CatalogEntry {
  std::string name;
  PermCatPtr cat;
};

/// discrete on the trivial monoid, Z/2, Z/3, Z/2 x Z/2 and {0,1} with 1+1=1, and
/// group_morphism(Z/2, Z/2), group_morphism(Z/2, Z/3).
std::vector<CatalogEntry> permcat_catalog();

/// The bilinear map that is constantly 0 with identity constraints.
MultilinearFunctor zero_bilinear(const PermCatPtr& a, const PermCatPtr& b, const PermCatPtr& c);

/// Multiplication (a, b) -> ab on discrete(Z/n), with identity constraints.
MultilinearFunctor product_bilinear(const PermCatPtr& zn, std::size_t n);

struct SuiteLine {
  std::string check;
  std::string subject;
  ValidationReport report;
  bool skipped = false;
  std::string note;
};

/// Runs every coherence check over the catalog: the permutative axioms for each
/// entry and each hom category, the lax axioms for each enumerated functor, lax
/// composition, evaluation, composition and trilinear compatibility, and currying
/// with exhaustive uniqueness. Pairs whose hom category exceeds the caps are
/// recorded as skipped with the cap name.
std::vector<SuiteLine> coherence_suite(const std::vector<CatalogEntry>& catalog, const Caps& caps = {});

}  // namespace mackey
