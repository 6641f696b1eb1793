#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "mackey/abelian.hpp"

namespace mackey {

using Obj = std::uint32_t;
using Mor = std::uint32_t;
inline constexpr Mor kNoMor = std::numeric_limits<Mor>::max();

/// A finite permutative category given by explicit tables.
///
/// Objects are 0..m-1 with 0 the unit. Morphism tables are indexed by morphism id:
/// `compose[g * M + f]` is g after f (kNoMor when cod f != dom g), `sum[f * M + g]` is
/// f + g, and `symmetry[a * m + b]` is gamma_{a,b}.
class FinPermCat {
 public:
  struct Tables {
    std::size_t objects = 1;
    std::vector<Obj> object_sum;
    std::vector<Obj> dom, cod;
    std::vector<Mor> identity;
    std::vector<Mor> compose;
    std::vector<Mor> morphism_sum;
    std::vector<Mor> symmetry;
  };

  FinPermCat() = default;
  /// Checks table shapes and ranges (not the axioms) and throws InputError on mismatch.
  FinPermCat(std::string name, Tables tables);

  const std::string& name() const { return name_; }
  const Tables& tables() const { return t_; }
  std::size_t objects() const { return t_.objects; }
  std::size_t morphisms() const { return t_.dom.size(); }

  Obj osum(Obj a, Obj b) const { return t_.object_sum[a * t_.objects + b]; }
  Obj dom(Mor f) const { return t_.dom[f]; }
  Obj cod(Mor f) const { return t_.cod[f]; }
  Mor id(Obj a) const { return t_.identity[a]; }
  /// g after f, or kNoMor when either is kNoMor or they do not compose.
  Mor comp(Mor g, Mor f) const;
  /// Morphism sum; kNoMor propagates.
  Mor msum(Mor f, Mor g) const;
  Mor gamma(Obj a, Obj b) const { return t_.symmetry[a * t_.objects + b]; }
  const std::vector<Mor>& hom(Obj a, Obj b) const { return homs_[a * t_.objects + b]; }

 private:
  std::string name_;
  Tables t_;
  std::vector<std::vector<Mor>> homs_;
};

using PermCatPtr = std::shared_ptr<const FinPermCat>;

struct Failure {
  std::string axiom;
  std::string witness;
};

/// Failed axioms with witnesses. Keeps the first few failures of each axiom and a
/// total count.
struct ValidationReport {
  std::vector<Failure> failures;
  std::size_t total = 0;

  bool ok() const { return total == 0; }
  bool has(const std::string& axiom) const;
  void fail(const std::string& axiom, std::string witness);
  void merge(const ValidationReport& other, const std::string& prefix = "");
};

ValidationReport validate_permcat(const FinPermCat& c);

/// Only identity morphisms; requires m to be a valid commutative monoid.
PermCatPtr discrete_permcat(const CommMonoid& m, std::string name = "");

/// Objects m; Hom(a, a) = h and Hom(a, b) empty otherwise; composition and sum are
/// addition in h; all symmetries are 0. Requires h to be a group.
PermCatPtr group_morphism_permcat(const CommMonoid& m, const CommMonoid& h, std::string name = "");

/// Witness formatting helper: "(a=1, b=2)".
std::string tuple_witness(std::initializer_list<std::pair<const char*, long long>> items);

}  // namespace mackey
