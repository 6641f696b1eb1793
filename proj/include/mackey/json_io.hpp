#pragma once

#include <json.hpp>

#include "mackey/coherence.hpp"
#include "mackey/mackey.hpp"

namespace mackey {

using Json = nlohmann::ordered_json;

// Conventions: permutation images and G-set points are 1-based; subgroup classes
// are 0-based positions in the global class ordering. Parsers throw InputError.

/// "S3", {"name": "S3"} or {"degree": 3, "generators": [[2, 3, 1], [2, 1, 3]]}.
GroupPtr group_from_json(const Json& j, std::size_t order_cap = kDefaultOrderCap);
Json group_to_json(const Group& g);

/// {"n": k, "action": [[images of each point] per generator]} or
/// {"orbits": [class indices]} for a sum of coset spaces; "point" and "empty" are
/// accepted as strings.
GSet gset_from_json(const GroupPtr& g, const Json& j);
Json gset_to_json(const GSet& a);

/// {"source": gset, "target": gset, "images": [...]}.
GMap gmap_from_json(const GroupPtr& g, const Json& j);
Json gmap_to_json(const GMap& f);

/// {"left": gmap, "right": gmap}, or the shorthand {"source", "target", "middle",
/// "left": [images], "right": [images]}.
Span span_from_json(const GroupPtr& g, const Json& j);
Json span_to_json(const Span& s);

/// {"generators": r, "relations": [[...], ...]}.
AbelianGroup abelian_from_json(const Json& j);
Json abelian_to_json(const AbelianGroup& a);

/// {"group": ..., "values": [...], "restrictions": [{"src", "dst", "point", "matrix"}],
///  "transfers": [...], "conjugations": [{"class", "point", "matrix"}]}. Conjugations
/// are restrictions along automorphisms.
MackeyData mackey_from_json(const Json& j, std::size_t order_cap = kDefaultOrderCap);
Json mackey_to_json(const MackeyFunctor& m);

/// {"name": ..., "monoid": [[table rows]]} for a discrete category, or the full
/// tables {"objects", "object_sum", "dom", "cod", "identity", "compose",
/// "morphism_sum", "symmetry"} with kNoMor written as -1 in "compose".
CatalogEntry permcat_from_json(const Json& j);

Json report_to_json(const ValidationReport& r);

}  // namespace mackey
