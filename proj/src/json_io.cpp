#include "mackey/json_io.hpp"

#include "mackey/errors.hpp"

namespace mackey {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field \"") + what + "\" has the wrong type");
  }
}

Matrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("field \"") + what + "\" must be an array of rows");
  Matrix m;
  for (const auto& row : j) m.push_back(as<Vec>(row, what));
  return m;
}

Point point_from_json(const Json& j, std::size_t n, const char* what) {
  const auto p = as<long long>(j, what);
  if (p < 1 || static_cast<std::size_t>(p) > n)
    throw InputError(std::string("point in \"") + what + "\" is out of range (points are 1-based)");
  return static_cast<Point>(p - 1);
}

std::size_t class_from_json(const Group& g, const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "e") return 0;
    if (s == "G") return g.subgroup_classes().size() - 1;
    throw InputError("unknown subgroup class name: " + s);
  }
  const auto c = as<long long>(j, "class");
  if (c < 0 || static_cast<std::size_t>(c) >= g.subgroup_classes().size())
    throw InputError("subgroup class index out of range");
  return static_cast<std::size_t>(c);
}

}  // namespace

GroupPtr group_from_json(const Json& j, std::size_t order_cap) {
  if (j.is_string()) return named_group(j.get<std::string>());
  if (j.is_object() && j.contains("name")) return named_group(as<std::string>(j.at("name"), "name"));
  const auto degree = as<std::size_t>(field(j, "degree"), "degree");
  std::vector<Permutation> gens;
  for (const auto& p : field(j, "generators"))
    gens.push_back(Permutation::from_one_based(as<std::vector<long long>>(p, "generators")));
  return Group::make(degree, std::move(gens), order_cap);
}

Json group_to_json(const Group& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.one_based());
  return Json{{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

GSet gset_from_json(const GroupPtr& g, const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "point") return GSet::point(g);
    if (s == "empty") return GSet::empty(g);
    throw InputError("unknown G-set name: " + s);
  }
  if (j.is_object() && j.contains("orbits")) {
    GSet out = GSet::empty(g);
    for (const auto& c : j.at("orbits"))
      out = disjoint_union(out, orbit_gset(g, g->class_representative(class_from_json(*g, c))));
    return out;
  }
  const auto n = as<std::size_t>(field(j, "n"), "n");
  std::vector<Permutation> action;
  for (const auto& p : field(j, "action")) {
    auto images = as<std::vector<long long>>(p, "action");
    if (images.size() != n) throw InputError("action permutation has the wrong length");
    action.push_back(n == 0 ? Permutation() : Permutation::from_one_based(images));
  }
  return GSet::make(g, n, std::move(action));
}

Json gset_to_json(const GSet& a) {
  Json action = Json::array();
  for (std::size_t k = 0; k < a.group()->generators().size(); ++k) {
    Json images = Json::array();
    const Elem gk = a.group()->generator_elements()[k];
    for (Point p = 0; p < a.size(); ++p) images.push_back(a.act(gk, p) + 1);
    action.push_back(images);
  }
  return Json{{"n", a.size()}, {"action", action}};
}

GMap gmap_from_json(const GroupPtr& g, const Json& j) {
  const GSet source = gset_from_json(g, field(j, "source"));
  const GSet target = gset_from_json(g, field(j, "target"));
  std::vector<Point> images;
  for (const auto& p : field(j, "images")) images.push_back(point_from_json(p, target.size(), "images"));
  return GMap::make(source, target, std::move(images));
}

Json gmap_to_json(const GMap& f) {
  Json images = Json::array();
  for (Point p : f.images()) images.push_back(p + 1);
  return Json{{"source", gset_to_json(f.source())}, {"target", gset_to_json(f.target())}, {"images", images}};
}

Span span_from_json(const GroupPtr& g, const Json& j) {
  if (field(j, "left").is_object())
    return Span::make(gmap_from_json(g, j.at("left")), gmap_from_json(g, field(j, "right")));
  // Shorthand: shared middle with the legs as image lists.
  const GSet source = gset_from_json(g, field(j, "source"));
  const GSet target = gset_from_json(g, field(j, "target"));
  const GSet middle = gset_from_json(g, field(j, "middle"));
  auto leg = [&](const char* key, const GSet& to) {
    std::vector<Point> images;
    for (const auto& p : field(j, key)) images.push_back(point_from_json(p, to.size(), key));
    return GMap::make(middle, to, std::move(images));
  };
  return Span::make(leg("left", source), leg("right", target));
}

Json span_to_json(const Span& s) { return Json{{"left", gmap_to_json(s.left())}, {"right", gmap_to_json(s.right())}}; }

AbelianGroup abelian_from_json(const Json& j) {
  const auto r = as<std::size_t>(field(j, "generators"), "generators");
  Matrix rel = j.contains("relations") ? matrix_from_json(j.at("relations"), "relations") : Matrix{};
  return AbelianGroup(r, std::move(rel));
}

Json abelian_to_json(const AbelianGroup& a) {
  return Json{{"generators", a.generators()}, {"relations", a.relations()}, {"structure", a.describe()}};
}

MackeyData mackey_from_json(const Json& j, std::size_t order_cap) {
  MackeyData d;
  d.group = group_from_json(field(j, "group"), order_cap);
  const auto oc = orbit_category(d.group);
  for (const auto& v : field(j, "values")) d.values.push_back(abelian_from_json(v));
  auto maps = [&](const char* key, std::vector<MackeyData::Map>& out) {
    if (!j.contains(key)) return;
    for (const auto& e : j.at(key)) {
      OrbitArrow p;
      if (std::string(key) == "conjugations") {
        p.src = p.dst = class_from_json(*d.group, field(e, "class"));
      } else {
        p.src = class_from_json(*d.group, field(e, "src"));
        p.dst = class_from_json(*d.group, field(e, "dst"));
      }
      p.point = point_from_json(field(e, "point"), oc->orbit(p.dst).size(), "point");
      out.push_back({p, matrix_from_json(field(e, "matrix"), "matrix")});
    }
  };
  maps("restrictions", d.restrictions);
  maps("conjugations", d.restrictions);
  maps("transfers", d.transfers);
  return d;
}

Json mackey_to_json(const MackeyFunctor& m) {
  const MackeyData d = m.data();
  Json values = Json::array();
  for (const auto& v : d.values) values.push_back(abelian_to_json(v));
  auto maps = [](const std::vector<MackeyData::Map>& ms) {
    Json out = Json::array();
    for (const auto& e : ms)
      out.push_back(Json{{"src", e.arrow.src}, {"dst", e.arrow.dst}, {"point", e.arrow.point + 1}, {"matrix", e.matrix}});
    return out;
  };
  return Json{{"group", group_to_json(*m.group())},
              {"values", values},
              {"restrictions", maps(d.restrictions)},
              {"transfers", maps(d.transfers)}};
}

CatalogEntry permcat_from_json(const Json& j) {
  const std::string name = j.contains("name") ? as<std::string>(j.at("name"), "name") : "user";
  if (j.contains("monoid")) {
    const Matrix rows = matrix_from_json(j.at("monoid"), "monoid");
    CommMonoid m;
    m.size = rows.size();
    m.table.clear();
    for (const auto& row : rows) {
      if (row.size() != m.size) throw InputError("monoid table must be square");
      for (Int v : row) {
        if (v < 0) throw InputError("monoid table entry out of range");
        m.table.push_back(static_cast<std::size_t>(v));
      }
    }
    return {name, discrete_permcat(m, name)};
  }
  FinPermCat::Tables t;
  t.objects = as<std::size_t>(field(j, "objects"), "objects");
  auto list = [&](const char* key) {
    std::vector<std::uint32_t> out;
    for (const auto& v : field(j, key)) {
      const auto x = as<long long>(v, key);
      if (x < 0) {
        if (std::string(key) != "compose" || x != -1) throw InputError(std::string("negative entry in ") + key);
        out.push_back(kNoMor);
      } else {
        out.push_back(static_cast<std::uint32_t>(x));
      }
    }
    return out;
  };
  t.object_sum = list("object_sum");
  t.dom = list("dom");
  t.cod = list("cod");
  t.identity = list("identity");
  t.compose = list("compose");
  t.morphism_sum = list("morphism_sum");
  t.symmetry = list("symmetry");
  return {name, std::make_shared<const FinPermCat>(name, std::move(t))};
}

Json report_to_json(const ValidationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"axiom", f.axiom}, {"witness", f.witness}});
  return Json{{"ok", r.ok()}, {"total", r.total}, {"failures", failures}};
}

}  // namespace mackey
