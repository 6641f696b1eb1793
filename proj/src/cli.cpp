#include "mackey/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "mackey/errors.hpp"
#include "mackey/json_io.hpp"
#include "mackey/pcfunctor.hpp"

namespace mackey {

namespace {

enum class Format { text, json, csv };

struct Options {
  std::string command;
  std::string input;
  std::string inline_json;
  Format format = Format::text;
  std::size_t cap = 0;  // 0: defaults
  std::uint64_t seed = 1;
};

// Failed verification: the report has already been written.
struct VerificationFailed {};

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, Format f) const {
    if (f == Format::csv) {
      write_csv_row(out, header_);
      for (const auto& r : rows_) write_csv_row(out, r);
      return;
    }
    std::vector<std::size_t> w(header_.size(), 0);
    // Numeric columns are right-aligned, everything else left-aligned.
    std::vector<bool> numeric(header_.size(), !rows_.empty());
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i)
        numeric[i] = numeric[i] && !r[i].empty() &&
                     r[i].find_first_not_of("-0123456789") == std::string::npos;
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += "  ";
        const std::string pad(w[i] - r[i].size(), ' ');
        s += numeric[i] ? pad + r[i] : r[i] + pad;
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  static void write_csv_row(std::ostream& out, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << ',';
      if (r[i].find_first_of(",\"") != std::string::npos) {
        out << '"';
        for (char c : r[i]) out << (c == '"' ? "\"\"" : std::string(1, c));
        out << '"';
      } else {
        out << r[i];
      }
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string cycles(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      if (s.back() != '(') s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// Greedy generating set of a subgroup, in element order.
std::vector<Elem> small_generators(const Group& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup cur = g.trivial();
  for (Elem x : h.elements) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = g.generated_by(gens);
  }
  return gens;
}

std::string class_label(std::size_t i) { return "H" + std::to_string(i); }

Json classes_json(const Group& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < g.subgroup_classes().size(); ++i) {
    const Subgroup& h = g.class_representative(i);
    Json gens = Json::array();
    for (Elem x : small_generators(g, h)) gens.push_back(g.element(x).one_based());
    out.push_back(Json{{"index", i},
                       {"order", h.order()},
                       {"size", g.subgroup_classes()[i].members.size()},
                       {"generators", gens}});
  }
  return out;
}

void write_classes(std::ostream& out, const Group& g) {
  Table t({"class", "order", "conjugates", "generators"});
  for (std::size_t i = 0; i < g.subgroup_classes().size(); ++i) {
    const Subgroup& h = g.class_representative(i);
    std::string gens;
    for (Elem x : small_generators(g, h)) gens += (gens.empty() ? "" : ", ") + cycles(g.element(x));
    t.add({class_label(i), std::to_string(h.order()), std::to_string(g.subgroup_classes()[i].members.size()),
           gens.empty() ? "-" : gens});
  }
  t.write(out, Format::text);
}

std::string element_text(const Vec& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Int a = c[i] < 0 ? -c[i] : c[i];
    s += s.empty() ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + ");
    if (a != 1) s += std::to_string(a);
    s += "[G/" + class_label(i) + "]";
  }
  return s.empty() ? "0" : s;
}

std::string key_text(const TransitiveSpanKey& k) {
  return class_label(k.L) + " a=" + std::to_string(k.a + 1) + " b=" + std::to_string(k.b + 1);
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int run() {
    const Json in = load();
    const std::string& c = o_.command;
    if (c == "marks") return marks(in);
    if (c == "burnside-ring") return ring(in);
    if (c == "span-compose") return span_compose(in);
    if (c == "basis") return basis(in);
    if (c == "double-cosets") return double_cosets_cmd(in);
    if (c == "mackey-validate") return mackey_validate(in);
    if (c == "em-check") return em_check(in);
    if (c == "susp-check") return susp_check(in);
    if (c == "coherence") return coherence(in);
    throw InputError("unknown command " + c);
  }

 private:
  Json load() const {
    std::string text;
    if (!o_.inline_json.empty()) {
      text = o_.inline_json;
    } else if (!o_.input.empty()) {
      std::ifstream f(o_.input);
      if (!f) throw InputError("cannot read " + o_.input);
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else if (o_.command == "coherence") {
      return Json::object();
    } else {
      throw InputError("command " + o_.command + " needs --input or --json");
    }
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }

  GroupPtr group_of(const Json& in) const {
    const Json& g = in.is_object() && in.contains("group") ? in.at("group") : in;
    return group_from_json(g);
  }

  void emit(const Json& j) const { out_ << j.dump(2) << '\n'; }

  int marks(const Json& in) {
    const auto g = group_of(in);
    const Matrix m = table_of_marks(g);
    if (o_.format == Format::json) {
      emit(Json{{"classes", classes_json(*g)}, {"marks", m}});
      return 0;
    }
    std::vector<std::string> header{"orbit"};
    for (std::size_t j = 0; j < m.size(); ++j) header.push_back(class_label(j));
    Table t(header);
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::vector<std::string> row{"G/" + class_label(i)};
      for (Int v : m[i]) row.push_back(std::to_string(v));
      t.add(row);
    }
    if (o_.format == Format::text) {
      write_classes(out_, *g);
      out_ << '\n';
    }
    t.write(out_, o_.format);
    return 0;
  }

  int ring(const Json& in) {
    const auto g = group_of(in);
    const auto r = burnside_ring(g);
    if (o_.format == Format::json) {
      emit(Json{{"classes", classes_json(*g)}, {"products", r.products}});
      return 0;
    }
    std::vector<std::string> header{"left", "right"};
    for (std::size_t k = 0; k < r.rank; ++k) header.push_back(class_label(k));
    if (o_.format == Format::text) {
      write_classes(out_, *g);
      out_ << '\n';
      for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = i; j < r.rank; ++j)
          out_ << "[G/" << class_label(i) << "] * [G/" << class_label(j) << "] = " << element_text(r.products[i][j])
               << '\n';
      return 0;
    }
    Table t(header);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < r.rank; ++j) {
        std::vector<std::string> row{class_label(i), class_label(j)};
        for (Int v : r.products[i][j]) row.push_back(std::to_string(v));
        t.add(row);
      }
    t.write(out_, o_.format);
    return 0;
  }

  int span_compose(const Json& in) {
    const auto g = group_of(in);
    if (!in.contains("spans") || !in.at("spans").is_array() || in.at("spans").empty())
      throw InputError("span-compose needs a non-empty \"spans\" array");
    Span s = span_from_json(g, in.at("spans").at(0));
    for (std::size_t i = 1; i < in.at("spans").size(); ++i) s = compose_spans(s, span_from_json(g, in.at("spans").at(i)));
    const auto cls = canonicalize_span(s);
    if (o_.format == Format::json) {
      Json keys = Json::array();
      for (const auto& k : cls.keys) keys.push_back(Json{{"L", k.L}, {"a", k.a + 1}, {"b", k.b + 1}});
      emit(Json{{"span", span_to_json(s)}, {"class", keys}});
      return 0;
    }
    if (o_.format == Format::text)
      out_ << "source " << s.source().size() << " points, target " << s.target().size() << " points, middle "
           << s.middle().size() << " points\n";
    Table t({"point", "left", "right"});
    for (Point p = 0; p < s.middle().size(); ++p)
      t.add({std::to_string(p + 1), std::to_string(s.left()(p) + 1), std::to_string(s.right()(p) + 1)});
    t.write(out_, o_.format);
    if (o_.format == Format::text) {
      out_ << "iso class:";
      for (const auto& k : cls.keys) out_ << " [" << key_text(k) << "]";
      out_ << '\n';
    }
    return 0;
  }

  int basis(const Json& in) {
    const auto g = group_of(in);
    const GSet a = gset_from_json(g, in.at("source"));
    const GSet b = gset_from_json(g, in.at("target"));
    const auto keys = transitive_span_basis(a, b);
    if (o_.format == Format::json) {
      Json arr = Json::array();
      for (const auto& k : keys) arr.push_back(Json{{"L", k.L}, {"a", k.a + 1}, {"b", k.b + 1}});
      emit(Json{{"rank", keys.size()}, {"basis", arr}});
      return 0;
    }
    if (o_.format == Format::text) out_ << "rank " << keys.size() << '\n';
    Table t({"index", "class", "a", "b"});
    for (std::size_t i = 0; i < keys.size(); ++i)
      t.add({std::to_string(i), class_label(keys[i].L), std::to_string(keys[i].a + 1), std::to_string(keys[i].b + 1)});
    t.write(out_, o_.format);
    return 0;
  }

  int double_cosets_cmd(const Json& in) {
    const auto g = group_of(in);
    const std::size_t n = g->subgroup_classes().size();
    auto cls = [&](const char* key) {
      const auto c = in.at(key).get<long long>();
      if (c < 0 || static_cast<std::size_t>(c) >= n) throw InputError(std::string(key) + " is out of range");
      return static_cast<std::size_t>(c);
    };
    if (in.contains("H") && in.contains("K")) {
      const std::size_t h = cls("H"), k = cls("K");
      const auto dcs = double_cosets(*g, g->class_representative(h), g->class_representative(k));
      if (o_.format == Format::json) {
        Json arr = Json::array();
        for (const auto& d : dcs)
          arr.push_back(Json{{"representative", g->element(d.representative).one_based()}, {"size", d.elements.size()}});
        emit(Json{{"count", dcs.size()}, {"double_cosets", arr}});
        return 0;
      }
      if (o_.format == Format::text) out_ << dcs.size() << " double cosets\n";
      Table t({"representative", "size"});
      for (const auto& d : dcs) t.add({cycles(g->element(d.representative)), std::to_string(d.elements.size())});
      t.write(out_, o_.format);
      return 0;
    }
    // All pairs, next to the rank of the hom group between the orbits.
    const auto oc = orbit_category(g);
    Json arr = Json::array();
    Table t({"H", "K", "double_cosets", "burnside_rank"});
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        const auto dcs = double_cosets(*g, g->class_representative(h), g->class_representative(k));
        const std::size_t rank = hom_basis(oc->orbit(h), oc->orbit(k))->size();
        t.add({class_label(h), class_label(k), std::to_string(dcs.size()), std::to_string(rank)});
        arr.push_back(Json{{"H", h}, {"K", k}, {"double_cosets", dcs.size()}, {"burnside_rank", rank}});
      }
    if (o_.format == Format::json) {
      emit(Json{{"classes", classes_json(*g)}, {"pairs", arr}});
      return 0;
    }
    if (o_.format == Format::text) {
      write_classes(out_, *g);
      out_ << '\n';
    }
    t.write(out_, o_.format);
    return 0;
  }

  // Random x: A -> B, y: B -> E over orbits; checks action(y x) = action(x) action(y).
  ValidationReport random_functoriality(const MackeyFunctor& m, std::size_t trials) const {
    std::mt19937_64 rng(o_.seed);
    const auto& oc = m.orbits();
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto random_element = [&](const GSet& a, const GSet& b) {
      const auto basis = hom_basis(a, b);
      Vec c(basis->size());
      for (auto& v : c) v = static_cast<Int>(pick(5)) - 2;
      return BurnsideElement(basis, c);
    };
    ValidationReport r;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t ia = pick(oc.classes()), ib = pick(oc.classes()), ie = pick(oc.classes());
      const auto x = random_element(oc.orbit(ia), oc.orbit(ib));
      const auto y = random_element(oc.orbit(ib), oc.orbit(ie));
      if (!span_action(m, compose_elements(y, x)).equals(compose(span_action(m, x), span_action(m, y))))
        r.fail("span-action-functoriality",
               tuple_witness({{"trial", static_cast<long long>(t)},
                              {"A", static_cast<long long>(ia)},
                              {"B", static_cast<long long>(ib)},
                              {"E", static_cast<long long>(ie)}}));
    }
    return r;
  }

  void write_values(const MackeyFunctor& m) {
    Table t({"class", "order", "value"});
    for (std::size_t i = 0; i < m.levels(); ++i)
      t.add({class_label(i), std::to_string(m.group()->class_representative(i).order()), m.value(i).describe()});
    t.write(out_, o_.format);
  }

  void write_report(const char* title, const ValidationReport& r) {
    if (o_.format == Format::json) {
      emit(Json{{"result", title}, {"report", report_to_json(r)}});
      return;
    }
    if (o_.format == Format::text) out_ << title << " (" << r.total << " failures)\n";
    Table t({"axiom", "witness"});
    for (const auto& f : r.failures) t.add({f.axiom, f.witness});
    t.write(out_, o_.format);
  }

  MackeyFunctor checked_mackey(const Json& in) {
    auto c = check_mackey(mackey_from_json(in));
    if (!c.functor) {
      write_report("invalid Mackey functor", c.report);
      throw VerificationFailed{};
    }
    return std::move(*c.functor);
  }

  int mackey_validate(const Json& in) {
    const auto m = checked_mackey(in);
    const auto r = random_functoriality(m, 50);
    if (!r.ok()) {
      write_report("span action is not functorial", r);
      return 1;
    }
    if (o_.format == Format::json) {
      Json values = Json::array();
      for (std::size_t i = 0; i < m.levels(); ++i) values.push_back(m.value(i).describe());
      emit(Json{{"result", "valid"}, {"values", values}, {"orbit_maps", m.orbits().arrows().size()},
                {"random_checks", 50}, {"seed", o_.seed}});
      return 0;
    }
    if (o_.format == Format::text)
      out_ << "valid Mackey functor; " << m.orbits().arrows().size() << " orbit maps checked, 50 random span-action checks (seed "
           << o_.seed << ")\n";
    write_values(m);
    return 0;
  }

  IsoOptions iso_options() const {
    IsoOptions opt;
    if (o_.cap) opt.max_candidates = o_.cap;
    return opt;
  }

  int report_iso(const char* found, const MackeyFunctor& lhs, const MackeyFunctor& rhs) {
    const auto res = mackey_iso(lhs, rhs, iso_options());
    ValidationReport r;
    if (res.iso) r = verify_mackey_iso(lhs, rhs, *res.iso);
    const bool ok = res.iso && r.ok();
    if (!ok && r.ok())
      r.fail("no-isomorphism", res.exhaustive ? "none exists" : "none within the search bound");
    if (!ok) {
      write_report("no isomorphism", r);
      return 1;
    }
    if (o_.format == Format::json) {
      Json levels = Json::array();
      for (std::size_t i = 0; i < lhs.levels(); ++i)
        levels.push_back(Json{{"class", i}, {"value", rhs.value(i).describe()}, {"matrix", res.iso->levels[i].matrix()}});
      emit(Json{{"result", found}, {"candidates", res.candidates}, {"levels", levels}});
      return 0;
    }
    if (o_.format == Format::text) out_ << found << " (" << res.candidates << (res.candidates == 1 ? " candidate" : " candidates") << " tried)\n";
    write_values(rhs);
    return 0;
  }

  int em_check(const Json& in) {
    const auto m = checked_mackey(in);
    const auto k = kg_pi0(mackey_to_pcfunctor(m));
    return report_iso("π₀ round-trip isomorphism found", k, m);
  }

  int susp_check(const Json& in) {
    const auto g = group_of(in);
    const GSet x = gset_from_json(g, in.contains("x") ? in.at("x") : Json("point"));
    const auto k = kg_pi0(suspension_pcfunctor(x));
    return report_iso("π₀ suspension isomorphism found", k, burnside_mackey(x));
  }

  int coherence(const Json& in) {
    auto catalog = permcat_catalog();
    if (in.contains("permcats"))
      for (const auto& p : in.at("permcats")) catalog.push_back(permcat_from_json(p));
    Caps caps;
    if (o_.cap) caps.max_search_nodes = o_.cap;
    const auto lines = coherence_suite(catalog, caps);
    std::size_t pass = 0, fail = 0, skip = 0;
    Json arr = Json::array();
    Table t({"status", "check", "subject", "detail"});
    for (const auto& l : lines) {
      std::string status = l.skipped ? "SKIP" : l.report.ok() ? "PASS" : "FAIL";
      (l.skipped ? skip : l.report.ok() ? pass : fail)++;
      std::string detail = l.note;
      if (!l.report.ok()) detail = l.report.failures.front().axiom + ": " + l.report.failures.front().witness;
      t.add({status, l.check, l.subject, detail});
      Json j{{"status", status}, {"check", l.check}, {"subject", l.subject}};
      if (l.skipped) j["note"] = l.note;
      if (!l.report.ok()) j["report"] = report_to_json(l.report);
      arr.push_back(j);
    }
    if (o_.format == Format::json) {
      emit(Json{{"pass", pass}, {"fail", fail}, {"skip", skip}, {"lines", arr}});
    } else {
      t.write(out_, o_.format);
      if (o_.format == Format::text)
        out_ << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    }
    return fail ? 1 : 0;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Burnside category, span calculus, Mackey functors and permutative coherence", "mackey");
  Options o;
  const std::vector<std::string> commands{"marks",           "burnside-ring", "span-compose",
                                          "basis",           "mackey-validate", "em-check",
                                          "susp-check",      "coherence",     "double-cosets"};
  app.add_option("command", o.command, "command to run")->required()->check(CLI::IsMember(commands));
  app.add_option("--input", o.input, "input JSON file");
  app.add_option("--json", o.inline_json, "inline input JSON");
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", o.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--cap", o.cap, "work cap for bounded searches");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return Runner(o, out).run();
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const MackeyAxiomError& e) {
    out << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "resource cap exceeded: " << e.cap() << ": " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    err << "resource cap exceeded: int64: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mackey
