// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned time limit.
//
//   acceptance                 run everything
//   acceptance --criterion 4   run one criterion (1-8 or rank-corrected)

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "mackey/coherence.hpp"
#include "mackey/pcfunctor.hpp"
#include "random_data.hpp"

using namespace mackey;
using mackey::sample::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kSeed = 20240601;

GSet coset(const GroupPtr& g, std::size_t cls) { return orbit_gset(g, g->class_representative(cls)); }

std::size_t class_count(const GroupPtr& g) { return conjugacy_classes_of_subgroups(*g).size(); }

// ---------------------------------------------------------------------------

Outcome span_strictness() {
  Rng rng(kSeed);
  std::size_t triples = 0, unit_checks = 0, unit_fail = 0, assoc_fail = 0, iso_fail = 0;
  std::string first;
  for (auto name : {"C2", "C3", "S3", "D4"}) {
    auto g = named_group(name);
    for (int t = 0; t < 250; ++t, ++triples) {
      const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng);
      const GSet c = sample::random_gset(g, rng), d = sample::random_gset(g, rng);
      const Span s = sample::random_span(a, b, rng);
      const Span u = sample::random_span(b, c, rng);
      const Span v = sample::random_span(c, d, rng);
      for (const Span* x : {&s, &u, &v}) {
        unit_checks += 2;
        unit_fail += !(compose_spans(Span::identity(x->source()), *x) == *x);
        unit_fail += !(compose_spans(*x, Span::identity(x->target())) == *x);
      }
      const Span l = compose_spans(compose_spans(s, u), v);
      const Span r = compose_spans(s, compose_spans(u, v));
      if (!(l == r)) {
        ++assoc_fail;
        if (!span_iso(l, r)) ++iso_fail;
        if (first.empty()) {
          std::ostringstream w;
          w << name << " triple " << t << " (identity legs: s.right=" << s.right().is_identity()
            << " u.left=" << u.left().is_identity() << " u.right=" << u.right().is_identity()
            << " v.left=" << v.left().is_identity() << ")";
          first = w.str();
        }
      }
    }
  }
  std::ostringstream o;
  o << triples << " triples; unit laws " << unit_checks - unit_fail << "/" << unit_checks
    << "; strict associativity " << triples - assoc_fail << "/" << triples << "; failures iso "
    << assoc_fail - iso_fail << "/" << assoc_fail;
  if (!first.empty()) o << "; first failure " << first;
  return {unit_fail == 0 && assoc_fail == 0, o.str()};
}

// ---------------------------------------------------------------------------

const char* kRankGroups[] = {"C2", "C3", "S3", "D4", "Q8"};

Outcome rank_equals_double_cosets() {
  std::size_t pairs = 0, bad = 0;
  std::string first;
  for (auto name : kRankGroups) {
    auto g = named_group(name);
    const std::size_t n = class_count(g);
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k, ++pairs) {
        const std::size_t rank = pi0_enrichment(coset(g, h), coset(g, k)).group.free_rank();
        const std::size_t dc = double_cosets(*g, g->class_representative(h), g->class_representative(k)).size();
        if (rank != dc) {
          ++bad;
          if (first.empty())
            first = std::string(name) + " H" + std::to_string(h) + ",H" + std::to_string(k) + ": rank " +
                    std::to_string(rank) + " vs " + std::to_string(dc) + " double cosets";
        }
      }
  }
  std::string d = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs match";
  if (!first.empty()) d += "; first mismatch " + first;
  return {bad == 0, d};
}

// Independent count: sum over double cosets HgK of the conjugacy classes of subgroups
// of H cap gKg^-1, by brute-force subset enumeration.
Outcome rank_corrected() {
  std::size_t pairs = 0, bad = 0;
  for (auto name : kRankGroups) {
    auto g = named_group(name);
    const std::size_t n = class_count(g);
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k, ++pairs) {
        const Subgroup& H = g->class_representative(h);
        const Subgroup& K = g->class_representative(k);
        std::size_t expected = 0;
        for (const auto& dc : double_cosets(*g, H, K)) {
          const Subgroup kc = g->conjugate(K, dc.representative);
          std::vector<Elem> meet;
          for (Elem x : H.elements)
            if (kc.contains(x)) meet.push_back(x);
          expected += sample::brute_force_subgroup_classes(*g, meet);
        }
        bad += pi0_enrichment(coset(g, h), coset(g, k)).group.free_rank() != expected;
      }
  }
  return {bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs match"};
}

// ---------------------------------------------------------------------------

Outcome marks() {
  std::size_t products = 0, bad = 0, singular = 0;
  for (auto name : kRankGroups) {
    auto g = named_group(name);
    singular += determinant(table_of_marks(g)) == 0;
    const GSet pt = GSet::point(g);
    const std::size_t n = class_count(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++products) {
        const auto x = BurnsideElement::basis_element(pt, pt, i), y = BurnsideElement::basis_element(pt, pt, j);
        const Vec mx = mark_hom(x), my = mark_hom(y), mxy = mark_hom(compose_elements(x, y));
        for (std::size_t k = 0; k < n; ++k)
          if (mxy[k] != mx[k] * my[k]) {
            ++bad;
            break;
          }
      }
  }
  auto c2 = named_group("C2");
  const auto ring = burnside_ring(c2);
  const bool square = ring.products[0][0] == Vec{2, 0};
  std::ostringstream o;
  o << "singular tables " << singular << "; mark_hom multiplicative on " << products - bad << "/" << products
    << " basis products; [C2/e]^2 = (" << ring.products[0][0][0] << "," << ring.products[0][0][1] << ")";
  return {singular == 0 && bad == 0 && square, o.str()};
}

// ---------------------------------------------------------------------------

Outcome coherence() {
  const auto lines = coherence_suite(permcat_catalog());
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::string first_fail, first_skip;
  for (const auto& l : lines) {
    if (l.skipped) {
      ++skipped;
      if (first_skip.empty()) first_skip = l.check + " " + l.subject + " (" + l.note + ")";
    } else if (l.report.ok()) {
      ++passed;
    } else {
      ++failed;
      if (first_fail.empty()) first_fail = l.check + " " + l.subject;
    }
  }
  std::ostringstream o;
  o << passed << " passed, " << failed << " failed, " << skipped << " not run exhaustively (caps)";
  if (!first_fail.empty()) o << "; first failure " << first_fail;
  if (!first_skip.empty()) o << "; first skip " << first_skip;
  return {failed == 0 && skipped == 0, o.str()};
}

// ---------------------------------------------------------------------------

Outcome mackey_emergence() {
  std::size_t checks = 0, bad = 0;
  for (auto name : {"C2", "S3"}) {
    auto g = named_group(name);
    const std::vector<MackeyFunctor> ms = {burnside_mackey(GSet::point(g)), constant_mackey(g, AbelianGroup::free(1))};
    const std::size_t n = class_count(g);
    for (const auto& m : ms)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t e = 0; e < n; ++e) {
            const GSet A = coset(g, a), B = coset(g, b), E = coset(g, e);
            const std::size_t nx = hom_basis(A, B)->size(), ny = hom_basis(B, E)->size();
            for (std::size_t i = 0; i < nx; ++i) {
              const auto x = BurnsideElement::basis_element(A, B, i);
              const auto fx = span_action(m, x);
              for (std::size_t j = 0; j < ny; ++j, ++checks) {
                const auto y = BurnsideElement::basis_element(B, E, j);
                // Contravariant: y after x acts as (action of x) after (action of y).
                if (!span_action(m, compose_elements(y, x)).equals(compose(fx, span_action(m, y)))) ++bad;
              }
            }
          }
  }
  return {bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " basis compositions"};
}

// ---------------------------------------------------------------------------

// Z/4 on the free orbit with the sign action, Z/2 on the fixed orbit.
MackeyFunctor sign_z4() {
  MackeyData d;
  d.group = named_group("C2");
  d.values = {AbelianGroup::cyclic(4), AbelianGroup::cyclic(2)};
  d.restrictions = {{{0, 1, 0}, {{2}}}, {{0, 0, 1}, {{-1}}}};
  d.transfers = {{{0, 1, 0}, {{0}}}};
  return make_mackey(d);
}

bool pi0_iso(const MackeyFunctor& a, const MackeyFunctor& b, std::string& why) {
  const auto r = mackey_iso(a, b);
  if (!r.iso) {
    why = r.exhaustive ? "not isomorphic" : "no isomorphism in the bounded search";
    return false;
  }
  if (!verify_mackey_iso(a, b, *r.iso).ok()) {
    why = "claimed isomorphism failed verification";
    return false;
  }
  return true;
}

Outcome eilenberg_maclane() {
  auto c2 = named_group("C2"), s3 = named_group("S3");
  const std::vector<std::pair<std::string, MackeyFunctor>> battery = {
      {"Burnside C2", burnside_mackey(GSet::point(c2))},
      {"Burnside S3", burnside_mackey(GSet::point(s3))},
      {"constant Z C2", constant_mackey(c2, AbelianGroup::free(1))},
      {"constant Z S3", constant_mackey(s3, AbelianGroup::free(1))},
      {"constant Z/2 C2", constant_mackey(c2, AbelianGroup::cyclic(2))},
      {"constant Z/2 S3", constant_mackey(s3, AbelianGroup::cyclic(2))},
      {"sign Z/4 + constant Z/3 C2", direct_sum(sign_z4(), constant_mackey(c2, AbelianGroup::cyclic(3)))},
      {"constant Z + constant Z/6 S3",
       direct_sum(constant_mackey(s3, AbelianGroup::free(1)), constant_mackey(s3, AbelianGroup::cyclic(6)))},
      {"Burnside S3 mod 4", reduce_mod(burnside_mackey(GSet::point(s3)), 4)},
  };
  std::size_t ok = 0;
  std::string first;
  for (const auto& [name, m] : battery) {
    std::string why;
    if (pi0_iso(kg_pi0(mackey_to_pcfunctor(m)), m, why)) ++ok;
    else if (first.empty()) first = name + ": " + why;
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(battery.size()) + " functors recovered";
  if (!first.empty()) d += "; first failure " + first;
  return {ok == battery.size(), d};
}

// ---------------------------------------------------------------------------

Outcome suspension() {
  std::size_t total = 0, ok = 0;
  std::string first;
  for (auto name : {"C2", "S3"}) {
    auto g = named_group(name);
    const std::size_t n = class_count(g);
    std::vector<std::pair<std::string, GSet>> xs = {{"pt", GSet::point(g)}};
    for (std::size_t h = 0; h < n; ++h) xs.push_back({"G/H" + std::to_string(h), coset(g, h)});
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = h + 1; k < n; ++k)
        xs.push_back({"G/H" + std::to_string(h) + "+G/H" + std::to_string(k), disjoint_union(coset(g, h), coset(g, k))});
    for (const auto& [label, x] : xs) {
      ++total;
      std::string why;
      if (pi0_iso(kg_pi0(suspension_pcfunctor(x)), burnside_mackey(x), why)) ++ok;
      else if (first.empty()) first = std::string(name) + " " + label + ": " + why;
    }
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(total) + " G-sets";
  if (!first.empty()) d += "; first failure " + first;
  return {ok == total, d};
}

// ---------------------------------------------------------------------------

// The span restricted to one orbit of its middle.
Span orbit_piece(const Span& s, const std::vector<Point>& orbit) {
  const GSet& c = s.middle();
  std::vector<Point> local(c.size(), 0);
  for (Point i = 0; i < orbit.size(); ++i) local[orbit[i]] = i;
  const std::size_t n = orbit.size(), order = c.group()->order();
  std::vector<Point> table(order * n);
  for (Elem x = 0; x < order; ++x)
    for (Point i = 0; i < n; ++i) table[x * n + i] = local[c.act(x, orbit[i])];
  const GSet piece = GSet::from_table(c.group(), n, std::move(table));
  std::vector<Point> l(n), r(n);
  for (Point i = 0; i < n; ++i) {
    l[i] = s.left()(orbit[i]);
    r[i] = s.right()(orbit[i]);
  }
  return Span::make(GMap::make(piece, s.source(), l), GMap::make(piece, s.target(), r));
}

// Coefficients of s on the basis, matching each orbit against the representative
// spans with span_iso.
std::optional<Vec> brute_force_class(const Span& s, const HomBasis& basis) {
  std::vector<Span> reps;
  for (const auto& k : basis.keys) reps.push_back(representative_span(s.source(), s.target(), k));
  Vec out(reps.size(), 0);
  for (const auto& orbit : orbits(s.middle())) {
    const Span piece = orbit_piece(s, orbit);
    bool found = false;
    for (std::size_t i = 0; i < reps.size() && !found; ++i)
      if (reps[i].middle().size() == piece.middle().size() && span_iso(piece, reps[i])) {
        ++out[i];
        found = true;
      }
    if (!found) return std::nullopt;
  }
  return out;
}

Outcome change_of_enrichment() {
  Rng rng(kSeed + 8);
  const char* groups[] = {"C2", "C3", "S3", "D4"};
  std::size_t rank_checks = 0, rank_bad = 0;
  for (auto name : groups) {
    auto g = named_group(name);
    for (int t = 0; t < 10; ++t, ++rank_checks) {
      const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng);
      const auto e = pi0_enrichment(a, b);
      rank_bad += !(e.group.torsion().empty() && e.group.free_rank() == sample::brute_force_span_classes(a, b));
    }
  }
  std::size_t tests = 0, bad = 0;
  for (int t = 0; t < 200; ++t, ++tests) {
    auto g = named_group(groups[t % 4]);
    const GSet a = sample::random_gset(g, rng), b = sample::random_gset(g, rng);
    const GSet c = sample::random_gset(g, rng);
    const Span s = sample::random_span(a, b, rng), u = sample::random_span(b, c, rng);
    const Span s2 = sample::relabel_middle(s, rng), u2 = sample::relabel_middle(u, rng);
    const auto ab = pi0_enrichment(a, b), bc = pi0_enrichment(b, c), ac = pi0_enrichment(a, c);
    const auto composite = ac.quotient(compose_spans(s, u));
    const auto replaced = ac.quotient(compose_spans(s2, u2));
    const auto bilinear = compose_elements(bc.quotient(u2), ab.quotient(s2));
    const auto oracle = brute_force_class(compose_spans(s2, u2), *ac.basis);
    const bool ok = composite == replaced && composite == bilinear && oracle &&
                    *oracle == composite.coefficients() && ab.quotient(s) == ab.quotient(s2);
    bad += !ok;
  }
  std::ostringstream o;
  o << "hom ranks " << rank_checks - rank_bad << "/" << rank_checks << " match brute-force span classes; "
    << tests - bad << "/" << tests << " iso-replacement tests descend";
  return {rank_bad == 0 && bad == 0, o.str()};
}

// ---------------------------------------------------------------------------

std::vector<Criterion> criteria() {
  return {
      {"1", "span composition strictly unital and associative as data", 60, span_strictness},
      {"2", "rank Burnside(G/H, G/K) = |H\\G/K|", 30, rank_equals_double_cosets},
      {"rank-corrected", "rank Burnside(G/H, G/K) = sum over HgK of subgroup classes of H^gK", 30, rank_corrected},
      {"3", "table of marks nonsingular, mark_hom multiplicative, [C2/e]^2 = 2[C2/e]", 30, marks},
      {"4", "permutative coherence suite on the built-in catalog", 120, coherence},
      {"5", "span_action contravariantly functorial on basis compositions", 60, mackey_emergence},
      {"6", "kg_pi0(mackey_to_pcfunctor(M)) isomorphic to M", 60, eilenberg_maclane},
      {"7", "kg_pi0(suspension_pcfunctor(X)) isomorphic to burnside_mackey(X)", 60, suspension},
      {"8", "pi0_enrichment hom groups and descent of composition", 30, change_of_enrichment},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::string which;
  app.add_option("--criterion", which, "criterion id (1-8 or rank-corrected); all when omitted");
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (!which.empty() && which != c.id) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs << "s / " << c.limit_seconds << "s";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " | " << o.detail << " | "
              << t.str() << (in_time ? "" : " (time limit exceeded)") << std::endl;
  }
  if (!ran) {
    std::cerr << "unknown criterion: " << which << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
