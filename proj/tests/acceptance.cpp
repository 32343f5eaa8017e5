// Acceptance suite: worked-example reproduction, the seeded lattice sweep,
// oracle equivalences, conversion laws, and the CLI contract. Prints one
// pass/fail line per criterion and exits non-zero if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "uncertain/document.hpp"
#include "uncertain/graphs.hpp"
#include "uncertain/hyper.hpp"
#include "uncertain/lattice.hpp"
#include "uncertain/numeric.hpp"
#include "uncertain/powerset.hpp"
#include "uncertain/rough.hpp"
#include "uncertain/soft.hpp"

using namespace uncertain;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool passed,
            const std::string& detail = "") {
  std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << label;
  if (!passed && !detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!passed) ++g_failures;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run(const std::string& command) {
  int status = std::system((command + " > /dev/null 2> /dev/null").c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

struct Mix {
  std::uint64_t state;
  double next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) / 9007199254740992.0;
  }
  bool coin() { return next() < 0.5; }
  std::size_t index(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(next() * static_cast<double>(n));
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
};

// --- criterion 1: paper examples ------------------------------------------------

void criterion_examples(const fs::path& golden) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    // Fuzzy set with memberships 0.2 / 0.5 / 0.7.
    Instance fuzzy = parse_document_text(read_file(golden / "fuzzy_example.json"));
    const auto& fs_set = std::get<GradedSet>(fuzzy.payload);
    ok &= default_registry().validate(fuzzy).ok();
    ok &= approx_eq(fs_set.grades.at("x1")[0], 0.2);
    ok &= approx_eq(fs_set.grades.at("x2")[0], 0.5);
    ok &= approx_eq(fs_set.grades.at("x3")[0], 0.7);

    // Hyperfuzzy set with three membership candidates per element.
    Instance hyper = parse_document_text(read_file(golden / "hyperfuzzy_example.json"));
    const auto& hset = std::get<HyperGradedSet>(hyper.payload);
    ok &= default_registry().validate(hyper).ok();
    ok &= hset.values.at("x1") == GradePointSet{{0.1}, {0.2}, {0.3}};
    ok &= hset.values.at("x2") == GradePointSet{{0.4}, {0.5}, {0.6}};
    ok &= hset.values.at("x3") == GradePointSet{{0.6}, {0.7}, {0.8}};

    // Superhyperfuzzy set over all 7 non-empty subsets of a 3-element universe.
    Instance super =
        parse_document_text(read_file(golden / "superhyperfuzzy_example.json"));
    const auto& sset = std::get<SuperHyperGradedSet>(super.payload);
    ok &= default_registry().validate(super).ok();
    ok &= validate_hyper(sset, /*total=*/true).ok();
    ok &= sset.values.size() == 7;
    ok &= sset.values.at("{x1,x2}") == GradePointSet{{0.3}, {0.5}};
    ok &= sset.values.at("{x1,x2,x3}") == GradePointSet{{0.6}, {0.8}};

    // Weighted triangle lifts to singleton hyperweights and back.
    Instance weighted =
        parse_document_text(read_file(golden / "weighted_example.json"));
    const auto& wg = std::get<WeightedGraph>(weighted.payload);
    ok &= default_registry().validate(weighted).ok();
    ok &= approx_eq(wg.weights.at(Edge("v1", "v2")), 5.0);
    ok &= approx_eq(wg.weights.at(Edge("v2", "v3")), 3.0);
    ok &= approx_eq(wg.weights.at(Edge("v1", "v3")), 7.0);
    HyperWeightedGraph lifted = annotated_lift(wg);
    ok &= validate_annotated(lifted).ok();
    ok &= annotated_reduce(lifted).weights == wg.weights;

    // Hyperweighted path with W(e1) = {5,7}, W(e2) = {3,4,6}.
    Instance hyperw =
        parse_document_text(read_file(golden / "hyperweighted_example.json"));
    const auto& hwg = std::get<HyperWeightedGraph>(hyperw.payload);
    ok &= default_registry().validate(hyperw).ok();
    ok &= hwg.weights.at(Edge("v1", "v2")) == std::vector<double>{5, 7};
    ok &= hwg.weights.at(Edge("v2", "v3")) == std::vector<double>{3, 4, 6};

    // Hyperlabeling with multi-label vertices and edges.
    Instance labels =
        parse_document_text(read_file(golden / "hyperlabeling_example.json"));
    const auto& hl = std::get<HyperLabeledGraph>(labels.payload);
    ok &= default_registry().validate(labels).ok();
    ok &= hl.vertex_labels.at("v1") == std::vector<std::string>{"blue", "red"};
    ok &= hl.vertex_labels.at("v2") == std::vector<std::string>{"blue"};
    ok &= hl.edge_labels.at(Edge("v2", "v3")) == std::vector<std::string>{"dashed"};
  } catch (const std::exception& ex) {
    ok = false;
    detail = ex.what();
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (elapsed >= 1000) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " ms";
  }
  report(1, "paper examples reproduce exactly", ok, detail);
}

// --- criterion 2: lattice sweep --------------------------------------------------

void criterion_lattice() {
  auto start = std::chrono::steady_clock::now();
  LatticeReport result = default_registry().verify(200, 20260808);
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  bool ok = result.all_passed() && result.edges_tested() >= 30 && elapsed < 60;
  std::string detail;
  if (!result.all_passed()) {
    for (const auto& verdict : result.verdicts)
      if (verdict.failures > 0) {
        detail = verdict.edge_id + ": " + verdict.detail +
                 " counterexample: " + verdict.counterexample;
        break;
      }
  } else if (result.edges_tested() < 30) {
    detail = "only " + std::to_string(result.edges_tested()) + " edges tested";
  } else if (elapsed >= 60) {
    detail = "took " + std::to_string(elapsed) + " s";
  }
  report(2,
         "verify_lattice: " + std::to_string(result.edges_tested()) +
             " edges x 200 seeded samples, zero failures",
         ok, detail);
}

// --- criterion 3: rough oracles --------------------------------------------------

void criterion_rough() {
  Mix mix{0xA5A5};
  bool ok = true;
  std::string detail;

  auto oracle = [](const Partition& p, const ElementSet& target) {
    auto same_class = [&](const Element& a, const Element& b) {
      for (const auto& block : p.blocks)
        if (block.count(a) && block.count(b)) return true;
      return false;
    };
    std::pair<ElementSet, ElementSet> out;
    for (const auto& x : p.universe) {
      bool all_in = true, some_in = false;
      for (const auto& y : p.universe) {
        if (!same_class(x, y)) continue;
        if (target.count(y)) some_in = true;
        else all_in = false;
      }
      if (all_in) out.first.insert(x);
      if (some_in) out.second.insert(x);
    }
    return out;
  };

  for (int i = 0; i < 1000 && ok; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(8);
    for (std::size_t k = 0; k < n; ++k) u.add("v" + std::to_string(k));
    Partition p;
    p.universe = u;
    std::size_t blocks = 1 + mix.index(n);
    p.blocks.assign(blocks, {});
    for (const auto& e : u) p.blocks[mix.index(blocks)].insert(e);
    std::erase_if(p.blocks, [](const ElementSet& b) { return b.empty(); });
    ElementSet target;
    for (const auto& e : u)
      if (mix.coin()) target.insert(e);

    RoughPair pair = rough_approx(p, target);
    auto [lower, upper] = oracle(p, target);
    ok &= pair.lower == lower && pair.upper == upper;
    ok &= is_subset(pair.lower, target) && is_subset(target, pair.upper);
    for (const auto& block : p.blocks) {
      ok &= is_subset(block, pair.lower) || set_intersection(block, pair.lower).empty();
      ok &= is_subset(block, pair.upper) || set_intersection(block, pair.upper).empty();
    }
    if (!ok) detail = "classical oracle mismatch at sample " + std::to_string(i);
  }

  for (int i = 0; i < 1000 && ok; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(8);
    for (std::size_t k = 0; k < n; ++k) u.add("v" + std::to_string(k));
    SoftSet s;
    s.universe = u;
    std::size_t params = 1 + mix.index(4);
    ElementSet support;
    for (std::size_t pi = 1; pi <= params; ++pi) {
      ElementSet value;
      for (const auto& e : u)
        if (mix.coin()) value.insert(e);
      support = set_union(support, value);
      s.mapping["e" + std::to_string(pi)] = value;
    }
    ElementSet target;
    for (const auto& e : u)
      if (mix.coin()) target.insert(e);
    RoughPair pair = soft_rough_approx(s, target);
    ok &= is_subset(pair.lower, target);
    ok &= is_subset(pair.lower, pair.upper);
    ok &= is_subset(pair.upper, support);
    if (!ok) detail = "soft rough invariant broke at sample " + std::to_string(i);
  }

  for (int i = 0; i < 1000 && ok; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(8);
    for (std::size_t k = 0; k < n; ++k) u.add("v" + std::to_string(k));
    HyperSoftSet h;
    h.universe = u;
    h.domains = {{"T1", {"a1", "a2"}}, {"T2", {"b1"}}};
    for (const auto& a : h.domains[0].values) {
      ElementSet value;
      for (const auto& e : u)
        if (mix.coin()) value.insert(e);
      h.mapping[{a, "b1"}] = value;
    }
    Partition p;
    p.universe = u;
    std::size_t blocks = 1 + mix.index(n);
    p.blocks.assign(blocks, {});
    for (const auto& e : u) p.blocks[mix.index(blocks)].insert(e);
    std::erase_if(p.blocks, [](const ElementSet& b) { return b.empty(); });
    auto per_key = hyperrough(h, p);
    for (const auto& [key, pair] : per_key) {
      RoughPair expected = rough_approx(p, h.mapping.at(key));
      ok &= pair.lower == expected.lower && pair.upper == expected.upper;
    }
    if (!ok) detail = "hyperrough key mismatch at sample " + std::to_string(i);
  }
  report(3, "rough approximations match the brute-force oracles", ok, detail);
}

// --- criterion 4: graph reduction formulas ---------------------------------------

void criterion_reductions() {
  Mix mix{0xBEEF};
  bool ok = true;
  std::string detail;

  auto random_graph = [&mix](GradeKind kind) {
    GradedGraph g;
    g.kind = kind;
    g.ranges = standard_ranges(kind);
    std::size_t n = 2 + mix.index(5);  // <= 6 vertices
    for (std::size_t i = 0; i < n; ++i) g.base.vertices.add("v" + std::to_string(i));
    const auto& vs = g.base.vertices.elements();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (mix.coin()) g.base.edges.insert(Edge(vs[i], vs[j]));
    std::size_t a = arity(kind);
    for (const auto& v : vs) {
      std::vector<double> comps;
      for (std::size_t c = 0; c < a; ++c) comps.push_back(mix.next());
      g.vertex_grades[v] = comps;
    }
    for (const auto& e : g.base.edges) {
      const auto& gu = g.vertex_grades[e.u];
      const auto& gv = g.vertex_grades[e.v];
      std::vector<double> comps(a);
      for (std::size_t c = 0; c < a; ++c) {
        bool min_rule = c < 2;  // T, C
        bool max_rule_le = kind == GradeKind::Quadripartitioned && c >= 2;
        if (min_rule)
          comps[c] = mix.next() * std::min(gu[c], gv[c]);
        else if (max_rule_le)
          comps[c] = mix.next() * std::max(gu[c], gv[c]);
        else {
          double lo = std::max(gu[c], gv[c]);
          comps[c] = lo + mix.next() * (1.0 - lo);
        }
      }
      g.edge_grades[e] = comps;
    }
    return g;
  };

  for (int i = 0; i < 500 && ok; ++i) {
    GradedGraph quad = random_graph(GradeKind::Quadripartitioned);
    if (!validate_graded_graph(quad).ok()) {
      ok = false;
      detail = "generator produced an invalid quad graph";
      break;
    }
    GradedGraph neutro = reduce_graph(quad, GradeKind::Neutrosophic);
    if (!validate_graded_graph(neutro).ok()) {
      ok = false;
      detail = "quad->neutro output failed validation at sample " + std::to_string(i);
    }

    GradedGraph penta = random_graph(GradeKind::Pentapartitioned);
    if (!validate_graded_graph(penta).ok()) {
      ok = false;
      detail = "generator produced an invalid penta graph";
      break;
    }
    GradedGraph quad2 = reduce_graph(penta, GradeKind::Quadripartitioned);
    if (!validate_graded_graph(quad2).ok()) {
      ok = false;
      detail = "penta->quad output failed validation at sample " + std::to_string(i);
    }
    for (const auto& [v, comps] : penta.vertex_grades)
      ok &= approx_eq(quad2.vertex_grades.at(v)[2], comps[3] + comps[2]);
  }

  // Hand-checked fixed cases.
  GradeTuple quad = GradeTuple::make(GradeKind::Quadripartitioned, {0.6, 0.2, 0.3, 0.1});
  GradeTuple neutro = reduce_grade(quad, GradeKind::Neutrosophic);
  ok &= approx_eq(neutro.components[0], 0.4) && approx_eq(neutro.components[1], 0.3) &&
        approx_eq(neutro.components[2], 0.1);
  GradeTuple penta =
      GradeTuple::make(GradeKind::Pentapartitioned, {0.4, 0.1, 0.2, 0.1, 0.1});
  GradeTuple quadr = reduce_grade(penta, GradeKind::Quadripartitioned);
  ok &= approx_eq(quadr.components[2], 0.1 + 0.2);
  report(4, "quad->neutro and penta->quad graph reductions validate", ok, detail);
}

// --- criterion 5: regime algebra -------------------------------------------------

void criterion_regimes() {
  Mix mix{0xC0DE};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 500 && ok; ++i) {
    // Off at the set level: over witnesses and under witnesses spread over
    // distinct elements, so each half fits its one-sided range.
    GradedSet s;
    s.kind = GradeKind::Neutrosophic;
    GradeRange off{-1.0, 2.0};
    s.ranges = {off, off, off};
    std::size_t n = 2 + mix.index(5);
    for (std::size_t k = 0; k < n; ++k) {
      Element e = "x" + std::to_string(k);
      s.universe.add(e);
      std::vector<double> comps;
      switch (mix.index(3)) {
        case 0:  // over-leaning element
          for (int c = 0; c < 3; ++c) comps.push_back(mix.uniform(0.0, 2.0));
          break;
        case 1:  // under-leaning element
          for (int c = 0; c < 3; ++c) comps.push_back(mix.uniform(-1.0, 1.0));
          break;
        default:  // standard element
          for (int c = 0; c < 3; ++c) comps.push_back(mix.next());
          break;
      }
      s.grades[e] = comps;
    }
    // Force the off regime with one witness on each side.
    s.grades["x0"] = {mix.uniform(1.001, 1.999), mix.next(), mix.next()};
    s.grades["x1"] = {mix.next(), mix.next(), mix.uniform(-0.999, -0.001)};

    if (classify_regime(s) != Regime::Off) {
      ok = false;
      detail = "forced off set misclassified";
      break;
    }
    OffsetSplit split = split_offset(s);
    ok &= validate_graded_set(split.over_part).ok();
    ok &= validate_graded_set(split.under_part).ok();

    ElementSet violating, covered;
    for (const auto& [e, comps] : s.grades)
      for (double c : comps)
        if (c > 1.0 + epsilon() || c < -epsilon()) violating.insert(e);
    for (const auto& e : split.over_part.universe) covered.insert(e);
    for (const auto& e : split.under_part.universe) covered.insert(e);
    ok &= covered == violating;
    if (!ok) detail = "split halves do not cover the boundary violators";
  }
  // Standard sets classify Standard.
  for (int i = 0; i < 100 && ok; ++i) {
    GradedSet s;
    s.kind = GradeKind::Fuzzy;
    s.ranges = standard_ranges(GradeKind::Fuzzy);
    for (std::size_t k = 0; k < 3; ++k) {
      Element e = "x" + std::to_string(k);
      s.universe.add(e);
      s.grades[e] = {mix.next()};
    }
    if (classify_regime(s) != Regime::Standard) {
      ok = false;
      detail = "standard set misclassified";
    }
  }
  report(5, "off-regime splits cover exactly the boundary violators", ok, detail);
}

// --- criterion 6: powerset law ---------------------------------------------------

void criterion_powerset() {
  bool ok = true;
  std::string detail;
  for (std::size_t base = 1; base <= 3 && ok; ++base) {
    Universe u;
    for (std::size_t i = 0; i < base; ++i) u.add("e" + std::to_string(i));
    std::size_t prev = iterated_powerset(u, 0).elements.size();
    for (std::size_t n = 1; n <= 2; ++n) {
      std::size_t cur = iterated_powerset(u, n).elements.size();
      if (cur != (std::size_t{1} << prev)) {
        ok = false;
        detail = "cardinality law broke at base " + std::to_string(base);
      }
      prev = cur;
    }
  }
  Universe abc({"a", "b", "c"});
  try {
    iterated_powerset(abc, 3);
    ok = false;
    detail = "level-3 tower over 3 atoms should exceed the cap";
  } catch (const CapExceededError& ex) {
    if (ex.predicted != "2^256") {
      ok = false;
      detail = "predicted cardinality was " + ex.predicted;
    }
  }
  report(6, "powerset cardinality law and cap behaviour", ok, detail);
}

// --- criterion 7: soft-family equivalences ---------------------------------------

void criterion_soft() {
  Mix mix{0xFEED};
  bool ok = true;
  std::string detail;

  for (int i = 0; i < 100 && ok; ++i) {
    TreeSoftSet t;
    t.universe = Universe({"u1", "u2", "u3"});
    std::vector<std::string> leaves;
    std::size_t families = 1 + mix.index(2);
    for (std::size_t f = 1; f <= families; ++f) {
      std::string root = "A" + std::to_string(f);
      t.tree.add_root_child(root);
      std::size_t children = 1 + mix.index(3);
      for (std::size_t c = 1; c <= children; ++c) {
        std::string leaf = root + "c" + std::to_string(c);
        t.tree.add_child(root, leaf);
        leaves.push_back(leaf);
      }
    }
    std::size_t keys = 1 + mix.index(3);
    for (std::size_t k = 0; k < keys; ++k) {
      NodeKey key;
      for (const auto& leaf : leaves)
        if (mix.coin()) key.insert(leaf);
      if (key.empty()) key.insert(leaves[mix.index(leaves.size())]);
      ElementSet value;
      for (const auto& e : t.universe)
        if (mix.coin()) value.insert(e);
      t.mapping[key] = value;
    }
    MultiSoftSet m = treesoft_to_multisoft(t);
    TreeSoftSet back = multisoft_to_treesoft(m);
    if (back.mapping != t.mapping ||
        treesoft_to_multisoft(back).mapping != m.mapping) {
      ok = false;
      detail = "treesoft depth-2 round trip failed at sample " + std::to_string(i);
    }
  }

  for (int i = 0; i < 100 && ok; ++i) {
    SoftGraph msg;
    msg.base.vertices = Universe({"u1", "u2", "u3", "u4"});
    msg.base.edges = {Edge("u1", "u2"), Edge("u2", "u3"), Edge("u3", "u4")};
    std::vector<Parameter> pool = {"p1", "p2", "p3", "p4", "p5", "p6"};
    std::size_t keys = 1 + mix.index(4);
    for (std::size_t k = 0; k < keys; ++k) {
      ParameterSet key;
      for (const auto& p : pool)
        if (mix.coin()) key.insert(p);
      if (key.empty()) key.insert(pool[mix.index(pool.size())]);
      ElementSet fv;
      for (const auto& v : msg.base.vertices)
        if (mix.coin()) fv.insert(v);
      EdgeSet ke;
      for (const auto& e : msg.base.edges)
        if (fv.count(e.u) && fv.count(e.v) && mix.coin()) ke.insert(e);
      msg.mapping[key] = {fv, ke};
    }
    SoftGraph soft = multisoft_graph_to_soft(msg);
    if (!soft_graph_validate(soft).ok()) {
      ok = false;
      detail = "multisoft->soft output failed the subgraph condition";
      break;
    }
    for (const auto& [key, value] : soft.mapping) {
      ElementSet expect_v;
      EdgeSet expect_e;
      for (const auto& [other, ov] : msg.mapping) {
        if (!is_subset(other, key)) continue;
        expect_v = set_union(expect_v, ov.first);
        for (const auto& e : ov.second) expect_e.insert(e);
      }
      if (value.first != expect_v || value.second != expect_e) {
        ok = false;
        detail = "multisoft union oracle mismatch";
      }
    }
  }

  for (int i = 0; i < 100 && ok; ++i) {
    HyperSoftSet h;
    h.universe = Universe({"a", "b", "c"});
    h.domains = {{"T1", {"v1", "v2", "v3"}}};
    for (const auto& v : h.domains[0].values) {
      if (mix.coin()) continue;
      ElementSet value;
      for (const auto& e : h.universe)
        if (mix.coin()) value.insert(e);
      h.mapping[{v}] = value;
    }
    SoftSet s = hypersoft_as_soft(h);
    ok &= is_null(h) == is_null(s);
    ok &= is_full(h) == is_full(s);
    ok &= s.mapping.size() == h.mapping.size();
    for (const auto& [key, value] : h.mapping) ok &= s.mapping.at(key.front()) == value;
    if (!ok) detail = "hypersoft n=1 disagrees with its soft reinterpretation";
  }
  report(7, "soft-family equivalences (treesoft, multisoft graph, hypersoft n=1)",
         ok, detail);
}

// --- criterion 8: hyper conversions ----------------------------------------------

void criterion_hyper() {
  Mix mix{0xACED};
  bool ok = true;
  std::string detail;

  for (int i = 0; i < 1000 && ok; ++i) {
    HyperGradedSet h;
    h.universe = Universe({"x"});
    h.kind = HyperKind::HyperNeutrosophic;
    h.values["x"] = {{mix.next(), mix.next(), mix.next()}};
    HyperGradedSet out = hyperneutro_to_hyperfuzzy(h);
    for (const auto& point : out.values.at("x"))
      if (point[0] < -epsilon() || point[0] > 1.0 + epsilon()) {
        ok = false;
        detail = "hyperfuzzy image escaped [0,1]";
      }
  }

  for (int i = 0; i < 500 && ok; ++i) {
    SuperHyperGradedSet s;
    s.universe = Universe({"x"});
    s.kind = SuperHyperKind::SuperHyperNeutrosophic;
    GradePointSet points;
    std::size_t count = 1 + mix.index(3);
    std::size_t degenerate = 0;
    for (std::size_t k = 0; k < count; ++k) {
      if (mix.next() < 0.2) {
        points.push_back({0.0, mix.next(), 0.0});
        ++degenerate;
      } else {
        points.push_back({0.1 + 0.9 * mix.next(), mix.next(), mix.next()});
      }
    }
    s.values["{x}"] = points;
    if (degenerate == count) {
      try {
        superneutro_to_supervague(s);
        ok = false;
        detail = "all-degenerate key should be an error";
      } catch (const EmptyAfterNormalizationError&) {
      }
      continue;
    }
    SuperHyperGradedSet v = superneutro_to_supervague(s);
    if (v.values.at("{x}").size() > count - degenerate) {
      ok = false;
      detail = "normalization kept a dropped triple";
    }
    for (const auto& pair : v.values.at("{x}"))
      if (!approx_eq(pair[0] + pair[1], 1.0)) {
        ok = false;
        detail = "normalized pair does not sum to 1";
      }
  }

  for (int i = 0; i < 200 && ok; ++i) {
    HyperGradedSet h;
    std::size_t n = 1 + mix.index(4);
    for (std::size_t k = 0; k < n; ++k) h.universe.add("x" + std::to_string(k));
    h.kind = HyperKind::HyperFuzzy;
    for (const auto& e : h.universe) {
      GradePointSet points;
      std::size_t count = 1 + mix.index(3);
      for (std::size_t k = 0; k < count; ++k) points.push_back({mix.next()});
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      h.values[e] = points;
    }
    if (restrict_to_singletons(lift_pointwise(h)).values != h.values) {
      ok = false;
      detail = "lift then singleton restriction is not the identity";
    }
  }
  report(8, "hyper conversions (averaging, normalization, pointwise lift)", ok,
         detail);
}

// --- criterion 9: CLI contract ---------------------------------------------------

void criterion_cli(const std::string& uklat, const fs::path& golden) {
  bool ok = true;
  std::string detail;

  // Every golden document validates (exit 0) and re-emits byte-stably.
  for (const auto& entry : fs::directory_iterator(golden)) {
    if (entry.path().extension() != ".json") continue;
    int code = run(uklat + " validate " + entry.path().string());
    if (code != 0) {
      ok = false;
      detail = entry.path().filename().string() + " exited " + std::to_string(code);
    }
    try {
      Instance inst = parse_document_text(read_file(entry.path()));
      std::string first = emit_document(inst);
      std::string second = emit_document(parse_document_text(first));
      if (first != second) {
        ok = false;
        detail = entry.path().filename().string() + " is not emit-stable";
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
  }

  // Documented failure exit codes.
  if (run(uklat + " validate " + (golden / "invalid" / "vague_overflow.json").string()) != 1) {
    ok = false;
    detail = "invalid document should exit 1";
  }
  if (run(uklat + " validate " + (golden / "invalid" / "malformed.json").string()) != 2) {
    ok = false;
    detail = "malformed document should exit 2";
  }
  if (run(uklat + " convert " + (golden / "fuzzy_example.json").string() +
          " --to neutrosophic") != 0) {
    ok = false;
    detail = "fuzzy -> neutrosophic conversion should exit 0";
  }
  if (run(uklat + " convert " + (golden / "fuzzy_example.json").string() +
          " --to crisp") != 3) {
    ok = false;
    detail = "unsupported conversion should exit 3";
  }

  // Powerset listing: 2^(2^2) lines for a 2-atom universe at level 2.
  fs::path tmp = fs::temp_directory_path() / "uklat_powerset.txt";
  int code = std::system(
      (uklat + " powerset --universe a,b --n 2 > " + tmp.string() + " 2>/dev/null")
          .c_str());
  if (WEXITSTATUS(code) != 0) {
    ok = false;
    detail = "powerset command failed";
  } else {
    std::ifstream in(tmp);
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    if (lines != 16) {
      ok = false;
      detail = "powerset listed " + std::to_string(lines) + " lines, wanted 16";
    }
  }
  fs::remove(tmp);

  report(9, "CLI exit codes and byte-stable emission", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <uklat-binary> <golden-dir>\n";
    return 2;
  }
  const std::string uklat = argv[1];
  const fs::path golden = argv[2];

  criterion_examples(golden);
  criterion_lattice();
  criterion_rough();
  criterion_reductions();
  criterion_regimes();
  criterion_powerset();
  criterion_soft();
  criterion_hyper();
  criterion_cli(uklat, golden);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
