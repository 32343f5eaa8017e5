#include <doctest.h>

#include <cstdint>

#include "uncertain/graphs.hpp"
#include "uncertain/rough.hpp"

using namespace uncertain;

namespace {

struct Mix {
  std::uint64_t state;
  double next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) / 9007199254740992.0;
  }
  bool coin() { return next() < 0.5; }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next() * static_cast<double>(n));
  }
};

Partition random_partition(Mix& mix, const Universe& u) {
  Partition p;
  p.universe = u;
  std::size_t blocks = 1 + mix.index(u.size());
  p.blocks.assign(blocks, {});
  for (const auto& e : u) p.blocks[mix.index(blocks)].insert(e);
  p.blocks.erase(std::remove_if(p.blocks.begin(), p.blocks.end(),
                                [](const ElementSet& b) { return b.empty(); }),
                 p.blocks.end());
  return p;
}

ElementSet random_subset(Mix& mix, const Universe& u) {
  ElementSet out;
  for (const auto& e : u)
    if (mix.coin()) out.insert(e);
  return out;
}

// Independent oracle: quantifier scan over an explicit same-class relation.
std::pair<ElementSet, ElementSet> oracle_rough(const Partition& p,
                                               const ElementSet& target) {
  auto same_class = [&](const Element& a, const Element& b) {
    for (const auto& block : p.blocks)
      if (block.count(a) && block.count(b)) return true;
    return false;
  };
  ElementSet lower, upper;
  for (const auto& x : p.universe) {
    bool all_in = true, some_in = false;
    for (const auto& y : p.universe) {
      if (!same_class(x, y)) continue;
      if (target.count(y))
        some_in = true;
      else
        all_in = false;
    }
    if (all_in) lower.insert(x);
    if (some_in) upper.insert(x);
  }
  return {lower, upper};
}

}  // namespace

TEST_CASE("rough_approx on the worked block example") {
  Universe u({"u1", "u2", "u3", "u4", "u5", "u6"});
  Partition p;
  p.universe = u;
  p.blocks = {{"u1", "u2"}, {"u3", "u4"}, {"u5", "u6"}};
  RoughPair pair = rough_approx(p, {"u1", "u2", "u3"});
  CHECK(pair.lower == ElementSet{"u1", "u2"});
  CHECK(pair.upper == ElementSet{"u1", "u2", "u3", "u4"});

  SUBCASE("singleton blocks collapse to the target") {
    Partition singles = Partition::singletons(u);
    RoughPair exact = rough_approx(singles, {"u1", "u3"});
    CHECK(exact.lower == ElementSet{"u1", "u3"});
    CHECK(exact.upper == exact.lower);
  }
  SUBCASE("target = universe") {
    RoughPair full = rough_approx(p, u.as_set());
    CHECK(full.lower == u.as_set());
    CHECK(full.upper == u.as_set());
  }
  SUBCASE("target must be inside the universe") {
    CHECK_THROWS_AS(rough_approx(p, {"zz"}), NotASubsetError);
  }
}

TEST_CASE("rough_approx matches the brute-force oracle") {
  Mix mix{8};
  for (int i = 0; i < 500; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(8);
    for (std::size_t k = 0; k < n; ++k) u.add("v" + std::to_string(k));
    Partition p = random_partition(mix, u);
    ElementSet target = random_subset(mix, u);
    RoughPair got = rough_approx(p, target);
    auto [lower, upper] = oracle_rough(p, target);
    CHECK(got.lower == lower);
    CHECK(got.upper == upper);
    CHECK(is_subset(got.lower, target));
    CHECK(is_subset(target, got.upper));
  }
}

TEST_CASE("rough approximations are monotone and block-aligned") {
  Mix mix{13};
  for (int i = 0; i < 200; ++i) {
    Universe u;
    for (std::size_t k = 0; k < 6; ++k) u.add("v" + std::to_string(k));
    Partition p = random_partition(mix, u);
    ElementSet x = random_subset(mix, u);
    ElementSet y = set_union(x, random_subset(mix, u));
    RoughPair px = rough_approx(p, x);
    RoughPair py = rough_approx(p, y);
    CHECK(is_subset(px.lower, py.lower));
    CHECK(is_subset(px.upper, py.upper));
    // Lower and upper are unions of whole blocks.
    for (const auto& block : p.blocks) {
      CHECK((is_subset(block, px.lower) ||
             set_intersection(block, px.lower).empty()));
      CHECK((is_subset(block, px.upper) ||
             set_intersection(block, px.upper).empty()));
    }
  }
}

TEST_CASE("soft_rough_approx scans parameter images") {
  SoftSet s;
  s.universe = Universe({"a", "b", "c", "d"});
  s.mapping["e1"] = {"a", "b"};
  s.mapping["e2"] = {"c"};
  RoughPair pair = soft_rough_approx(s, {"a", "b", "d"});
  CHECK(pair.lower == ElementSet{"a", "b"});
  CHECK(pair.upper == ElementSet{"a", "b"});

  SUBCASE("full soft set with F(e) = U") {
    SoftSet full;
    full.universe = s.universe;
    full.mapping["e"] = full.universe.as_set();
    RoughPair p = soft_rough_approx(full, full.universe.as_set());
    CHECK(p.lower == full.universe.as_set());
    CHECK(p.upper == full.universe.as_set());
  }
  SUBCASE("null soft set") {
    SoftSet nul;
    nul.universe = s.universe;
    nul.mapping["e"] = {};
    RoughPair p = soft_rough_approx(nul, {"a"});
    CHECK(p.lower.empty());
    CHECK(p.upper.empty());
  }
}

TEST_CASE("soft rough invariants hold on random instances") {
  Mix mix{19};
  for (int i = 0; i < 300; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(8);
    for (std::size_t k = 0; k < n; ++k) u.add("v" + std::to_string(k));
    SoftSet s;
    s.universe = u;
    std::size_t params = 1 + mix.index(4);
    ElementSet support;
    for (std::size_t p = 1; p <= params; ++p) {
      ElementSet value = random_subset(mix, u);
      support = set_union(support, value);
      s.mapping["e" + std::to_string(p)] = value;
    }
    ElementSet target = random_subset(mix, u);
    RoughPair pair = soft_rough_approx(s, target);
    CHECK(is_subset(pair.lower, target));
    CHECK(is_subset(pair.lower, pair.upper));
    CHECK(is_subset(pair.upper, support));
  }
}

TEST_CASE("treesoft rough coincides with soft rough at depth 1") {
  Mix mix{29};
  for (int i = 0; i < 100; ++i) {
    Universe u({"a", "b", "c", "d"});
    SoftSet s;
    s.universe = u;
    TreeSoftSet t;
    t.universe = u;
    std::size_t params = 1 + mix.index(3);
    for (std::size_t p = 1; p <= params; ++p) {
      std::string name = "e" + std::to_string(p);
      ElementSet value = random_subset(mix, u);
      s.mapping[name] = value;
      t.tree.add_root_child(name);
      t.mapping[NodeKey{name}] = value;
    }
    ElementSet target = random_subset(mix, u);
    RoughPair soft_pair = soft_rough_approx(s, target);
    TreesoftRoughResult tree_result = treesoft_rough_approx(t, target);
    CHECK(tree_result.pair.lower == soft_pair.lower);
    CHECK(tree_result.pair.upper == soft_pair.upper);
  }
}

TEST_CASE("treesoft regions partition H") {
  TreeSoftSet t;
  t.universe = Universe({"a", "b", "c"});
  t.tree.add_root_child("A1");
  t.mapping[NodeKey{"A1"}] = {"a", "b"};
  TreesoftRoughResult result = treesoft_rough_approx(t, {"a", "b"});
  CHECK(result.regions.pos == ElementSet{"a", "b"});
  CHECK(result.regions.neg == ElementSet{"c"});
  CHECK(result.regions.bnd.empty());
  CHECK(result.regions.definable);

  SUBCASE("undefined-everywhere mapping") {
    TreeSoftSet nul;
    nul.universe = t.universe;
    nul.tree.add_root_child("A1");
    nul.mapping[NodeKey{"A1"}] = {};
    TreesoftRoughResult r = treesoft_rough_approx(nul, {"a"});
    CHECK(r.regions.pos.empty());
    CHECK(r.regions.neg == nul.universe.as_set());
    CHECK(r.regions.bnd.empty());
  }
  SUBCASE("regions are pairwise disjoint and exhaustive") {
    Mix mix{37};
    for (int i = 0; i < 100; ++i) {
      TreeSoftSet rt;
      rt.universe = Universe({"a", "b", "c", "d", "e"});
      rt.tree.add_root_child("A1");
      rt.tree.add_child("A1", "n1");
      rt.mapping[NodeKey{"A1"}] = random_subset(mix, rt.universe);
      rt.mapping[NodeKey{"n1"}] = random_subset(mix, rt.universe);
      ElementSet target = random_subset(mix, rt.universe);
      Regions regions = treesoft_rough_approx(rt, target).regions;
      ElementSet all = set_union(set_union(regions.pos, regions.neg), regions.bnd);
      CHECK(all == rt.universe.as_set());
      CHECK(set_intersection(regions.pos, regions.neg).empty());
      CHECK(set_intersection(regions.pos, regions.bnd).empty());
      CHECK(set_intersection(regions.neg, regions.bnd).empty());
    }
  }
}

TEST_CASE("multirough computes one pair per relation") {
  Universe u({"a", "b", "c", "d"});
  Partition p1;
  p1.universe = u;
  p1.blocks = {{"a", "b"}, {"c", "d"}};
  Partition p2 = Partition::singletons(u);
  ElementSet target{"a", "c"};

  auto pairs = multirough({p1, p1}, target);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].lower == pairs[1].lower);
  CHECK(pairs[0].upper == pairs[1].upper);

  auto exact = multirough({p2, p2}, target);
  for (const auto& pair : exact) {
    CHECK(pair.lower == target);
    CHECK(pair.upper == target);
  }

  auto mixed = multirough({p1, p2}, target);
  CHECK(mixed[0].lower == rough_approx(p1, target).lower);
  CHECK(mixed[1].lower == rough_approx(p2, target).lower);

  Partition other;
  other.universe = Universe({"a"});
  other.blocks = {{"a"}};
  CHECK_THROWS_AS(multirough({p1, other}, target), UniverseMismatchError);
}

TEST_CASE("treerough generalizes multirough at depth 2") {
  Universe u({"a", "b", "c", "d"});
  Mix mix{43};
  AttributeTree tree;
  tree.add_root_child("A1");
  tree.add_child("A1", "s1");
  tree.add_child("A1", "s2");
  std::map<std::string, Partition> rels;
  rels["A1"] = random_partition(mix, u);
  rels["s1"] = random_partition(mix, u);
  rels["s2"] = random_partition(mix, u);
  ElementSet target = random_subset(mix, u);

  auto per_node = treerough(tree, rels, target);
  auto level2 = multirough({rels["s1"], rels["s2"]}, target);
  CHECK(per_node.at("s1").lower == level2[0].lower);
  CHECK(per_node.at("s1").upper == level2[0].upper);
  CHECK(per_node.at("s2").lower == level2[1].lower);
  CHECK(per_node.at("s2").upper == level2[1].upper);

  SUBCASE("singleton blocks give the exact pair") {
    AttributeTree one;
    one.add_root_child("A1");
    std::map<std::string, Partition> exact{{"A1", Partition::singletons(u)}};
    auto result = treerough(one, exact, target);
    CHECK(result.at("A1").lower == target);
    CHECK(result.at("A1").upper == target);
  }
  SUBCASE("empty target yields empty pairs") {
    auto result = treerough(tree, rels, {});
    for (const auto& [_, pair] : result) {
      CHECK(pair.lower.empty());
      CHECK(pair.upper.empty());
    }
  }
}

TEST_CASE("hyperrough matches independent per-key calls") {
  Mix mix{47};
  for (int i = 0; i < 100; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(8);
    for (std::size_t k = 0; k < n; ++k) u.add("v" + std::to_string(k));
    HyperSoftSet h;
    h.universe = u;
    h.domains = {{"T1", {"a1", "a2"}}, {"T2", {"b1"}}};
    for (const auto& a : h.domains[0].values)
      if (mix.coin()) h.mapping[{a, "b1"}] = random_subset(mix, u);
    Partition p = random_partition(mix, u);
    auto result = hyperrough(h, p);
    CHECK(result.size() == h.mapping.size());
    for (const auto& [key, pair] : result) {
      RoughPair expected = rough_approx(p, h.mapping.at(key));
      CHECK(pair.lower == expected.lower);
      CHECK(pair.upper == expected.upper);
    }
  }
}

TEST_CASE("hyperrough special cases") {
  Universe u({"a", "b"});
  Partition singles = Partition::singletons(u);
  HyperSoftSet h;
  h.universe = u;
  h.domains = {{"T1", {"v"}}};
  h.mapping[{"v"}] = {"a"};
  auto result = hyperrough(h, singles);
  CHECK(result.at({"v"}).lower == ElementSet{"a"});
  CHECK(result.at({"v"}).upper == ElementSet{"a"});

  h.mapping[{"v"}] = {};
  auto empty = hyperrough(h, singles);
  CHECK(empty.at({"v"}).lower.empty());
  CHECK(empty.at({"v"}).upper.empty());

  SUBCASE("superhyperrough keys tuples of subsets") {
    SuperHyperSoftSet s;
    s.universe = u;
    s.domains = {{"T1", {"v"}}};
    s.mapping[{{"v"}}] = {"a"};
    auto pairs = hyperrough(s, singles);
    CHECK(pairs.at({{"v"}}).lower == ElementSet{"a"});
  }
}

TEST_CASE("rough graph approximation uses the endpoint rule") {
  CrispGraph g;
  g.vertices = Universe({"u1", "u2", "u3"});
  g.edges = {Edge("u1", "u2"), Edge("u2", "u3")};
  Partition p;
  p.universe = g.vertices;
  p.blocks = {{"u1", "u2"}, {"u3"}};

  CrispGraphRough result = rough_graph_approx(g, p, {"u1", "u2"});
  CHECK(result.vertices.lower == ElementSet{"u1", "u2"});
  CHECK(result.edge_lower ==
        std::set<std::pair<Element, Element>>{{"u1", "u2"}});
  CHECK(result.edge_upper ==
        std::set<std::pair<Element, Element>>{{"u1", "u2"}});

  SUBCASE("total target reduces to the full graph") {
    CrispGraphRough full = rough_graph_approx(g, p, g.vertices.as_set());
    CHECK(full.vertices.lower == g.vertices.as_set());
    CHECK(full.edge_lower.size() == g.edges.size());
  }
  SUBCASE("empty target empties everything") {
    CrispGraphRough none = rough_graph_approx(g, p, {});
    CHECK(none.vertices.upper.empty());
    CHECK(none.edge_upper.empty());
  }
}

TEST_CASE("partition_from_relation requires closed input") {
  Universe u({"a", "b", "c"});
  Partition p = partition_from_relation(u, {{"a", "b"}});
  CHECK(p.blocks.size() == 2);
  CHECK(p.class_of("a") == ElementSet{"a", "b"});

  // a~b, b~c implies a~c; the listed relation omits it.
  CHECK_THROWS_AS(partition_from_relation(u, {{"a", "b"}, {"b", "c"}}),
                  NotEquivalenceError);
  CHECK_NOTHROW(partition_from_relation(u, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}
