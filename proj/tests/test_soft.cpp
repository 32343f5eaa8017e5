#include <doctest.h>

#include <cstdint>

#include "uncertain/soft.hpp"

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

SoftSet make_soft(const Universe& u, std::map<Parameter, ElementSet> m) {
  SoftSet s;
  s.universe = u;
  s.mapping = std::move(m);
  return s;
}

}  // namespace

TEST_CASE("soft union follows the three-case rule") {
  Universe u({"a", "b"});
  SoftSet f = make_soft(u, {{"e1", {"a"}}});
  SoftSet g = make_soft(u, {{"e2", {"b"}}});
  SoftSet h = soft_union(f, g);
  CHECK(h.mapping.at("e1") == ElementSet{"a"});
  CHECK(h.mapping.at("e2") == ElementSet{"b"});

  SoftSet overlap = make_soft(u, {{"e1", {"b"}}});
  CHECK(soft_union(f, overlap).mapping.at("e1") == ElementSet{"a", "b"});

  SoftSet other;
  other.universe = Universe({"a"});
  CHECK_THROWS_AS(soft_union(f, other), UniverseMismatchError);
}

TEST_CASE("soft intersection and subset") {
  Universe u({"a", "b"});
  SoftSet f = make_soft(u, {{"e1", {"a"}}});
  CHECK(soft_intersection(f, f).mapping == f.mapping);

  SoftSet g = make_soft(u, {{"e1", {"a", "b"}}});
  CHECK(is_soft_subset(f, g));
  CHECK_FALSE(is_soft_subset(g, f));

  // Disjoint parameter sets intersect to the empty soft set.
  SoftSet h = make_soft(u, {{"e2", {"a"}}});
  CHECK(soft_intersection(f, h).mapping.empty());
}

TEST_CASE("soft subset is a partial order") {
  Mix mix{3};
  Universe u({"a", "b", "c"});
  auto random_soft = [&] {
    SoftSet s;
    s.universe = u;
    std::size_t params = 1 + mix.index(3);
    for (std::size_t i = 1; i <= params; ++i) {
      ElementSet value;
      for (const auto& e : u)
        if (mix.coin()) value.insert(e);
      s.mapping["e" + std::to_string(i)] = value;
    }
    return s;
  };
  for (int i = 0; i < 100; ++i) {
    SoftSet x = random_soft(), y = random_soft(), z = random_soft();
    CHECK(is_soft_subset(x, x));
    if (is_soft_subset(x, y) && is_soft_subset(y, z)) CHECK(is_soft_subset(x, z));
    if (is_soft_subset(x, y) && is_soft_subset(y, x)) CHECK(x.mapping == y.mapping);
  }
}

TEST_CASE("soft union is commutative and associative") {
  Mix mix{71};
  Universe u({"a", "b", "c"});
  auto random_soft = [&] {
    SoftSet s;
    s.universe = u;
    std::size_t params = 1 + mix.index(3);
    for (std::size_t i = 1; i <= params; ++i) {
      ElementSet value;
      for (const auto& e : u)
        if (mix.coin()) value.insert(e);
      s.mapping["e" + std::to_string(mix.index(4))] = value;
    }
    return s;
  };
  for (int i = 0; i < 100; ++i) {
    SoftSet x = random_soft(), y = random_soft(), z = random_soft();
    CHECK(soft_union(x, y).mapping == soft_union(y, x).mapping);
    CHECK(soft_union(soft_union(x, y), z).mapping ==
          soft_union(x, soft_union(y, z)).mapping);
  }
}

TEST_CASE("union with the null soft set restricted to A is the identity") {
  Universe u({"a", "b"});
  SoftSet f = make_soft(u, {{"e1", {"a"}}, {"e2", {}}});
  SoftSet null_f = make_soft(u, {{"e1", {}}, {"e2", {}}});
  SoftSet merged = soft_union(f, null_f);
  CHECK(merged.mapping == f.mapping);
}

TEST_CASE("null and full predicates") {
  Universe u({"a", "b"});
  SoftSet nul = make_soft(u, {{"e1", {}}, {"e2", {}}});
  CHECK(is_null(nul));
  CHECK_FALSE(is_full(nul));

  SoftSet cover = make_soft(u, {{"e1", {"a"}}, {"e2", {"b"}}});
  CHECK(is_full(cover));
  CHECK_FALSE(is_null(cover));

  SoftSet single = make_soft(u, {{"e1", {"a", "b"}}, {"e2", {}}});
  CHECK(is_full(single));
}

TEST_CASE("hypersoft validation and the n=1 soft reinterpretation") {
  HyperSoftSet h;
  h.universe = Universe({"x"});
  h.domains = {{"T1", {"a1"}}};
  h.mapping[{"a1"}] = {"x"};
  CHECK(hypersoft_validate(h).ok());

  SoftSet s = hypersoft_as_soft(h);
  CHECK(s.mapping.at("a1") == ElementSet{"x"});
  CHECK(is_null(h) == is_null(s));
  CHECK(is_full(h) == is_full(s));

  SUBCASE("overlapping domains are a violation") {
    HyperSoftSet bad;
    bad.universe = Universe({"x"});
    bad.domains = {{"T1", {"a"}}, {"T2", {"a"}}};
    CHECK(hypersoft_validate(bad).has("OverlappingDomains"));
  }
  SUBCASE("as_soft requires one attribute") {
    HyperSoftSet two;
    two.universe = Universe({"x"});
    two.domains = {{"T1", {"a"}}, {"T2", {"b"}}};
    CHECK_THROWS_AS(hypersoft_as_soft(two), WrongArityError);
  }
}

TEST_CASE("hypersoft n=1 agrees with its soft reinterpretation") {
  Mix mix{17};
  for (int i = 0; i < 100; ++i) {
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
    CHECK(is_null(h) == is_null(s));
    CHECK(is_full(h) == is_full(s));
    for (const auto& [key, value] : h.mapping)
      CHECK(s.mapping.at(key.front()) == value);
    CHECK(s.mapping.size() == h.mapping.size());
  }
}

TEST_CASE("superhypersoft wraps hypersoft keys as singletons") {
  HyperSoftSet h;
  h.universe = Universe({"x"});
  h.domains = {{"T1", {"a1"}}, {"T2", {"b2"}}};
  h.mapping[{"a1", "b2"}] = {"x"};

  SuperHyperSoftSet s = superhypersoft_from_hypersoft(h);
  REQUIRE(s.mapping.size() == 1);
  auto key = s.mapping.begin()->first;
  CHECK(key == std::vector<std::vector<std::string>>{{"a1"}, {"b2"}});
  CHECK(superhypersoft_validate(s).ok());

  // Round trip through the singleton image.
  HyperSoftSet back = superhypersoft_to_hypersoft(s);
  CHECK(back.mapping == h.mapping);

  SUBCASE("empty mapping stays empty") {
    HyperSoftSet empty;
    empty.universe = h.universe;
    empty.domains = h.domains;
    CHECK(superhypersoft_from_hypersoft(empty).mapping.empty());
  }
}

namespace {

TreeSoftSet depth2_treesoft() {
  TreeSoftSet t;
  t.universe = Universe({"x", "y"});
  t.tree.add_root_child("A1");
  t.tree.add_child("A1", "a");
  t.tree.add_child("A1", "b");
  t.mapping[NodeKey{"a"}] = {"x"};
  t.mapping[NodeKey{"a", "b"}] = {"y"};
  return t;
}

}  // namespace

TEST_CASE("treesoft to multisoft flattens depth-2 trees") {
  TreeSoftSet t = depth2_treesoft();
  CHECK(treesoft_validate(t).ok());

  MultiSoftSet m = treesoft_to_multisoft(t);
  REQUIRE(m.families.size() == 1);
  CHECK(m.families[0].second == ParameterSet{"a", "b"});
  CHECK(m.mapping.at(ParameterSet{"a"}) == ElementSet{"x"});
  CHECK(validate_multisoft(m).ok());

  // Round trip back through the inverse embedding.
  TreeSoftSet back = multisoft_to_treesoft(m);
  CHECK(back.mapping == t.mapping);
  CHECK(back.tree.depth() == 2);

  SUBCASE("depth-3 flattening fails") {
    t.tree.add_child("a", "aa");
    CHECK_THROWS_AS(treesoft_to_multisoft(t), WrongDepthError);
  }
  SUBCASE("keys referencing level-1 nodes fail") {
    TreeSoftSet bad = depth2_treesoft();
    bad.mapping[NodeKey{"A1"}] = {"x"};
    CHECK_THROWS_AS(treesoft_to_multisoft(bad), BadKeyError);
  }
}

TEST_CASE("treesoft round trip holds on random depth-2 instances") {
  Mix mix{31};
  for (int i = 0; i < 100; ++i) {
    TreeSoftSet t;
    t.universe = Universe({"u1", "u2", "u3"});
    std::size_t families = 1 + mix.index(2);
    std::vector<std::string> leaves;
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
    CHECK(back.mapping == t.mapping);
    MultiSoftSet again = treesoft_to_multisoft(back);
    CHECK(again.mapping == m.mapping);
  }
}

TEST_CASE("bijective validation reports both conditions independently") {
  Universe u({"a", "b"});
  SoftSet good = make_soft(u, {{"e1", {"a"}}, {"e2", {"b"}}});
  CHECK(bijective_validate(good).ok());

  SoftSet overlapping = make_soft(u, {{"e1", {"a"}}, {"e2", {"a", "b"}}});
  auto report = bijective_validate(overlapping);
  CHECK(report.has("Disjointness"));
  CHECK_FALSE(report.has("Exhaustivity"));

  SoftSet single = make_soft(u, {{"e1", {"a", "b"}}});
  CHECK(bijective_validate(single).ok());

  SoftSet gap = make_soft(u, {{"e1", {"a"}}});
  CHECK(bijective_validate(gap).has("Exhaustivity"));
}

TEST_CASE("bijective implies full and unique membership") {
  Mix mix{41};
  for (int i = 0; i < 100; ++i) {
    Universe u;
    std::size_t n = 1 + mix.index(6);
    for (std::size_t k = 0; k < n; ++k) u.add("u" + std::to_string(k));
    SoftSet s;
    s.universe = u;
    std::size_t params = 1 + mix.index(3);
    for (std::size_t p = 1; p <= params; ++p) s.mapping["e" + std::to_string(p)] = {};
    for (const auto& e : u)
      s.mapping["e" + std::to_string(1 + mix.index(params))].insert(e);
    REQUIRE(bijective_validate(s).ok());
    CHECK(is_full(s));
    for (const auto& e : u) {
      int appearances = 0;
      for (const auto& [_, value] : s.mapping) appearances += value.count(e);
      CHECK(appearances == 1);
    }
  }
}

TEST_CASE("bijective treesoft keys must be single nodes, relax drops the claim") {
  TreeSoftSet t;
  t.universe = Universe({"x", "y"});
  t.tree.add_root_child("A1");
  t.tree.add_child("A1", "a");
  t.mapping[NodeKey{"A1"}] = {"x"};
  t.mapping[NodeKey{"a"}] = {"y"};
  CHECK(bijective_validate(t).ok());

  t.mapping[NodeKey{"A1", "a"}] = {};
  CHECK(bijective_validate(t).has("NonSingletonKey"));

  TreeSoftSet relaxed = bijective_relax(t);
  CHECK(treesoft_validate(relaxed).ok());
}

TEST_CASE("ranked partitions must tile the universe") {
  Universe u({"a", "b"});
  RankedSoftSet r;
  r.universe = u;
  r.mapping["e1"] = {{}, {"a"}, {"b"}};
  CHECK(ranked_validate(r).ok());

  SUBCASE("overlap") {
    r.mapping["e1"] = {{}, {"a"}, {"a", "b"}};
    CHECK(ranked_validate(r).has("BlockOverlap"));
  }
  SUBCASE("all elements unranked is fine") {
    r.mapping["e1"] = {{"a", "b"}};
    CHECK(ranked_validate(r).ok());
  }
  SUBCASE("partition cardinalities sum to the universe size") {
    Mix mix{53};
    for (int i = 0; i < 50; ++i) {
      RankedSoftSet rs;
      rs.universe = u;
      RankedPartition partition(1 + mix.index(3));
      for (const auto& e : u) partition[mix.index(partition.size())].insert(e);
      rs.mapping["e"] = partition;
      REQUIRE(ranked_validate(rs).ok());
      std::size_t total = 0;
      for (const auto& block : partition) total += block.size();
      CHECK(total == u.size());
    }
  }
}

TEST_CASE("ranked hypersoft keys are tuples over the domains") {
  RankedHyperSoftSet r;
  r.universe = Universe({"a", "b"});
  r.domains = {{"T1", {"v1"}}};
  r.mapping[{"v1"}] = {{"a"}, {"b"}};
  CHECK(ranked_validate(r).ok());
  r.mapping[{"v9"}] = {{"a", "b"}};
  CHECK(ranked_validate(r).has("UnknownValue"));
}

TEST_CASE("graded soft layers validate and strip") {
  NeutroMultiSoftSet layer;
  layer.universe = Universe({"x", "y"});
  GradedSoftValue value;
  value.members = {"x"};
  value.grades["x"] = {1.0, 0.0, 0.0};
  layer.mapping[ParameterSet{"p"}] = value;
  CHECK(graded_soft_validate(layer, set_key_name).ok());

  auto stripped = graded_soft_strip(layer);
  CHECK(stripped.at(ParameterSet{"p"}) == ElementSet{"x"});

  SUBCASE("grade outside the standard range") {
    layer.mapping[ParameterSet{"p"}].grades["x"] = {1.5, 0.0, 0.0};
    CHECK(graded_soft_validate(layer, set_key_name).has("OutOfRange"));
  }
  SUBCASE("grades must match the member set exactly") {
    layer.mapping[ParameterSet{"p"}].grades["y"] = {0.5, 0.0, 0.0};
    CHECK(graded_soft_validate(layer, set_key_name).has("StrayGrade"));
  }
  SUBCASE("empty value with no grades is valid") {
    NeutroMultiSoftSet empty;
    empty.universe = layer.universe;
    empty.mapping[ParameterSet{"p"}] = GradedSoftValue{};
    CHECK(graded_soft_validate(empty, set_key_name).ok());
  }
  SUBCASE("parameter-keyed layers use the same machinery") {
    NeutroSoftSet flat;
    flat.universe = Universe({"x"});
    GradedSoftValue v;
    v.members = {"x"};
    v.grades["x"] = {0.9, 0.05, 0.1};
    flat.mapping["p"] = v;
    CHECK(graded_soft_validate(flat, parameter_key_name).ok());
    CHECK(graded_soft_strip(flat).at("p") == ElementSet{"x"});
  }
}

TEST_CASE("soft expert keys must come from E x X x O") {
  SoftExpertSet se;
  se.universe = Universe({"u"});
  se.parameters = {"e1"};
  se.experts = {"expert1"};
  se.opinions = {"agree"};
  se.mapping[{"e1", "expert1", "agree"}] = {"u"};
  CHECK(soft_expert_validate(se).ok());

  se.mapping[{"e1", "ghost", "agree"}] = {};
  CHECK(soft_expert_validate(se).has("UnknownExpert"));

  SoftExpertSet empty;
  empty.universe = Universe({"u"});
  CHECK(soft_expert_validate(empty).ok());
}
