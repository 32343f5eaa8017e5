#include <doctest.h>

#include <cstdint>

#include "uncertain/hyper.hpp"
#include "uncertain/powerset.hpp"

using namespace uncertain;

namespace {

struct Mix {
  std::uint64_t state;
  double next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) / 9007199254740992.0;
  }
};

HyperGradedSet example_2_190() {
  HyperGradedSet h;
  h.universe = Universe({"x1", "x2", "x3"});
  h.kind = HyperKind::HyperFuzzy;
  h.values["x1"] = {{0.1}, {0.2}, {0.3}};
  h.values["x2"] = {{0.4}, {0.5}, {0.6}};
  h.values["x3"] = {{0.6}, {0.7}, {0.8}};
  return h;
}

}  // namespace

TEST_CASE("canonical nested-set encoding round-trips") {
  NestedElem e = NestedElem::make_set(
      {NestedElem::make_atom("b"), NestedElem::make_atom("a"),
       NestedElem::make_atom("a")});
  CHECK(e.to_string() == "{a,b}");
  auto parsed = parse_nested("{a,b}");
  REQUIRE(parsed.has_value());
  CHECK(*parsed == e);
  CHECK(parse_nested("{{a},{}}")->to_string() == "{{},{a}}");
  CHECK_FALSE(parse_nested("{a,").has_value());
}

TEST_CASE("iterated_powerset obeys the cardinality law") {
  Universe ab({"a", "b"});
  PowerTower level1 = iterated_powerset(ab, 1);
  CHECK(level1.elements.size() == 4);
  CHECK(level1.elements[0].to_string() == "{}");

  PowerTower level2 = iterated_powerset(ab, 2);
  CHECK(level2.elements.size() == 16);

  // |P*_n| = 2^|P*_{n-1}| for every base of size 1..3 and n <= 2.
  for (std::size_t base = 1; base <= 3; ++base) {
    Universe u;
    for (std::size_t i = 0; i < base; ++i) u.add("e" + std::to_string(i));
    std::size_t prev = iterated_powerset(u, 0).elements.size();
    for (std::size_t n = 1; n <= 2; ++n) {
      std::size_t cur = iterated_powerset(u, n).elements.size();
      CHECK(cur == (std::size_t{1} << prev));
      prev = cur;
    }
  }
}

TEST_CASE("iterated_powerset caps astronomically large towers") {
  Universe abc({"a", "b", "c"});
  try {
    iterated_powerset(abc, 3, 1000);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& ex) {
    CHECK(ex.predicted == "2^256");
  }
}

TEST_CASE("validate_hyper accepts the worked hyperfuzzy example") {
  CHECK(validate_hyper(example_2_190()).ok());

  HyperGradedSet bad = example_2_190();
  bad.values["x2"].clear();
  CHECK(validate_hyper(bad).has("EmptySubset"));
}

TEST_CASE("validate_hyper enforces per-kind constraints") {
  HyperGradedSet crisp;
  crisp.universe = Universe({"x"});
  crisp.kind = HyperKind::HyperCrisp;
  crisp.values["x"] = {{0.0}, {1.0}};
  CHECK(validate_hyper(crisp).ok());
  crisp.values["x"].push_back({0.4});
  CHECK(validate_hyper(crisp).has("NotBinary"));

  HyperGradedSet vague;
  vague.universe = Universe({"x"});
  vague.kind = HyperKind::HyperVague;
  vague.values["x"] = {{0.4, 0.5}};
  CHECK(validate_hyper(vague).ok());
  vague.values["x"] = {{0.7, 0.5}};
  CHECK(validate_hyper(vague).has("SumConstraint"));

  HyperGradedSet svns;
  svns.universe = Universe({"x"});
  svns.kind = HyperKind::SubsetValuedNeutrosophic;
  svns.values["x"] = {{0.2, 0.4}, {0.0}, {0.1}};
  CHECK(validate_hyper(svns).ok());
  svns.values["x"] = {{0.2, 0.4}, {0.0}};
  CHECK_FALSE(validate_hyper(svns).ok());
}

TEST_CASE("subset-valued sets with I=F={0} mirror subset-valued fuzzy sets") {
  HyperGradedSet h = example_2_190();
  HyperGradedSet svns;
  svns.universe = h.universe;
  svns.kind = HyperKind::SubsetValuedNeutrosophic;
  for (const auto& [e, points] : h.values) {
    std::vector<double> truths;
    for (const auto& p : points) truths.push_back(p[0]);
    svns.values[e] = {truths, {0.0}, {0.0}};
  }
  CHECK(validate_hyper(svns).ok());
}

TEST_CASE("hyperneutro_to_hyperfuzzy averages truth and falsity complement") {
  HyperGradedSet h;
  h.universe = Universe({"x"});
  h.kind = HyperKind::HyperNeutrosophic;

  h.values["x"] = {{1.0, 0.0, 0.0}};
  CHECK(hyperneutro_to_hyperfuzzy(h).values.at("x") == GradePointSet{{1.0}});

  h.values["x"] = {{0.8, 0.1, 0.2}};
  CHECK(hyperneutro_to_hyperfuzzy(h).values.at("x")[0][0] == doctest::Approx(0.8));

  h.values["x"] = {{0.0, 0.0, 1.0}};
  CHECK(hyperneutro_to_hyperfuzzy(h).values.at("x") == GradePointSet{{0.0}});
}

TEST_CASE("hyperneutro_to_hyperfuzzy always lands in the unit interval") {
  Mix mix{5};
  for (int i = 0; i < 300; ++i) {
    HyperGradedSet h;
    h.universe = Universe({"x"});
    h.kind = HyperKind::HyperNeutrosophic;
    GradePointSet points;
    std::size_t count = 1 + static_cast<std::size_t>(mix.next() * 3);
    for (std::size_t k = 0; k < count; ++k)
      points.push_back({mix.next(), mix.next(), mix.next()});
    h.values["x"] = points;
    HyperGradedSet out = hyperneutro_to_hyperfuzzy(h);
    for (const auto& p : out.values.at("x")) {
      CHECK(p[0] >= 0.0);
      CHECK(p[0] <= 1.0);
    }
    CHECK_FALSE(out.values.at("x").empty());
  }
}

TEST_CASE("reduce_hyperplithogenic unions HDAF subsets per element") {
  HyperPlithogenicSet hp;
  hp.carrier = Universe({"x"});
  hp.spec = {"v", {"a", "b"}};
  hp.dims = 1;
  hp.hdaf[{"x", "a"}] = {{0.2}};
  hp.hdaf[{"x", "b"}] = {{0.5}, {0.6}};
  hp.dcf = DCFMatrix::zero({"a", "b"});

  HyperGradedSet out = reduce_hyperplithogenic(hp);
  CHECK(out.kind == HyperKind::HyperFuzzy);
  CHECK(out.values.at("x") == GradePointSet{{0.2}, {0.5}, {0.6}});

  SUBCASE("single value is an identity reinterpretation") {
    HyperPlithogenicSet three;
    three.carrier = Universe({"x"});
    three.spec = {"v", {"a"}};
    three.dims = 3;
    three.hdaf[{"x", "a"}] = {{0.1, 0.2, 0.3}};
    three.dcf = DCFMatrix::zero({"a"});
    HyperGradedSet neutro = reduce_hyperplithogenic(three);
    CHECK(neutro.kind == HyperKind::HyperNeutrosophic);
    CHECK(neutro.values.at("x") == GradePointSet{{0.1, 0.2, 0.3}});
  }
  SUBCASE("s = 4 is unsupported") {
    hp.dims = 4;
    CHECK_THROWS_AS(reduce_hyperplithogenic(hp), UnsupportedDimsError);
  }
}

TEST_CASE("lift_pointwise unions member grades over every subset") {
  HyperGradedSet h;
  h.universe = Universe({"x1", "x2"});
  h.kind = HyperKind::HyperFuzzy;
  h.values["x1"] = {{0.1}, {0.2}, {0.3}};
  h.values["x2"] = {{0.4}, {0.5}, {0.6}};

  SuperHyperGradedSet lifted = lift_pointwise(h);
  CHECK(lifted.values.size() == 3);  // {x1}, {x2}, {x1,x2}
  CHECK(lifted.values.at("{x1,x2}") ==
        GradePointSet{{0.1}, {0.2}, {0.3}, {0.4}, {0.5}, {0.6}});
  CHECK(lifted.values.at("{x1}") == h.values.at("x1"));
  CHECK(validate_hyper(lifted, /*total=*/true).ok());

  SUBCASE("restriction to singletons recovers the original") {
    HyperGradedSet back = restrict_to_singletons(lifted);
    CHECK(back.values == h.values);
  }
  SUBCASE("one-element universe has one key") {
    HyperGradedSet tiny;
    tiny.universe = Universe({"x1"});
    tiny.kind = HyperKind::HyperFuzzy;
    tiny.values["x1"] = {{0.9}};
    CHECK(lift_pointwise(tiny).values.size() == 1);
  }
}

TEST_CASE("lift then restrict is the identity on random hyper sets") {
  Mix mix{11};
  for (int i = 0; i < 50; ++i) {
    HyperGradedSet h;
    std::size_t n = 1 + static_cast<std::size_t>(mix.next() * 4);
    for (std::size_t k = 0; k < n; ++k) h.universe.add("x" + std::to_string(k));
    h.kind = HyperKind::HyperFuzzy;
    for (const auto& e : h.universe) {
      GradePointSet points;
      std::size_t count = 1 + static_cast<std::size_t>(mix.next() * 3);
      for (std::size_t k = 0; k < count; ++k) points.push_back({mix.next()});
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      h.values[e] = points;
    }
    CHECK(restrict_to_singletons(lift_pointwise(h)).values == h.values);
  }
}

TEST_CASE("superneutro_to_supervague normalizes and drops T+F=0 triples") {
  SuperHyperGradedSet s;
  s.universe = Universe({"x"});
  s.kind = SuperHyperKind::SuperHyperNeutrosophic;

  s.values["{x}"] = {{0.6, 0.1, 0.2}};
  SuperHyperGradedSet v = superneutro_to_supervague(s);
  CHECK(v.values.at("{x}")[0][0] == doctest::Approx(0.75));
  CHECK(v.values.at("{x}")[0][1] == doctest::Approx(0.25));

  s.values["{x}"] = {{1.0, 0.0, 0.0}};
  CHECK(superneutro_to_supervague(s).values.at("{x}") == GradePointSet{{1.0, 0.0}});

  s.values["{x}"] = {{0.0, 1.0, 0.0}};
  CHECK_THROWS_AS(superneutro_to_supervague(s), EmptyAfterNormalizationError);

  SUBCASE("mixed keys drop exactly the degenerate triples") {
    s.values["{x}"] = {{0.0, 1.0, 0.0}, {0.5, 0.2, 0.5}};
    SuperHyperGradedSet mixed = superneutro_to_supervague(s);
    CHECK(mixed.values.at("{x}").size() == 1);
    CHECK(mixed.values.at("{x}")[0][0] == doctest::Approx(0.5));
  }
}

TEST_CASE("supervague_to_superfuzzy projects first components") {
  SuperHyperGradedSet s;
  s.universe = Universe({"x"});
  s.kind = SuperHyperKind::SuperHyperVague;
  s.values["{x}"] = {{0.5, 0.5}, {0.75, 0.25}};
  SuperHyperGradedSet f = supervague_to_superfuzzy(s);
  CHECK(f.values.at("{x}") == GradePointSet{{0.5}, {0.75}});

  s.values["{x}"] = {{1.0, 0.0}};
  CHECK(supervague_to_superfuzzy(s).values.at("{x}") == GradePointSet{{1.0}});
  s.values["{x}"] = {{0.0, 1.0}};
  CHECK(supervague_to_superfuzzy(s).values.at("{x}") == GradePointSet{{0.0}});
}

TEST_CASE("normalized supervague pairs sum to one") {
  Mix mix{23};
  for (int i = 0; i < 200; ++i) {
    SuperHyperGradedSet s;
    s.universe = Universe({"x"});
    s.kind = SuperHyperKind::SuperHyperNeutrosophic;
    s.values["{x}"] = {{mix.next(), mix.next(), mix.next()}};
    double tf = s.values["{x}"][0][0] + s.values["{x}"][0][2];
    if (tf <= 1e-9) continue;
    SuperHyperGradedSet v = superneutro_to_supervague(s);
    for (const auto& pair : v.values.at("{x}"))
      CHECK(pair[0] + pair[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("singleton hyper sets unwrap to graded sets") {
  HyperGradedSet h;
  h.universe = Universe({"x"});
  h.kind = HyperKind::HyperNeutrosophic;
  h.values["x"] = {{0.5, 0.2, 0.1}};
  GradedSet s = hyper_to_graded(h);
  CHECK(s.kind == GradeKind::Neutrosophic);
  CHECK(s.grades.at("x") == std::vector<double>{0.5, 0.2, 0.1});
  CHECK(validate_graded_set(s).ok());

  h.values["x"].push_back({0.6, 0.1, 0.1});
  CHECK_THROWS_AS(hyper_to_graded(h), NonSingletonError);

  SUBCASE("hypercrisp singletons unwrap to a crisp set") {
    HyperGradedSet c;
    c.universe = Universe({"x", "y"});
    c.kind = HyperKind::HyperCrisp;
    c.values["x"] = {{1.0}};
    c.values["y"] = {{0.0}};
    GradedSet crisp = hyper_to_graded(c);
    CHECK(crisp.kind == GradeKind::Crisp);
    CHECK(validate_graded_set(crisp).ok());
    // And wrapping back gives the singleton hyper set.
    CHECK(graded_to_hyper(crisp).values == c.values);
  }
}

TEST_CASE("higher tower levels validate structurally") {
  SuperHyperGradedSet s;
  s.universe = Universe({"x1", "x2"});
  s.level = 2;
  s.kind = SuperHyperKind::SuperHyperNeutrosophic;
  s.values["{{x1},{x1,x2}}"] = {{0.5, 0.2, 0.1}};
  s.values["{{}}"] = {{0.1, 0.1, 0.1}};  // the empty level-1 set is a member
  CHECK(validate_hyper(s).ok());

  s.values["{x1}"] = {{0.5, 0.2, 0.1}};  // level-1 key in a level-2 set
  CHECK(validate_hyper(s).has("BadKey"));
}

TEST_CASE("superhyper keys must be canonical tower elements") {
  SuperHyperGradedSet s;
  s.universe = Universe({"x1", "x2"});
  s.kind = SuperHyperKind::SuperHyperFuzzy;
  s.values["{x1,x2}"] = {{0.3}};
  CHECK(validate_hyper(s).ok());

  s.values["{x2,x1}"] = {{0.3}};  // non-canonical member order
  CHECK(validate_hyper(s).has("BadKey"));
  s.values.erase("{x2,x1}");
  s.values["{x9}"] = {{0.3}};
  CHECK(validate_hyper(s).has("BadKey"));
}
