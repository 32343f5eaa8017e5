#include <doctest.h>

#include "uncertain/lattice.hpp"

using namespace uncertain;

TEST_CASE("the default registry is a DAG with the expected reach") {
  const KindRegistry& reg = default_registry();
  CHECK(reg.is_dag());
  CHECK(reg.edges().size() >= 30);

  CHECK(reg.is_generalization("crisp", "neutrosophic"));       // via fuzzy
  CHECK(reg.is_generalization("crisp", "heptapartitioned"));
  CHECK(reg.is_generalization("crisp", "plithogenic"));
  CHECK(reg.is_generalization("crisp", "superhyperfuzzy"));
  CHECK(reg.is_generalization("crisp", "treesoft"));
  CHECK(reg.is_generalization("crisp_graph", "general_plithogenic_graph"));
  CHECK_FALSE(reg.is_generalization("fuzzy", "crisp"));
  CHECK(reg.is_generalization("fuzzy", "fuzzy"));
  CHECK_THROWS_AS(reg.is_generalization("fuzzy", "nonsense"), UnknownKindError);
}

TEST_CASE("embed composes witnesses and revalidates") {
  const KindRegistry& reg = default_registry();

  GradedSet fuzzy;
  fuzzy.kind = GradeKind::Fuzzy;
  fuzzy.ranges = standard_ranges(GradeKind::Fuzzy);
  fuzzy.universe.add("x");
  fuzzy.grades["x"] = {0.2};
  Instance inst{"fuzzy", fuzzy};

  Instance neutro = reg.embed(inst, "neutrosophic");
  const auto& payload = std::get<GradedSet>(neutro.payload);
  CHECK(payload.grades.at("x")[0] == doctest::Approx(0.2));
  CHECK(payload.grades.at("x")[1] == doctest::Approx(0.0));
  CHECK(payload.grades.at("x")[2] == doctest::Approx(0.8));

  SUBCASE("identity embed") {
    Instance same = reg.embed(inst, "fuzzy");
    CHECK(std::get<GradedSet>(same.payload).grades.at("x")[0] ==
          doctest::Approx(0.2));
  }
  SUBCASE("crisp reaches plithogenic through the chain") {
    GradedSet crisp;
    crisp.kind = GradeKind::Crisp;
    crisp.ranges = standard_ranges(GradeKind::Crisp);
    crisp.universe.add("x");
    crisp.grades["x"] = {1.0};
    Instance out = reg.embed(Instance{"crisp", crisp}, "plithogenic");
    CHECK(reg.validate(out).ok());
  }
  SUBCASE("no path is an error") {
    CHECK_THROWS_AS(reg.embed(inst, "crisp"), NoPathError);
  }
}

TEST_CASE("every generator produces instances that pass their own validator") {
  const KindRegistry& reg = default_registry();
  for (const auto& kind : reg.kinds()) {
    if (!reg.can_generate(kind)) continue;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      for (std::size_t size : {1, 3, 5}) {
        Rng rng(seed * 1000 + size);
        Instance inst = reg.generate(kind, rng, size);
        CAPTURE(kind);
        CAPTURE(seed);
        CHECK(inst.kind == kind);
        ValidationReport report = reg.validate(inst);
        CAPTURE(report.to_string());
        CHECK(report.ok());
      }
    }
  }
}

TEST_CASE("verify runs seeded samples across every edge") {
  const KindRegistry& reg = default_registry();
  LatticeReport report = reg.verify(5, 12345);
  CHECK(report.edges_tested() >= 30);
  for (const auto& verdict : report.verdicts) {
    if (verdict.status == EdgeVerdict::Status::NoGenerator) continue;
    CAPTURE(verdict.edge_id);
    CAPTURE(verdict.detail);
    CAPTURE(verdict.counterexample);
    CHECK(verdict.failures == 0);
  }

  SUBCASE("reports are deterministic for a fixed seed") {
    LatticeReport again = reg.verify(5, 12345);
    REQUIRE(again.verdicts.size() == report.verdicts.size());
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
      CHECK(again.verdicts[i].edge_id == report.verdicts[i].edge_id);
      CHECK(again.verdicts[i].failures == report.verdicts[i].failures);
    }
  }
}

TEST_CASE("a broken witness is flagged with a counterexample") {
  // Clone the registry shape with one deliberately wrong edge.
  KindRegistry reg;
  reg.add_kind(
      "fuzzy",
      [](const Instance& inst) {
        return validate_graded_set(std::get<GradedSet>(inst.payload));
      },
      [](Rng& rng, std::size_t size) {
        GradedSet s;
        s.kind = GradeKind::Fuzzy;
        s.ranges = standard_ranges(GradeKind::Fuzzy);
        for (std::size_t i = 0; i < size; ++i) {
          std::string e = "x" + std::to_string(i);
          s.universe.add(e);
          s.grades[e] = {rng.uniform()};
        }
        return Instance{"fuzzy", std::move(s)};
      });
  reg.add_kind("vague", [](const Instance& inst) {
    return validate_graded_set(std::get<GradedSet>(inst.payload));
  });
  reg.add_edge(RegistryEdge{
      "fuzzy->vague", "fuzzy", "vague", "broken", "fault-injection",
      [](const Instance& inst) {
        GradedSet s = std::get<GradedSet>(inst.payload);
        s.kind = GradeKind::Vague;
        s.ranges = standard_ranges(GradeKind::Vague);
        for (auto& [e, comps] : s.grades) comps = {comps[0], 1.0};  // t+f > 1
        return Instance{"vague", std::move(s)};
      }});

  LatticeReport report = reg.verify(10, 7);
  REQUIRE(report.verdicts.size() == 1);
  CHECK(report.verdicts[0].failures > 0);
  CHECK(report.verdicts[0].status == EdgeVerdict::Status::ValidationFailed);
  CHECK_FALSE(report.verdicts[0].counterexample.empty());
}

TEST_CASE("edge list export names the mechanized laws") {
  std::string listing = default_registry().export_edge_list();
  CHECK(listing.find("crisp -> fuzzy : fuzzy-generalizes-crisp") != std::string::npos);
  CHECK(listing.find(
            "pentapartitioned -> heptapartitioned : "
            "heptapartitioned-refines-pentapartitioned") != std::string::npos);
  CHECK(listing.find(
            "hyperweighted_graph -> superhyperweighted_graph : "
            "superhyperweighted-graph-generalizes-hyperweighted-graph") !=
        std::string::npos);
}
