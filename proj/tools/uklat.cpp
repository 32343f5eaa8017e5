// uklat — validate, convert, approximate and hierarchy-check documents for
// the uncertain set/graph lattice.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "uncertain/document.hpp"
#include "uncertain/graphs.hpp"
#include "uncertain/hyper.hpp"
#include "uncertain/lattice.hpp"
#include "uncertain/plithogenic.hpp"
#include "uncertain/powerset.hpp"
#include "uncertain/rough.hpp"
#include "uncertain/soft.hpp"

namespace {

using namespace uncertain;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::map<std::string, std::string> parse_params(const std::string& params) {
  std::map<std::string, std::string> out;
  std::stringstream stream(params);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      out[item] = "";
    else
      out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

Json element_set_json(const ElementSet& s) {
  Json out = Json::array();
  for (const auto& e : s) out.push_back(e);
  return out;
}

Json rough_pair_json(const RoughPair& pair, const Universe& ambient) {
  Regions regions = regions_of(pair, ambient);
  return Json{{"lower", element_set_json(pair.lower)},
              {"upper", element_set_json(pair.upper)},
              {"target", element_set_json(pair.target)},
              {"regions", Json{{"pos", element_set_json(regions.pos)},
                               {"neg", element_set_json(regions.neg)},
                               {"bnd", element_set_json(regions.bnd)},
                               {"definable", regions.definable}}}};
}

Partition parse_partition_payload(const Json& payload) {
  Universe u;
  for (const auto& e : payload.at("universe")) u.add(e.get<std::string>());
  if (payload.contains("pairs")) {
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& pair : payload.at("pairs"))
      pairs.emplace_back(pair.at(0).get<std::string>(),
                         pair.at(1).get<std::string>());
    return partition_from_relation(u, pairs);
  }
  Partition p;
  p.universe = u;
  for (const auto& block : payload.at("blocks")) {
    ElementSet b;
    for (const auto& e : block) b.insert(e.get<std::string>());
    p.blocks.push_back(std::move(b));
  }
  ValidationReport check = validate_partition(p);
  if (!check.ok()) throw ParseError("bad partition: " + check.to_string());
  return p;
}

// --- conversion routing -------------------------------------------------------

GradeKind graded_target(const std::string& kind_id) {
  auto kind = kind_from_name(kind_id);
  if (!kind) throw NoPathError("not a grade kind: " + kind_id);
  return *kind;
}

Instance run_reduction(const Instance& inst, const std::string& target,
                       const std::map<std::string, std::string>& params) {
  const std::string& kind = inst.kind;

  if (const auto* s = std::get_if<GradedSet>(&inst.payload)) {
    GradedSet out;
    out.universe = s->universe;
    out.kind = graded_target(target);
    bool first = true;
    for (const auto& e : s->universe) {
      GradeTuple t = reduce_grade(s->grade_of(e), out.kind);
      if (first) {
        out.ranges = t.ranges;
        first = false;
      }
      out.grades[e] = t.components;
    }
    if (first) out.ranges = standard_ranges(out.kind);
    std::vector<GradeRange> baseline(out.ranges.size(), GradeRange::standard());
    std::string suffix;
    bool over = false, under = false;
    for (const auto& r : out.ranges) {
      if (r.hi > 1.0 + 1e-12) over = true;
      if (r.lo < -1e-12) under = true;
    }
    if (out.kind == GradeKind::HyperBinary) over = false;
    if (over && under) suffix = "_off";
    else if (over) suffix = "_over";
    else if (under) suffix = "_under";
    return Instance{kind_name(out.kind) + suffix, std::move(out)};
  }
  if (const auto* ps = std::get_if<PlithogenicSet>(&inst.payload)) {
    TwoComponentKind two = target == "intuitionistic"
                               ? TwoComponentKind::IntuitionisticFuzzy
                               : TwoComponentKind::Vague;
    GradedSet out = reduce_plithogenic(*ps, two);
    if (kind_name(out.kind) != target)
      throw NoPathError("plithogenic set with s = " +
                        std::to_string(ps->daf.dims) + " reduces to " +
                        kind_name(out.kind) + ", not " + target);
    return Instance{target, std::move(out)};
  }
  if (const auto* mps = std::get_if<MultiPlithogenicSet>(&inst.payload)) {
    if (target == "multineutrosophic") {
      MultiGradedSet out;
      out.universe = mps->carrier;
      out.grades = multiplithogenic_to_multineutro(*mps);
      return Instance{"multineutrosophic", std::move(out)};
    }
    if (target == "plithogenic") {
      Aggregation agg = Aggregation::Max;
      auto it = params.find("agg");
      if (it != params.end()) {
        if (it->second == "min") agg = Aggregation::Min;
        else if (it->second == "mean") agg = Aggregation::Mean;
      }
      return Instance{"plithogenic", aggregate_multiplithogenic(*mps, agg)};
    }
  }
  if (const auto* tps = std::get_if<TreePlithogenicSet>(&inst.payload)) {
    if (target == "multiplithogenic")
      return Instance{"multiplithogenic", treeplithogenic_to_multiplithogenic(*tps)};
  }
  if (const auto* hp = std::get_if<HyperPlithogenicSet>(&inst.payload)) {
    HyperGradedSet out = reduce_hyperplithogenic(*hp);
    if (hyper_kind_name(out.kind) != target)
      throw NoPathError("hyperplithogenic set reduces to " +
                        hyper_kind_name(out.kind) + ", not " + target);
    return Instance{target, std::move(out)};
  }
  if (const auto* h = std::get_if<HyperGradedSet>(&inst.payload)) {
    if (kind == "hyperneutrosophic" && target == "hyperfuzzy")
      return Instance{"hyperfuzzy", hyperneutro_to_hyperfuzzy(*h)};
    auto single = kind_from_name(target);
    if (single) return Instance{target, hyper_to_graded(*h)};
  }
  if (const auto* s = std::get_if<SuperHyperGradedSet>(&inst.payload)) {
    if (kind == "superhyperneutrosophic" && target == "superhypervague")
      return Instance{"superhypervague", superneutro_to_supervague(*s)};
    if (kind == "superhypervague" && target == "superhyperfuzzy")
      return Instance{"superhyperfuzzy", supervague_to_superfuzzy(*s)};
    if (target.rfind("hyper", 0) == 0)
      return Instance{target, restrict_to_singletons(*s)};
  }
  if (const auto* h = std::get_if<HyperSoftSet>(&inst.payload)) {
    if (target == "soft") return Instance{"soft", hypersoft_as_soft(*h)};
  }
  if (const auto* s = std::get_if<SuperHyperSoftSet>(&inst.payload)) {
    if (target == "hypersoft")
      return Instance{"hypersoft", superhypersoft_to_hypersoft(*s)};
  }
  if (const auto* t = std::get_if<TreeSoftSet>(&inst.payload)) {
    if (target == "multisoft")
      return Instance{"multisoft", treesoft_to_multisoft(*t)};
  }
  if (const auto* g = std::get_if<GradedGraph>(&inst.payload)) {
    std::string base = target;
    auto pos = base.find("_graph");
    if (pos != std::string::npos) {
      base.erase(pos, 6);
      for (const char* suffix : {"_over", "_under", "_off"}) {
        std::size_t n = std::string(suffix).size();
        if (base.size() > n && base.substr(base.size() - n) == suffix)
          base = base.substr(0, base.size() - n);
      }
      GradedGraph out = reduce_graph(*g, graded_target(base));
      return Instance{target, std::move(out)};
    }
  }
  if (const auto* pg = std::get_if<PlithogenicGraph>(&inst.payload)) {
    FourComponentGraphKind four = FourComponentGraphKind::Quadripartitioned;
    auto it = params.find("four");
    if (it != params.end() && it->second == "dvns")
      four = FourComponentGraphKind::DoubleValued;
    auto result = plithogenic_graph_reduce(*pg, four);
    if (!result.revalidation.ok())
      std::cerr << result.revalidation.to_string();
    std::string suffix;
    bool over = false, under = false;
    for (const auto& r : result.graph.ranges) {
      if (r.hi > 1.0 + 1e-12) over = true;
      if (r.lo < -1e-12) under = true;
    }
    if (over && under) suffix = "_off";
    else if (over) suffix = "_over";
    else if (under) suffix = "_under";
    std::string produced = kind_name(result.graph.kind) + "_graph" + suffix;
    if (produced != target)
      throw NoPathError("plithogenic graph reduces to " + produced + ", not " + target);
    return Instance{produced, std::move(result.graph)};
  }
  if (const auto* mg = std::get_if<MultiGradedGraph>(&inst.payload)) {
    if (target == "multiquadripartitioned_graph")
      return Instance{target, multipenta_to_multiquad(*mg)};
    MultiCollapseMode mode = MultiCollapseMode::Mean;
    auto it = params.find("mode");
    if (it != params.end() && it->second == "singleton")
      mode = MultiCollapseMode::SingletonOnly;
    GradedGraph out = collapse_multigraph(*mg, mode);
    std::string produced = kind_name(out.kind) + "_graph";
    if (produced != target)
      throw NoPathError("multi graph collapses to " + produced + ", not " + target);
    return Instance{produced, std::move(out)};
  }
  if (const auto* h = std::get_if<Hypergraph>(&inst.payload)) {
    if (target == "crisp_graph")
      return Instance{"crisp_graph", hypergraph_to_graph(*h)};
  }
  if (const auto* h = std::get_if<NeutroHypergraph>(&inst.payload)) {
    if (target.rfind("neutrosophic_graph", 0) == 0)
      return Instance{target, neutro_hypergraph_to_graph(*h)};
    if (target == "neutrosophic_hypergraph_over")
      return Instance{target, neutro_hypergraph_restrict(*h, Regime::Over)};
    if (target == "neutrosophic_hypergraph_under")
      return Instance{target, neutro_hypergraph_restrict(*h, Regime::Under)};
  }
  if (const auto* g = std::get_if<CrispGraph>(&inst.payload)) {
    if (target == "superhypergraph")
      return Instance{"superhypergraph", graph_to_superhypergraph(*g)};
  }
  if (const auto* g = std::get_if<SoftGraph>(&inst.payload)) {
    if (kind == "multisoft_graph" && target == "soft_graph") {
      // The union transform keyed by the same parameter sets.
      return Instance{"multisoft_graph", multisoft_graph_to_soft(*g)};
    }
  }
  if (const auto* g = std::get_if<NeutroSoftGraph>(&inst.payload)) {
    if (target.rfind("neutrosophic_graph", 0) == 0)
      return Instance{target, neutro_soft_graph_aggregate(*g)};
    if (target == "soft_graph" || target == "multisoft_graph")
      return Instance{"multisoft_graph", neutro_soft_graph_strip(*g)};
  }
  if (const auto* g = std::get_if<HyperSoftGraph>(&inst.payload)) {
    if (target.rfind("neutrosophic_graph", 0) == 0)
      return Instance{target, hypersoft_graph_aggregate(*g)};
  }
  if (const auto* g = std::get_if<HyperWeightedGraph>(&inst.payload)) {
    if (target == "weighted_graph")
      return Instance{"weighted_graph", annotated_reduce(*g)};
  }
  if (const auto* g = std::get_if<SuperHyperWeightedGraph>(&inst.payload)) {
    if (target == "hyperweighted_graph")
      return Instance{"hyperweighted_graph", annotated_reduce(*g)};
  }
  if (const auto* g = std::get_if<HyperLabeledGraph>(&inst.payload)) {
    if (target == "labeled_graph")
      return Instance{"labeled_graph", annotated_reduce(*g)};
  }
  if (const auto* g = std::get_if<SuperHyperLabeledGraph>(&inst.payload)) {
    if (target == "hyperlabeled_graph")
      return Instance{"hyperlabeled_graph", annotated_reduce(*g)};
  }
  throw NoPathError("no conversion from " + kind + " to " + target);
}

int cmd_validate(const std::string& path, bool total) {
  Instance inst;
  try {
    std::string text = read_file(path);
    // Partitions are accepted as plain documents too.
    Json doc = Json::parse(text, nullptr, true, true);
    if (doc.contains("kind") && doc["kind"] == "partition") {
      parse_partition_payload(doc.at("payload"));
      return kExitValid;
    }
    inst = parse_document_text(text);
  } catch (const std::exception& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  ValidationReport report;
  if (total) {
    if (const auto* s = std::get_if<SuperHyperGradedSet>(&inst.payload))
      report = validate_hyper(*s, true);
    else
      report = default_registry().validate(inst);
  } else {
    report = default_registry().validate(inst);
  }
  if (!report.ok()) {
    std::cerr << report.to_string();
    return kExitInvalid;
  }
  return kExitValid;
}

int cmd_convert(const std::string& path, const std::string& target,
                const std::string& params_text) {
  Instance inst;
  try {
    inst = parse_document_text(read_file(path));
  } catch (const std::exception& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  auto params = parse_params(params_text);
  const KindRegistry& reg = default_registry();
  try {
    Instance out;
    if (inst.kind == target) {
      out = inst;
    } else if (reg.has_kind(target) && reg.is_generalization(inst.kind, target)) {
      out = reg.embed(inst, target);
    } else {
      out = run_reduction(inst, target, params);
    }
    std::cout << emit_document(out);
    return kExitValid;
  } catch (const DomainError& ex) {
    std::cerr << ex.code << ": " << ex.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return kExitUnsupported;
  }
}

int cmd_rough(const std::string& path, const std::string& target_csv,
              const std::string& engine) {
  Json doc;
  ElementSet target;
  {
    std::stringstream stream(target_csv);
    std::string item;
    while (std::getline(stream, item, ','))
      if (!item.empty()) target.insert(item);
  }
  try {
    doc = Json::parse(read_file(path));
  } catch (const std::exception& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  try {
    Json report;
    if (engine == "classic") {
      Partition p = parse_partition_payload(doc.at("payload"));
      RoughPair pair = rough_approx(p, target);
      report = rough_pair_json(pair, p.universe);
      report["engine"] = "classic";
    } else if (engine == "soft") {
      Instance inst = parse_document(doc);
      const auto& s = std::get<SoftSet>(inst.payload);
      RoughPair pair = soft_rough_approx(s, target);
      report = rough_pair_json(pair, s.universe);
      report["engine"] = "soft";
    } else if (engine == "treesoft") {
      Instance inst = parse_document(doc);
      const auto& t = std::get<TreeSoftSet>(inst.payload);
      TreesoftRoughResult result = treesoft_rough_approx(t, target);
      report = rough_pair_json(result.pair, t.universe);
      report["engine"] = "treesoft";
    } else if (engine == "multi") {
      const Json& payload = doc.at("payload");
      Universe u;
      for (const auto& e : payload.at("universe")) u.add(e.get<std::string>());
      std::vector<Partition> relations;
      for (const auto& blocks : payload.at("partitions")) {
        Partition p;
        p.universe = u;
        for (const auto& block : blocks) {
          ElementSet b;
          for (const auto& e : block) b.insert(e.get<std::string>());
          p.blocks.push_back(std::move(b));
        }
        relations.push_back(std::move(p));
      }
      Json pairs = Json::array();
      for (const auto& pair : multirough(relations, target))
        pairs.push_back(rough_pair_json(pair, u));
      report = Json{{"engine", "multi"}, {"pairs", pairs}};
    } else if (engine == "hyper") {
      const Json& payload = doc.at("payload");
      Instance hs = parse_document(
          Json{{"kind", "hypersoft"}, {"payload", payload.at("hypersoft")}});
      const auto& h = std::get<HyperSoftSet>(hs.payload);
      Partition p = parse_partition_payload(payload.at("partition"));
      Json pairs = Json::array();
      for (const auto& [key, pair] : hyperrough(h, p)) {
        Json entry = rough_pair_json(pair, h.universe);
        Json key_json = Json::array();
        for (const auto& part : key) key_json.push_back(part);
        entry["key"] = key_json;
        pairs.push_back(entry);
      }
      report = Json{{"engine", "hyper"}, {"pairs", pairs}};
    } else {
      std::cerr << "unknown engine " << engine << "\n";
      return kExitUnsupported;
    }
    std::cout << canonical_dump(report);
    return kExitValid;
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const Json::exception& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const DomainError& ex) {
    std::cerr << ex.code << ": " << ex.what() << "\n";
    return kExitUnsupported;
  }
}

int cmd_powerset(const std::string& universe_csv, std::size_t level,
                 std::uint64_t cap) {
  Universe u;
  {
    std::stringstream stream(universe_csv);
    std::string item;
    while (std::getline(stream, item, ','))
      if (!item.empty()) u.add(item);
  }
  try {
    PowerTower tower = iterated_powerset(u, level, cap);
    for (const auto& elem : tower.elements) std::cout << elem.to_string() << "\n";
    return kExitValid;
  } catch (const CapExceededError& ex) {
    std::cerr << "CapExceeded: predicted cardinality " << ex.predicted << "\n";
    return kExitUnsupported;
  }
}

int cmd_hierarchy(const std::string& check_path, bool export_edges) {
  const KindRegistry& reg = default_registry();
  if (export_edges) {
    std::cout << reg.export_edge_list();
    return kExitValid;
  }
  Instance inst;
  try {
    inst = parse_document_text(read_file(check_path));
  } catch (const std::exception& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParse;
  }
  bool all_ok = true;
  for (const auto& kind : reg.reachable_from(inst.kind)) {
    try {
      Instance embedded = reg.embed(inst, kind);
      ValidationReport report = reg.validate(embedded);
      if (report.ok()) {
        std::cout << inst.kind << " -> " << kind << ": ok\n";
      } else {
        std::cout << inst.kind << " -> " << kind << ": INVALID\n";
        all_ok = false;
      }
    } catch (const std::exception& ex) {
      std::cout << inst.kind << " -> " << kind << ": FAILED (" << ex.what()
                << ")\n";
      all_ok = false;
    }
  }
  return all_ok ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uncertain set/graph lattice toolkit"};
  app.require_subcommand(1);

  std::string path, target_kind, params, targets, engine = "classic";
  std::string universe_csv;
  std::size_t level = 1;
  std::uint64_t cap = uncertain::kDefaultPowersetCap;
  bool total = false, export_edges = false;

  auto* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("path", path)->required();
  validate->add_flag("--total", total, "require totality over the powerset");

  auto* convert = app.add_subcommand("convert", "convert a document to a kind");
  convert->add_option("path", path)->required();
  convert->add_option("--to", target_kind, "target kind")->required();
  convert->add_option("--params", params, "comma-separated key=value options");

  auto* rough = app.add_subcommand("rough", "rough approximation report");
  rough->add_option("path", path)->required();
  rough->add_option("--target", targets, "comma-separated target elements")
      ->required();
  rough->add_option("--engine", engine, "classic|soft|treesoft|multi|hyper");

  auto* powerset = app.add_subcommand("powerset", "materialize a powerset tower");
  powerset->add_option("--universe", universe_csv, "comma-separated atoms")
      ->required();
  powerset->add_option("--n", level, "tower level");
  powerset->add_option("--cap", cap, "materialization cap");

  auto* hierarchy = app.add_subcommand("hierarchy", "hierarchy checks");
  hierarchy->add_option("--check", path, "embed-then-revalidate one instance");
  hierarchy->add_flag("--export", export_edges, "print the registered edge list");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(path, total);
  if (convert->parsed()) return cmd_convert(path, target_kind, params);
  if (rough->parsed()) return cmd_rough(path, targets, engine);
  if (powerset->parsed()) return cmd_powerset(universe_csv, level, cap);
  if (hierarchy->parsed()) {
    if (!export_edges && path.empty()) {
      std::cerr << "hierarchy needs --check <path> or --export\n";
      return kExitUnsupported;
    }
    return cmd_hierarchy(path, export_edges);
  }
  return kExitUnsupported;
}
