#include "uncertain/document.hpp"

#include <cstdio>

namespace uncertain {

// --- canonical emitter --------------------------------------------------------

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void dump(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        out += inner + Json(it.key()).dump() + ": ";
        dump(it.value(), out, depth + 1);
        first = false;
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        out += inner;
        dump(item, out, depth + 1);
        first = false;
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump(j, out, 0);
  out += "\n";
  return out;
}

// --- helpers --------------------------------------------------------------------

namespace {

const Json& field(const Json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError("missing field \"" + name + "\"");
  return *it;
}

Universe parse_universe(const Json& j) {
  Universe u;
  for (const auto& e : j) {
    if (!u.add(e.get<std::string>()))
      throw ParseError("duplicate element " + e.get<std::string>());
  }
  return u;
}

Json universe_json(const Universe& u) {
  Json out = Json::array();
  for (const auto& e : u) out.push_back(e);
  return out;
}

ElementSet parse_element_set(const Json& j) {
  ElementSet out;
  for (const auto& e : j) out.insert(e.get<std::string>());
  return out;
}

Json element_set_json(const ElementSet& s) {
  Json out = Json::array();
  for (const auto& e : s) out.push_back(e);
  return out;
}

GradeRange parse_range(const Json& j) {
  return {field(j, "lo").get<double>(), field(j, "hi").get<double>()};
}

Json range_json(const GradeRange& r) { return Json{{"lo", r.lo}, {"hi", r.hi}}; }

std::vector<double> parse_doubles(const Json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(x.get<double>());
  return out;
}

Json doubles_json(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(x);
  return out;
}

std::vector<std::string> parse_strings(const Json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

Json strings_json(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

Edge parse_edge(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edges are [u, v] pairs");
  return Edge(j[0].get<std::string>(), j[1].get<std::string>());
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

// Grade tuples as objects keyed by component name.
std::vector<double> parse_components(const Json& j, GradeKind kind) {
  const auto& names = component_names(kind);
  std::vector<double> out;
  for (const auto& name : names) out.push_back(field(j, name).get<double>());
  return out;
}

Json components_json(const std::vector<double>& comps, GradeKind kind) {
  const auto& names = component_names(kind);
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size() && i < comps.size(); ++i)
    out[names[i]] = comps[i];
  return out;
}

std::vector<GradeRange> parse_ranges(const Json& j, GradeKind kind) {
  const auto& names = component_names(kind);
  std::vector<GradeRange> out;
  for (const auto& name : names) out.push_back(parse_range(field(j, name)));
  return out;
}

Json ranges_json(const std::vector<GradeRange>& ranges, GradeKind kind) {
  const auto& names = component_names(kind);
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size() && i < ranges.size(); ++i)
    out[names[i]] = range_json(ranges[i]);
  return out;
}

GradeKind base_grade_kind(const std::string& kind_id) {
  std::string base = kind_id;
  for (const char* suffix : {"_over", "_under", "_off"}) {
    std::size_t n = std::string(suffix).size();
    if (base.size() > n && base.substr(base.size() - n) == suffix) {
      base = base.substr(0, base.size() - n);
      break;
    }
  }
  auto kind = kind_from_name(base);
  if (!kind) throw ParseError("unknown grade kind in \"" + kind_id + "\"");
  return *kind;
}

// --- graded sets ---------------------------------------------------------------

GradedSet parse_graded_set(const std::string& kind_id, const Json& p) {
  GradedSet s;
  s.kind = base_grade_kind(kind_id);
  s.universe = parse_universe(field(p, "universe"));
  s.ranges = parse_ranges(field(p, "ranges"), s.kind);
  for (const auto& [element, tuple] : field(p, "grades").items())
    s.grades[element] = parse_components(tuple, s.kind);
  return s;
}

Json graded_set_json(const GradedSet& s) {
  Json grades = Json::object();
  for (const auto& [e, comps] : s.grades) grades[e] = components_json(comps, s.kind);
  return Json{{"universe", universe_json(s.universe)},
              {"ranges", ranges_json(s.ranges, s.kind)},
              {"grades", grades}};
}

MultiGradedSet parse_multigraded_set(const Json& p) {
  MultiGradedSet s;
  s.universe = parse_universe(field(p, "universe"));
  GradeRange range = p.contains("range") ? parse_range(p["range"])
                                         : GradeRange::standard();
  for (const auto& [e, g] : field(p, "grades").items()) {
    MultiGrade m;
    m.truths = parse_doubles(field(g, "T"));
    m.indeterminacies = parse_doubles(field(g, "I"));
    m.falsities = parse_doubles(field(g, "F"));
    m.range = range;
    s.grades[e] = std::move(m);
  }
  return s;
}

Json multigraded_set_json(const MultiGradedSet& s) {
  Json grades = Json::object();
  GradeRange range = GradeRange::standard();
  for (const auto& [e, m] : s.grades) {
    grades[e] = Json{{"T", doubles_json(m.truths)},
                     {"I", doubles_json(m.indeterminacies)},
                     {"F", doubles_json(m.falsities)}};
    range = m.range;
  }
  return Json{{"universe", universe_json(s.universe)},
              {"range", range_json(range)},
              {"grades", grades}};
}

MultiCrispSet parse_multicrisp_set(const Json& p) {
  MultiCrispSet s;
  s.universe = parse_universe(field(p, "universe"));
  for (const auto& [e, g] : field(p, "evaluations").items()) {
    MultiCrispGrade mc;
    for (const auto& b : g) mc.evaluations.push_back(b.get<int>() != 0);
    s.grades[e] = std::move(mc);
  }
  return s;
}

Json multicrisp_set_json(const MultiCrispSet& s) {
  Json evals = Json::object();
  for (const auto& [e, g] : s.grades) {
    Json row = Json::array();
    for (bool b : g.evaluations) row.push_back(b ? 1 : 0);
    evals[e] = row;
  }
  return Json{{"universe", universe_json(s.universe)}, {"evaluations", evals}};
}

// --- plithogenic -----------------------------------------------------------------

PlithogenicSet parse_plithogenic(const Json& p) {
  PlithogenicSet ps;
  ps.carrier = parse_universe(field(p, "carrier"));
  const Json& attr = field(p, "attribute");
  ps.spec.name = field(attr, "name").get<std::string>();
  ps.spec.values = parse_strings(field(attr, "values"));
  ps.general_flag = p.value("general", false);
  ps.daf.dims = field(p, "s").get<std::size_t>();
  ps.dcf.dims = field(p, "t").get<std::size_t>();
  if (p.contains("ranges"))
    for (const auto& r : p["ranges"]) ps.daf.ranges.push_back(parse_range(r));
  else
    ps.daf.ranges.assign(ps.daf.dims, GradeRange::standard());
  for (const auto& entry : field(p, "daf"))
    ps.daf.entries[{field(entry, "element").get<std::string>(),
                    field(entry, "value").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  for (const auto& entry : field(p, "dcf"))
    ps.dcf.entries[{field(entry, "a").get<std::string>(),
                    field(entry, "b").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  return ps;
}

Json plithogenic_json(const PlithogenicSet& ps) {
  Json daf = Json::array();
  for (const auto& [key, degrees] : ps.daf.entries)
    daf.push_back(Json{{"element", key.first},
                       {"value", key.second},
                       {"degrees", doubles_json(degrees)}});
  Json dcf = Json::array();
  for (const auto& [key, degrees] : ps.dcf.entries)
    dcf.push_back(
        Json{{"a", key.first}, {"b", key.second}, {"degrees", doubles_json(degrees)}});
  Json ranges = Json::array();
  for (const auto& r : ps.daf.ranges) ranges.push_back(range_json(r));
  return Json{{"carrier", universe_json(ps.carrier)},
              {"attribute",
               Json{{"name", ps.spec.name}, {"values", strings_json(ps.spec.values)}}},
              {"s", ps.daf.dims},
              {"t", ps.dcf.dims},
              {"ranges", ranges},
              {"general", ps.general_flag},
              {"daf", daf},
              {"dcf", dcf}};
}

MultiPlithogenicSet parse_multiplithogenic(const Json& p) {
  MultiPlithogenicSet mps;
  mps.carrier = parse_universe(field(p, "carrier"));
  std::size_t s = field(p, "s").get<std::size_t>();
  mps.dcf.dims = field(p, "t").get<std::size_t>();
  for (const auto& attr : field(p, "attributes")) {
    AttributeSpec spec;
    spec.name = field(attr, "name").get<std::string>();
    spec.values = parse_strings(field(attr, "values"));
    mps.attributes.push_back(std::move(spec));
    mps.dafs.push_back(DAFTable::standard(s));
  }
  for (const auto& entry : field(p, "daf")) {
    std::string attr = field(entry, "attribute").get<std::string>();
    for (std::size_t i = 0; i < mps.attributes.size(); ++i)
      if (mps.attributes[i].name == attr)
        mps.dafs[i].entries[{field(entry, "element").get<std::string>(),
                             field(entry, "value").get<std::string>()}] =
            parse_doubles(field(entry, "degrees"));
  }
  for (const auto& entry : field(p, "dcf"))
    mps.dcf.entries[{field(entry, "a").get<std::string>(),
                     field(entry, "b").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  return mps;
}

Json multiplithogenic_json(const MultiPlithogenicSet& mps) {
  Json attrs = Json::array();
  Json daf = Json::array();
  for (std::size_t i = 0; i < mps.attributes.size(); ++i) {
    attrs.push_back(Json{{"name", mps.attributes[i].name},
                         {"values", strings_json(mps.attributes[i].values)}});
    for (const auto& [key, degrees] : mps.dafs[i].entries)
      daf.push_back(Json{{"attribute", mps.attributes[i].name},
                         {"element", key.first},
                         {"value", key.second},
                         {"degrees", doubles_json(degrees)}});
  }
  Json dcf = Json::array();
  for (const auto& [key, degrees] : mps.dcf.entries)
    dcf.push_back(
        Json{{"a", key.first}, {"b", key.second}, {"degrees", doubles_json(degrees)}});
  return Json{{"carrier", universe_json(mps.carrier)},
              {"attributes", attrs},
              {"s", mps.dims()},
              {"t", mps.dcf.dims},
              {"daf", daf},
              {"dcf", dcf}};
}

AttributeTree parse_tree(const Json& j) {
  AttributeTree tree;
  for (const auto& node : j) {
    std::string id = field(node, "id").get<std::string>();
    std::string parent = node.value("parent", std::string());
    if (!tree.add_child(parent, id))
      throw ParseError("bad tree node " + id);
  }
  return tree;
}

Json tree_json(const AttributeTree& tree) {
  // Level order keeps parents ahead of children.
  Json out = Json::array();
  for (std::size_t level = 1; level <= tree.depth(); ++level) {
    for (const auto& id : tree.nodes_at_level(level)) {
      const auto* node = tree.node(id);
      Json entry{{"id", id}};
      if (!node->parent.empty()) entry["parent"] = node->parent;
      out.push_back(entry);
    }
  }
  return out;
}

TreePlithogenicSet parse_treeplithogenic(const Json& p) {
  TreePlithogenicSet tps;
  tps.carrier = parse_universe(field(p, "carrier"));
  tps.tree = parse_tree(field(p, "tree"));
  std::size_t s = field(p, "s").get<std::size_t>();
  tps.dcf.dims = field(p, "t").get<std::size_t>();
  for (const auto& [node, values] : field(p, "node_values").items())
    tps.node_values[node] = parse_strings(values);
  for (const auto& [node, _] : tps.node_values)
    tps.node_dafs[node] = DAFTable::standard(s);
  for (const auto& entry : field(p, "daf"))
    tps.node_dafs[field(entry, "node").get<std::string>()]
        .entries[{field(entry, "element").get<std::string>(),
                  field(entry, "value").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  for (const auto& entry : field(p, "dcf"))
    tps.dcf.entries[{field(entry, "a").get<std::string>(),
                     field(entry, "b").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  return tps;
}

Json treeplithogenic_json(const TreePlithogenicSet& tps) {
  Json node_values = Json::object();
  for (const auto& [node, values] : tps.node_values)
    node_values[node] = strings_json(values);
  Json daf = Json::array();
  for (const auto& [node, table] : tps.node_dafs)
    for (const auto& [key, degrees] : table.entries)
      daf.push_back(Json{{"node", node},
                         {"element", key.first},
                         {"value", key.second},
                         {"degrees", doubles_json(degrees)}});
  Json dcf = Json::array();
  for (const auto& [key, degrees] : tps.dcf.entries)
    dcf.push_back(
        Json{{"a", key.first}, {"b", key.second}, {"degrees", doubles_json(degrees)}});
  return Json{{"carrier", universe_json(tps.carrier)},
              {"tree", tree_json(tps.tree)},
              {"node_values", node_values},
              {"s", tps.dims()},
              {"t", tps.dcf.dims},
              {"daf", daf},
              {"dcf", dcf}};
}

// --- hyper sets ----------------------------------------------------------------

HyperKind hyper_kind_from_id(const std::string& kind_id) {
  std::string base = kind_id;
  for (const char* suffix : {"_over", "_under", "_off"}) {
    std::size_t n = std::string(suffix).size();
    if (base.size() > n && base.substr(base.size() - n) == suffix) {
      base = base.substr(0, base.size() - n);
      break;
    }
  }
  for (HyperKind k :
       {HyperKind::HyperCrisp, HyperKind::HyperFuzzy, HyperKind::HyperVague,
        HyperKind::HyperNeutrosophic, HyperKind::SubsetValuedNeutrosophic})
    if (hyper_kind_name(k) == base) return k;
  throw ParseError("unknown hyper kind in \"" + kind_id + "\"");
}

GradePointSet parse_points(const Json& j, std::size_t arity) {
  GradePointSet points;
  for (const auto& entry : j) {
    if (entry.is_array())
      points.push_back(parse_doubles(entry));
    else if (arity == 1)
      points.push_back({entry.get<double>()});
    else
      throw ParseError("grade points with arity > 1 must be arrays");
  }
  return points;
}

Json points_json(const GradePointSet& points, std::size_t arity) {
  Json out = Json::array();
  for (const auto& p : points) {
    if (arity == 1 && p.size() == 1)
      out.push_back(p[0]);
    else
      out.push_back(doubles_json(p));
  }
  return out;
}

HyperGradedSet parse_hyper(const std::string& kind_id, const Json& p) {
  HyperGradedSet h;
  h.kind = hyper_kind_from_id(kind_id);
  h.universe = parse_universe(field(p, "universe"));
  h.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  const Json& values = field(p, "values");
  for (const auto& [e, v] : values.items()) {
    if (h.kind == HyperKind::SubsetValuedNeutrosophic) {
      h.values[e] = {parse_doubles(field(v, "T")), parse_doubles(field(v, "I")),
                     parse_doubles(field(v, "F"))};
    } else {
      h.values[e] = parse_points(v, hyper_arity(h.kind));
    }
  }
  return h;
}

Json hyper_json(const HyperGradedSet& h) {
  Json values = Json::object();
  for (const auto& [e, points] : h.values) {
    if (h.kind == HyperKind::SubsetValuedNeutrosophic && points.size() == 3) {
      values[e] = Json{{"T", doubles_json(points[0])},
                       {"I", doubles_json(points[1])},
                       {"F", doubles_json(points[2])}};
    } else {
      values[e] = points_json(points, hyper_arity(h.kind));
    }
  }
  return Json{{"universe", universe_json(h.universe)},
              {"range", range_json(h.range)},
              {"values", values}};
}

SuperHyperKind super_kind_from_id(const std::string& kind_id) {
  for (SuperHyperKind k :
       {SuperHyperKind::SuperHyperCrisp, SuperHyperKind::SuperHyperFuzzy,
        SuperHyperKind::SuperHyperVague, SuperHyperKind::SuperHyperNeutrosophic})
    if (hyper_kind_name(k) == kind_id) return k;
  throw ParseError("unknown superhyper kind \"" + kind_id + "\"");
}

SuperHyperGradedSet parse_superhyper(const std::string& kind_id, const Json& p) {
  SuperHyperGradedSet s;
  s.kind = super_kind_from_id(kind_id);
  s.universe = parse_universe(field(p, "universe"));
  s.level = p.value("level", std::size_t{1});
  s.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  for (const auto& [key, v] : field(p, "values").items())
    s.values[key] = parse_points(v, hyper_arity(s.kind));
  return s;
}

Json superhyper_json(const SuperHyperGradedSet& s) {
  Json values = Json::object();
  for (const auto& [key, points] : s.values)
    values[key] = points_json(points, hyper_arity(s.kind));
  return Json{{"universe", universe_json(s.universe)},
              {"level", s.level},
              {"range", range_json(s.range)},
              {"values", values}};
}

HyperPlithogenicSet parse_hyperplithogenic(const Json& p) {
  HyperPlithogenicSet hp;
  hp.carrier = parse_universe(field(p, "carrier"));
  const Json& attr = field(p, "attribute");
  hp.spec.name = field(attr, "name").get<std::string>();
  hp.spec.values = parse_strings(field(attr, "values"));
  hp.dims = field(p, "s").get<std::size_t>();
  hp.dcf.dims = field(p, "t").get<std::size_t>();
  hp.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  for (const auto& entry : field(p, "hdaf")) {
    GradePointSet points;
    for (const auto& vec : field(entry, "points")) points.push_back(parse_doubles(vec));
    hp.hdaf[{field(entry, "element").get<std::string>(),
             field(entry, "value").get<std::string>()}] = std::move(points);
  }
  for (const auto& entry : field(p, "dcf"))
    hp.dcf.entries[{field(entry, "a").get<std::string>(),
                    field(entry, "b").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  return hp;
}

Json hyperplithogenic_json(const HyperPlithogenicSet& hp) {
  Json hdaf = Json::array();
  for (const auto& [key, points] : hp.hdaf) {
    Json vecs = Json::array();
    for (const auto& p : points) vecs.push_back(doubles_json(p));
    hdaf.push_back(
        Json{{"element", key.first}, {"value", key.second}, {"points", vecs}});
  }
  Json dcf = Json::array();
  for (const auto& [key, degrees] : hp.dcf.entries)
    dcf.push_back(
        Json{{"a", key.first}, {"b", key.second}, {"degrees", doubles_json(degrees)}});
  return Json{{"carrier", universe_json(hp.carrier)},
              {"attribute",
               Json{{"name", hp.spec.name}, {"values", strings_json(hp.spec.values)}}},
              {"s", hp.dims},
              {"t", hp.dcf.dims},
              {"range", range_json(hp.range)},
              {"hdaf", hdaf},
              {"dcf", dcf}};
}

// --- soft family ------------------------------------------------------------------

SoftSet parse_soft(const Json& p) {
  SoftSet s;
  s.universe = parse_universe(field(p, "universe"));
  for (const auto& entry : field(p, "mapping"))
    s.mapping[field(entry, "key").get<std::string>()] =
        parse_element_set(field(entry, "value"));
  return s;
}

Json soft_json(const SoftSet& s) {
  Json mapping = Json::array();
  for (const auto& [key, value] : s.mapping)
    mapping.push_back(Json{{"key", key}, {"value", element_set_json(value)}});
  return Json{{"universe", universe_json(s.universe)}, {"mapping", mapping}};
}

SoftExpertSet parse_softexpert(const Json& p) {
  SoftExpertSet s;
  s.universe = parse_universe(field(p, "universe"));
  s.parameters = parse_strings(field(p, "parameters"));
  s.experts = parse_strings(field(p, "experts"));
  s.opinions = parse_strings(field(p, "opinions"));
  for (const auto& entry : field(p, "mapping")) {
    auto key = parse_strings(field(entry, "key"));
    if (key.size() != 3) throw ParseError("soft expert keys are triples");
    s.mapping[{key[0], key[1], key[2]}] = parse_element_set(field(entry, "value"));
  }
  return s;
}

Json softexpert_json(const SoftExpertSet& s) {
  Json mapping = Json::array();
  for (const auto& [key, value] : s.mapping)
    mapping.push_back(
        Json{{"key", Json::array({std::get<0>(key), std::get<1>(key), std::get<2>(key)})},
             {"value", element_set_json(value)}});
  return Json{{"universe", universe_json(s.universe)},
              {"parameters", strings_json(s.parameters)},
              {"experts", strings_json(s.experts)},
              {"opinions", strings_json(s.opinions)},
              {"mapping", mapping}};
}

MultiSoftSet parse_multisoft(const Json& p) {
  MultiSoftSet m;
  m.universe = parse_universe(field(p, "universe"));
  for (const auto& fam : field(p, "families")) {
    auto params = parse_strings(field(fam, "params"));
    m.families.emplace_back(field(fam, "name").get<std::string>(),
                            ParameterSet(params.begin(), params.end()));
  }
  for (const auto& entry : field(p, "mapping")) {
    auto key = parse_strings(field(entry, "key"));
    m.mapping[ParameterSet(key.begin(), key.end())] =
        parse_element_set(field(entry, "value"));
  }
  return m;
}

Json multisoft_json(const MultiSoftSet& m) {
  Json families = Json::array();
  for (const auto& [name, params] : m.families)
    families.push_back(Json{{"name", name}, {"params", element_set_json(params)}});
  Json mapping = Json::array();
  for (const auto& [key, value] : m.mapping)
    mapping.push_back(
        Json{{"key", element_set_json(key)}, {"value", element_set_json(value)}});
  return Json{{"universe", universe_json(m.universe)},
              {"families", families},
              {"mapping", mapping}};
}

std::vector<AttrDomain> parse_domains(const Json& j) {
  std::vector<AttrDomain> out;
  for (const auto& d : j)
    out.push_back({field(d, "name").get<std::string>(),
                   parse_strings(field(d, "values"))});
  return out;
}

Json domains_json(const std::vector<AttrDomain>& domains) {
  Json out = Json::array();
  for (const auto& d : domains)
    out.push_back(Json{{"name", d.name}, {"values", strings_json(d.values)}});
  return out;
}

HyperSoftSet parse_hypersoft(const Json& p) {
  HyperSoftSet h;
  h.universe = parse_universe(field(p, "universe"));
  h.domains = parse_domains(field(p, "domains"));
  for (const auto& entry : field(p, "mapping"))
    h.mapping[parse_strings(field(entry, "key"))] =
        parse_element_set(field(entry, "value"));
  return h;
}

Json hypersoft_json(const HyperSoftSet& h) {
  Json mapping = Json::array();
  for (const auto& [key, value] : h.mapping)
    mapping.push_back(
        Json{{"key", strings_json(key)}, {"value", element_set_json(value)}});
  return Json{{"universe", universe_json(h.universe)},
              {"domains", domains_json(h.domains)},
              {"mapping", mapping}};
}

SuperHyperSoftSet parse_superhypersoft(const Json& p) {
  SuperHyperSoftSet s;
  s.universe = parse_universe(field(p, "universe"));
  s.domains = parse_domains(field(p, "domains"));
  for (const auto& entry : field(p, "mapping")) {
    std::vector<std::vector<std::string>> key;
    for (const auto& part : field(entry, "key")) key.push_back(parse_strings(part));
    s.mapping[std::move(key)] = parse_element_set(field(entry, "value"));
  }
  return s;
}

Json superhypersoft_json(const SuperHyperSoftSet& s) {
  Json mapping = Json::array();
  for (const auto& [key, value] : s.mapping) {
    Json parts = Json::array();
    for (const auto& part : key) parts.push_back(strings_json(part));
    mapping.push_back(Json{{"key", parts}, {"value", element_set_json(value)}});
  }
  return Json{{"universe", universe_json(s.universe)},
              {"domains", domains_json(s.domains)},
              {"mapping", mapping}};
}

TreeSoftSet parse_treesoft(const Json& p) {
  TreeSoftSet t;
  t.universe = parse_universe(field(p, "universe"));
  t.tree = parse_tree(field(p, "tree"));
  for (const auto& entry : field(p, "mapping")) {
    auto key = parse_strings(field(entry, "key"));
    t.mapping[NodeKey(key.begin(), key.end())] =
        parse_element_set(field(entry, "value"));
  }
  return t;
}

Json treesoft_json(const TreeSoftSet& t) {
  Json mapping = Json::array();
  for (const auto& [key, value] : t.mapping)
    mapping.push_back(
        Json{{"key", element_set_json(key)}, {"value", element_set_json(value)}});
  return Json{{"universe", universe_json(t.universe)},
              {"tree", tree_json(t.tree)},
              {"mapping", mapping}};
}

RankedSoftSet parse_ranked_soft(const Json& p) {
  RankedSoftSet r;
  r.universe = parse_universe(field(p, "universe"));
  for (const auto& entry : field(p, "mapping")) {
    RankedPartition partition;
    for (const auto& block : field(entry, "partition"))
      partition.push_back(parse_element_set(block));
    r.mapping[field(entry, "key").get<std::string>()] = std::move(partition);
  }
  return r;
}

Json ranked_soft_json(const RankedSoftSet& r) {
  Json mapping = Json::array();
  for (const auto& [key, partition] : r.mapping) {
    Json blocks = Json::array();
    for (const auto& block : partition) blocks.push_back(element_set_json(block));
    mapping.push_back(Json{{"key", key}, {"partition", blocks}});
  }
  return Json{{"universe", universe_json(r.universe)}, {"mapping", mapping}};
}

RankedHyperSoftSet parse_ranked_hypersoft(const Json& p) {
  RankedHyperSoftSet r;
  r.universe = parse_universe(field(p, "universe"));
  r.domains = parse_domains(field(p, "domains"));
  for (const auto& entry : field(p, "mapping")) {
    RankedPartition partition;
    for (const auto& block : field(entry, "partition"))
      partition.push_back(parse_element_set(block));
    r.mapping[parse_strings(field(entry, "key"))] = std::move(partition);
  }
  return r;
}

Json ranked_hypersoft_json(const RankedHyperSoftSet& r) {
  Json mapping = Json::array();
  for (const auto& [key, partition] : r.mapping) {
    Json blocks = Json::array();
    for (const auto& block : partition) blocks.push_back(element_set_json(block));
    mapping.push_back(Json{{"key", strings_json(key)}, {"partition", blocks}});
  }
  return Json{{"universe", universe_json(r.universe)},
              {"domains", domains_json(r.domains)},
              {"mapping", mapping}};
}

GradedSoftValue parse_graded_value(const Json& entry) {
  GradedSoftValue gv;
  gv.members = parse_element_set(field(entry, "members"));
  for (const auto& [e, g] : field(entry, "grades").items())
    gv.grades[e] = {field(g, "T").get<double>(), field(g, "I").get<double>(),
                    field(g, "F").get<double>()};
  return gv;
}

Json graded_value_json(const GradedSoftValue& gv) {
  Json grades = Json::object();
  for (const auto& [e, g] : gv.grades)
    grades[e] = Json{{"T", g[0]}, {"I", g[1]}, {"F", g[2]}};
  return Json{{"members", element_set_json(gv.members)}, {"grades", grades}};
}

template <typename T>
T parse_graded_layer(const Json& p) {
  T out;
  out.universe = parse_universe(field(p, "universe"));
  for (const auto& entry : field(p, "mapping")) {
    auto key = parse_strings(field(entry, "key"));
    GradedSoftValue gv = parse_graded_value(entry);
    out.mapping[typename decltype(out.mapping)::key_type(key.begin(), key.end())] =
        std::move(gv);
  }
  return out;
}

template <typename T>
Json graded_layer_json(const T& layer) {
  Json mapping = Json::array();
  for (const auto& [key, gv] : layer.mapping) {
    Json entry = graded_value_json(gv);
    entry["key"] = element_set_json(ElementSet(key.begin(), key.end()));
    mapping.push_back(entry);
  }
  return Json{{"universe", universe_json(layer.universe)}, {"mapping", mapping}};
}

// --- graphs -------------------------------------------------------------------

CrispGraph parse_crisp_graph(const Json& p) {
  CrispGraph g;
  g.vertices = parse_universe(field(p, "vertices"));
  for (const auto& e : field(p, "edges")) g.edges.insert(parse_edge(e));
  return g;
}

Json crisp_graph_json(const CrispGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(edge_json(e));
  return Json{{"vertices", universe_json(g.vertices)}, {"edges", edges}};
}

GradedGraph parse_graded_graph(const std::string& kind_id, const Json& p) {
  GradedGraph g;
  std::string grade_id = kind_id;
  auto pos = grade_id.find("_graph");
  grade_id.erase(pos, 6);
  g.kind = base_grade_kind(grade_id);
  g.base = parse_crisp_graph(p);
  g.ranges = parse_ranges(field(p, "ranges"), g.kind);
  for (const auto& [v, tuple] : field(p, "vertex_grades").items())
    g.vertex_grades[v] = parse_components(tuple, g.kind);
  for (const auto& entry : field(p, "edge_grades"))
    g.edge_grades[parse_edge(field(entry, "edge"))] =
        parse_components(field(entry, "grade"), g.kind);
  return g;
}

Json graded_graph_json(const GradedGraph& g) {
  Json out = crisp_graph_json(g.base);
  out["ranges"] = ranges_json(g.ranges, g.kind);
  Json vgrades = Json::object();
  for (const auto& [v, comps] : g.vertex_grades)
    vgrades[v] = components_json(comps, g.kind);
  out["vertex_grades"] = vgrades;
  Json egrades = Json::array();
  for (const auto& [e, comps] : g.edge_grades)
    egrades.push_back(
        Json{{"edge", edge_json(e)}, {"grade", components_json(comps, g.kind)}});
  out["edge_grades"] = egrades;
  return out;
}

HyperFuzzyGraph parse_hyperfuzzy_graph(const Json& p) {
  HyperFuzzyGraph g;
  g.base = parse_crisp_graph(p);
  g.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  for (const auto& [v, values] : field(p, "vertex_values").items())
    g.vertex_sets[v] = parse_doubles(values);
  for (const auto& entry : field(p, "edge_values"))
    g.edge_sets[parse_edge(field(entry, "edge"))] =
        parse_doubles(field(entry, "values"));
  return g;
}

Json hyperfuzzy_graph_json(const HyperFuzzyGraph& g) {
  Json out = crisp_graph_json(g.base);
  out["range"] = range_json(g.range);
  Json vvalues = Json::object();
  for (const auto& [v, values] : g.vertex_sets) vvalues[v] = doubles_json(values);
  out["vertex_values"] = vvalues;
  Json evalues = Json::array();
  for (const auto& [e, values] : g.edge_sets)
    evalues.push_back(Json{{"edge", edge_json(e)}, {"values", doubles_json(values)}});
  out["edge_values"] = evalues;
  return out;
}

PlithogenicGraph parse_plithogenic_graph(const std::string& kind_id, const Json& p) {
  PlithogenicGraph pg;
  pg.general_flag = kind_id.rfind("general_", 0) == 0;
  pg.base = parse_crisp_graph(p);
  pg.dims = field(p, "s").get<std::size_t>();
  pg.cdims = field(p, "t").get<std::size_t>();
  pg.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  const Json& vattr = field(p, "vertex_attribute");
  pg.vertex_attr = field(vattr, "name").get<std::string>();
  pg.vertex_values = parse_strings(field(vattr, "values"));
  const Json& eattr = field(p, "edge_attribute");
  pg.edge_attr = field(eattr, "name").get<std::string>();
  for (const auto& pair : field(eattr, "values")) {
    auto parts = parse_strings(pair);
    if (parts.size() != 2) throw ParseError("edge attribute values are pairs");
    pg.edge_values.push_back({parts[0], parts[1]});
  }
  for (const auto& entry : field(p, "adf"))
    pg.adf[{field(entry, "vertex").get<std::string>(),
            field(entry, "value").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  for (const auto& entry : field(p, "bdf")) {
    auto value = parse_strings(field(entry, "value"));
    if (value.size() != 2) throw ParseError("bdf values are pairs");
    pg.bdf[{parse_edge(field(entry, "edge")), {value[0], value[1]}}] =
        parse_doubles(field(entry, "degrees"));
  }
  for (const auto& entry : field(p, "acf"))
    pg.acf.entries[{field(entry, "a").get<std::string>(),
                    field(entry, "b").get<std::string>()}] =
        parse_doubles(field(entry, "degrees"));
  pg.acf.dims = pg.cdims;
  for (const auto& entry : field(p, "bcf")) {
    auto a = parse_strings(field(entry, "a"));
    auto b = parse_strings(field(entry, "b"));
    if (a.size() != 2 || b.size() != 2) throw ParseError("bcf keys are pairs");
    pg.bcf[{{a[0], a[1]}, {b[0], b[1]}}] = parse_doubles(field(entry, "degrees"));
  }
  return pg;
}

Json plithogenic_graph_json(const PlithogenicGraph& pg) {
  Json out = crisp_graph_json(pg.base);
  out["s"] = pg.dims;
  out["t"] = pg.cdims;
  out["range"] = range_json(pg.range);
  out["vertex_attribute"] =
      Json{{"name", pg.vertex_attr}, {"values", strings_json(pg.vertex_values)}};
  Json evalues = Json::array();
  for (const auto& [a, b] : pg.edge_values) evalues.push_back(Json::array({a, b}));
  out["edge_attribute"] = Json{{"name", pg.edge_attr}, {"values", evalues}};
  Json adf = Json::array();
  for (const auto& [key, degrees] : pg.adf)
    adf.push_back(Json{{"vertex", key.first},
                       {"value", key.second},
                       {"degrees", doubles_json(degrees)}});
  out["adf"] = adf;
  Json bdf = Json::array();
  for (const auto& [key, degrees] : pg.bdf)
    bdf.push_back(Json{{"edge", edge_json(key.first)},
                       {"value", Json::array({key.second.first, key.second.second})},
                       {"degrees", doubles_json(degrees)}});
  out["bdf"] = bdf;
  Json acf = Json::array();
  for (const auto& [key, degrees] : pg.acf.entries)
    acf.push_back(
        Json{{"a", key.first}, {"b", key.second}, {"degrees", doubles_json(degrees)}});
  out["acf"] = acf;
  Json bcf = Json::array();
  for (const auto& [key, degrees] : pg.bcf)
    bcf.push_back(Json{{"a", Json::array({key.first.first, key.first.second})},
                       {"b", Json::array({key.second.first, key.second.second})},
                       {"degrees", doubles_json(degrees)}});
  out["bcf"] = bcf;
  return out;
}

MultiGradedGraph parse_multigraded_graph(const std::string& kind_id, const Json& p) {
  MultiGradedGraph mg;
  mg.kind = kind_id == "multineutrosophic_graph"
                ? MultiGraphKind::MultiNeutrosophic
            : kind_id == "multiquadripartitioned_graph"
                ? MultiGraphKind::MultiQuadripartitioned
                : MultiGraphKind::MultiPentapartitioned;
  mg.base = parse_crisp_graph(p);
  if (mg.kind == MultiGraphKind::MultiNeutrosophic) {
    for (const auto& [v, g] : field(p, "vertex_grades").items()) {
      MultiGrade m;
      m.truths = parse_doubles(field(g, "T"));
      m.indeterminacies = parse_doubles(field(g, "I"));
      m.falsities = parse_doubles(field(g, "F"));
      mg.vertex_multi[v] = std::move(m);
    }
    for (const auto& entry : field(p, "edge_grades")) {
      MultiGrade m;
      m.truths = parse_doubles(field(entry, "T"));
      m.indeterminacies = parse_doubles(field(entry, "I"));
      m.falsities = parse_doubles(field(entry, "F"));
      mg.edge_multi[parse_edge(field(entry, "edge"))] = std::move(m);
    }
  } else {
    for (const auto& [v, list] : field(p, "vertex_grades").items()) {
      std::vector<std::vector<double>> tuples;
      for (const auto& t : list) tuples.push_back(parse_doubles(t));
      mg.vertex_tuples[v] = std::move(tuples);
    }
    for (const auto& entry : field(p, "edge_grades")) {
      std::vector<std::vector<double>> tuples;
      for (const auto& t : field(entry, "tuples")) tuples.push_back(parse_doubles(t));
      mg.edge_tuples[parse_edge(field(entry, "edge"))] = std::move(tuples);
    }
  }
  return mg;
}

Json multigraded_graph_json(const MultiGradedGraph& mg) {
  Json out = crisp_graph_json(mg.base);
  if (mg.kind == MultiGraphKind::MultiNeutrosophic) {
    Json vgrades = Json::object();
    for (const auto& [v, m] : mg.vertex_multi)
      vgrades[v] = Json{{"T", doubles_json(m.truths)},
                        {"I", doubles_json(m.indeterminacies)},
                        {"F", doubles_json(m.falsities)}};
    out["vertex_grades"] = vgrades;
    Json egrades = Json::array();
    for (const auto& [e, m] : mg.edge_multi)
      egrades.push_back(Json{{"edge", edge_json(e)},
                             {"T", doubles_json(m.truths)},
                             {"I", doubles_json(m.indeterminacies)},
                             {"F", doubles_json(m.falsities)}});
    out["edge_grades"] = egrades;
  } else {
    Json vgrades = Json::object();
    for (const auto& [v, tuples] : mg.vertex_tuples) {
      Json list = Json::array();
      for (const auto& t : tuples) list.push_back(doubles_json(t));
      vgrades[v] = list;
    }
    out["vertex_grades"] = vgrades;
    Json egrades = Json::array();
    for (const auto& [e, tuples] : mg.edge_tuples) {
      Json list = Json::array();
      for (const auto& t : tuples) list.push_back(doubles_json(t));
      egrades.push_back(Json{{"edge", edge_json(e)}, {"tuples", list}});
    }
    out["edge_grades"] = egrades;
  }
  return out;
}

Hypergraph parse_hypergraph(const Json& p) {
  Hypergraph h;
  h.vertices = parse_universe(field(p, "vertices"));
  for (const auto& he : field(p, "hyperedges"))
    h.hyperedges.push_back(parse_element_set(he));
  return h;
}

Json hypergraph_json(const Hypergraph& h) {
  Json hyperedges = Json::array();
  for (const auto& he : h.hyperedges) hyperedges.push_back(element_set_json(he));
  return Json{{"vertices", universe_json(h.vertices)}, {"hyperedges", hyperedges}};
}

NeutroHypergraph parse_neutro_hypergraph(const Json& p) {
  NeutroHypergraph h;
  h.shape = parse_hypergraph(p);
  h.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  for (const auto& [v, g] : field(p, "vertex_grades").items())
    h.vertex_grades[v] = {field(g, "T").get<double>(), field(g, "I").get<double>(),
                          field(g, "F").get<double>()};
  for (const auto& g : field(p, "edge_grades"))
    h.edge_grades.push_back({field(g, "T").get<double>(),
                             field(g, "I").get<double>(),
                             field(g, "F").get<double>()});
  return h;
}

Json neutro_hypergraph_json(const NeutroHypergraph& h) {
  Json out = hypergraph_json(h.shape);
  out["range"] = range_json(h.range);
  Json vgrades = Json::object();
  for (const auto& [v, g] : h.vertex_grades)
    vgrades[v] = Json{{"T", g[0]}, {"I", g[1]}, {"F", g[2]}};
  out["vertex_grades"] = vgrades;
  Json egrades = Json::array();
  for (const auto& g : h.edge_grades)
    egrades.push_back(Json{{"T", g[0]}, {"I", g[1]}, {"F", g[2]}});
  out["edge_grades"] = egrades;
  return out;
}

SuperHyperGraph parse_superhypergraph(const Json& p) {
  SuperHyperGraph g;
  g.base = parse_universe(field(p, "base"));
  g.level = p.value("level", std::size_t{1});
  for (const auto& sv : field(p, "supervertices")) {
    auto parsed = parse_nested(sv.get<std::string>());
    if (!parsed) throw ParseError("bad supervertex encoding");
    g.supervertices.push_back(*parsed);
  }
  for (const auto& se : field(p, "superedges")) {
    auto parsed = parse_nested(se.get<std::string>());
    if (!parsed) throw ParseError("bad superedge encoding");
    g.superedges.push_back(*parsed);
  }
  return g;
}

Json superhypergraph_json(const SuperHyperGraph& g) {
  Json svs = Json::array();
  for (const auto& sv : g.supervertices) svs.push_back(sv.to_string());
  Json ses = Json::array();
  for (const auto& se : g.superedges) ses.push_back(se.to_string());
  return Json{{"base", universe_json(g.base)},
              {"level", g.level},
              {"supervertices", svs},
              {"superedges", ses}};
}

SoftGraph parse_soft_graph(const Json& p) {
  SoftGraph sg;
  sg.base = parse_crisp_graph(p);
  for (const auto& entry : field(p, "mapping")) {
    auto key = parse_strings(field(entry, "key"));
    ElementSet fv = parse_element_set(field(entry, "vertices"));
    EdgeSet ke;
    for (const auto& e : field(entry, "subgraph_edges")) ke.insert(parse_edge(e));
    sg.mapping[ParameterSet(key.begin(), key.end())] = {std::move(fv), std::move(ke)};
  }
  return sg;
}

Json soft_graph_json(const SoftGraph& sg) {
  Json out = crisp_graph_json(sg.base);
  Json mapping = Json::array();
  for (const auto& [key, value] : sg.mapping) {
    Json edges = Json::array();
    for (const auto& e : value.second) edges.push_back(edge_json(e));
    mapping.push_back(Json{{"key", element_set_json(key)},
                           {"vertices", element_set_json(value.first)},
                           {"subgraph_edges", edges}});
  }
  out["mapping"] = mapping;
  return out;
}

NeutroSoftGraph parse_neutro_soft_graph(const Json& p) {
  NeutroSoftGraph g;
  g.base = parse_crisp_graph(p);
  g.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  for (const auto& entry : field(p, "mapping")) {
    NeutroSoftGraph::Layer layer;
    layer.vertices = parse_element_set(field(entry, "vertices"));
    for (const auto& [v, t] : field(entry, "vertex_grades").items())
      layer.vertex_grades[v] = {field(t, "T").get<double>(),
                                field(t, "I").get<double>(),
                                field(t, "F").get<double>()};
    for (const auto& eg : field(entry, "edge_grades")) {
      Edge e = parse_edge(field(eg, "edge"));
      layer.edges.insert(e);
      layer.edge_grades[e] = {field(eg, "T").get<double>(),
                              field(eg, "I").get<double>(),
                              field(eg, "F").get<double>()};
    }
    g.mapping[field(entry, "key").get<std::string>()] = std::move(layer);
  }
  return g;
}

Json neutro_soft_graph_json(const NeutroSoftGraph& g) {
  Json out = crisp_graph_json(g.base);
  out["range"] = range_json(g.range);
  Json mapping = Json::array();
  for (const auto& [key, layer] : g.mapping) {
    Json vgrades = Json::object();
    for (const auto& [v, t] : layer.vertex_grades)
      vgrades[v] = Json{{"T", t[0]}, {"I", t[1]}, {"F", t[2]}};
    Json egrades = Json::array();
    for (const auto& [e, t] : layer.edge_grades)
      egrades.push_back(Json{
          {"edge", edge_json(e)}, {"T", t[0]}, {"I", t[1]}, {"F", t[2]}});
    mapping.push_back(Json{{"key", key},
                           {"vertices", element_set_json(layer.vertices)},
                           {"vertex_grades", vgrades},
                           {"edge_grades", egrades}});
  }
  out["mapping"] = mapping;
  return out;
}

HyperSoftGraph parse_hypersoft_graph(const Json& p) {
  HyperSoftGraph g;
  g.base = parse_crisp_graph(p);
  g.domains = parse_domains(field(p, "domains"));
  g.range = p.contains("range") ? parse_range(p["range"]) : GradeRange::standard();
  for (const auto& entry : field(p, "mapping")) {
    HyperSoftGraph::Context ctx;
    ctx.vertices = parse_element_set(field(entry, "vertices"));
    if (entry.contains("vertex_grades"))
      for (const auto& [v, t] : entry["vertex_grades"].items())
        ctx.vertex_grades[v] = {field(t, "T").get<double>(),
                                field(t, "I").get<double>(),
                                field(t, "F").get<double>()};
    if (entry.contains("edge_grades"))
      for (const auto& eg : entry["edge_grades"])
        ctx.edge_grades[parse_edge(field(eg, "edge"))] = {
            field(eg, "T").get<double>(), field(eg, "I").get<double>(),
            field(eg, "F").get<double>()};
    g.mapping[parse_strings(field(entry, "key"))] = std::move(ctx);
  }
  return g;
}

Json hypersoft_graph_json(const HyperSoftGraph& g) {
  Json out = crisp_graph_json(g.base);
  out["domains"] = domains_json(g.domains);
  out["range"] = range_json(g.range);
  Json mapping = Json::array();
  for (const auto& [key, ctx] : g.mapping) {
    Json vgrades = Json::object();
    for (const auto& [v, t] : ctx.vertex_grades)
      vgrades[v] = Json{{"T", t[0]}, {"I", t[1]}, {"F", t[2]}};
    Json egrades = Json::array();
    for (const auto& [e, t] : ctx.edge_grades)
      egrades.push_back(Json{
          {"edge", edge_json(e)}, {"T", t[0]}, {"I", t[1]}, {"F", t[2]}});
    mapping.push_back(Json{{"key", strings_json(key)},
                           {"vertices", element_set_json(ctx.vertices)},
                           {"vertex_grades", vgrades},
                           {"edge_grades", egrades}});
  }
  out["mapping"] = mapping;
  return out;
}

WeightedGraph parse_weighted_graph(const Json& p) {
  WeightedGraph g;
  g.base = parse_crisp_graph(p);
  for (const auto& entry : field(p, "weights"))
    g.weights[parse_edge(field(entry, "edge"))] = field(entry, "value").get<double>();
  return g;
}

Json weighted_graph_json(const WeightedGraph& g) {
  Json out = crisp_graph_json(g.base);
  Json weights = Json::array();
  for (const auto& [e, w] : g.weights)
    weights.push_back(Json{{"edge", edge_json(e)}, {"value", w}});
  out["weights"] = weights;
  return out;
}

HyperWeightedGraph parse_hyperweighted_graph(const Json& p) {
  HyperWeightedGraph g;
  g.base = parse_crisp_graph(p);
  for (const auto& entry : field(p, "weights"))
    g.weights[parse_edge(field(entry, "edge"))] =
        parse_doubles(field(entry, "value"));
  return g;
}

Json hyperweighted_graph_json(const HyperWeightedGraph& g) {
  Json out = crisp_graph_json(g.base);
  Json weights = Json::array();
  for (const auto& [e, ws] : g.weights)
    weights.push_back(Json{{"edge", edge_json(e)}, {"value", doubles_json(ws)}});
  out["weights"] = weights;
  return out;
}

SuperHyperWeightedGraph parse_superhyperweighted_graph(const Json& p) {
  SuperHyperWeightedGraph g;
  g.base = parse_crisp_graph(p);
  for (const auto& entry : field(p, "weights")) {
    std::vector<std::vector<double>> sets;
    for (const auto& hyper : field(entry, "value")) sets.push_back(parse_doubles(hyper));
    g.weights[parse_edge(field(entry, "edge"))] = std::move(sets);
  }
  return g;
}

Json superhyperweighted_graph_json(const SuperHyperWeightedGraph& g) {
  Json out = crisp_graph_json(g.base);
  Json weights = Json::array();
  for (const auto& [e, sets] : g.weights) {
    Json hyper = Json::array();
    for (const auto& ws : sets) hyper.push_back(doubles_json(ws));
    weights.push_back(Json{{"edge", edge_json(e)}, {"value", hyper}});
  }
  out["weights"] = weights;
  return out;
}

LabeledGraph parse_labeled_graph(const Json& p) {
  LabeledGraph g;
  g.base = parse_crisp_graph(p);
  for (const auto& [v, l] : field(p, "vertex_labels").items())
    g.vertex_labels[v] = l.get<std::string>();
  for (const auto& entry : field(p, "edge_labels"))
    g.edge_labels[parse_edge(field(entry, "edge"))] =
        field(entry, "value").get<std::string>();
  return g;
}

Json labeled_graph_json(const LabeledGraph& g) {
  Json out = crisp_graph_json(g.base);
  Json vlabels = Json::object();
  for (const auto& [v, l] : g.vertex_labels) vlabels[v] = l;
  out["vertex_labels"] = vlabels;
  Json elabels = Json::array();
  for (const auto& [e, l] : g.edge_labels)
    elabels.push_back(Json{{"edge", edge_json(e)}, {"value", l}});
  out["edge_labels"] = elabels;
  return out;
}

HyperLabeledGraph parse_hyperlabeled_graph(const Json& p) {
  HyperLabeledGraph g;
  g.base = parse_crisp_graph(p);
  for (const auto& [v, ls] : field(p, "vertex_labels").items())
    g.vertex_labels[v] = parse_strings(ls);
  for (const auto& entry : field(p, "edge_labels"))
    g.edge_labels[parse_edge(field(entry, "edge"))] =
        parse_strings(field(entry, "value"));
  return g;
}

Json hyperlabeled_graph_json(const HyperLabeledGraph& g) {
  Json out = crisp_graph_json(g.base);
  Json vlabels = Json::object();
  for (const auto& [v, ls] : g.vertex_labels) vlabels[v] = strings_json(ls);
  out["vertex_labels"] = vlabels;
  Json elabels = Json::array();
  for (const auto& [e, ls] : g.edge_labels)
    elabels.push_back(Json{{"edge", edge_json(e)}, {"value", strings_json(ls)}});
  out["edge_labels"] = elabels;
  return out;
}

SuperHyperLabeledGraph parse_superhyperlabeled_graph(const Json& p) {
  SuperHyperLabeledGraph g;
  g.base = parse_crisp_graph(p);
  for (const auto& [v, sets] : field(p, "vertex_labels").items()) {
    std::vector<std::vector<std::string>> out;
    for (const auto& ls : sets) out.push_back(parse_strings(ls));
    g.vertex_labels[v] = std::move(out);
  }
  for (const auto& entry : field(p, "edge_labels")) {
    std::vector<std::vector<std::string>> out;
    for (const auto& ls : field(entry, "value")) out.push_back(parse_strings(ls));
    g.edge_labels[parse_edge(field(entry, "edge"))] = std::move(out);
  }
  return g;
}

Json superhyperlabeled_graph_json(const SuperHyperLabeledGraph& g) {
  Json out = crisp_graph_json(g.base);
  Json vlabels = Json::object();
  for (const auto& [v, sets] : g.vertex_labels) {
    Json list = Json::array();
    for (const auto& ls : sets) list.push_back(strings_json(ls));
    vlabels[v] = list;
  }
  out["vertex_labels"] = vlabels;
  Json elabels = Json::array();
  for (const auto& [e, sets] : g.edge_labels) {
    Json list = Json::array();
    for (const auto& ls : sets) list.push_back(strings_json(ls));
    elabels.push_back(Json{{"edge", edge_json(e)}, {"value", list}});
  }
  out["edge_labels"] = elabels;
  return out;
}

bool id_has_suffixed_base(const std::string& id, const std::string& base) {
  if (id == base) return true;
  for (const char* suffix : {"_over", "_under", "_off"})
    if (id == base + suffix) return true;
  return false;
}

}  // namespace

// --- dispatch -------------------------------------------------------------------

Instance parse_document(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  std::string kind = field(doc, "kind").get<std::string>();
  const Json& p = field(doc, "payload");
  if (!default_registry().has_kind(kind))
    throw ParseError("kind \"" + kind + "\" is not registered");

  Payload payload;
  auto is_graded_graph = [&](const std::string& id) {
    for (GradeKind k :
         {GradeKind::Fuzzy, GradeKind::IntuitionisticFuzzy, GradeKind::Neutrosophic,
          GradeKind::Quadripartitioned, GradeKind::Pentapartitioned,
          GradeKind::Heptapartitioned, GradeKind::DoubleValued})
      if (id_has_suffixed_base(id, kind_name(k) + "_graph") ||
          id == kind_name(k) + "_graph_over" || id == kind_name(k) + "_graph_under" ||
          id == kind_name(k) + "_graph_off")
        return true;
    return false;
  };
  auto strip_regime = [](std::string id) {
    for (const char* suffix : {"_over", "_under", "_off"}) {
      std::size_t n = std::string(suffix).size();
      if (id.size() > n && id.substr(id.size() - n) == suffix)
        return id.substr(0, id.size() - n);
    }
    return id;
  };
  const std::string base = strip_regime(kind);

  if (kind == "multineutrosophic")
    payload = parse_multigraded_set(p);
  else if (kind == "multicrisp")
    payload = parse_multicrisp_set(p);
  else if (base == "plithogenic")
    payload = parse_plithogenic(p);
  else if (kind == "multiplithogenic")
    payload = parse_multiplithogenic(p);
  else if (kind == "treeplithogenic")
    payload = parse_treeplithogenic(p);
  else if (kind == "hyperplithogenic")
    payload = parse_hyperplithogenic(p);
  else if (base == "hypercrisp" || base == "hyperfuzzy" || base == "hypervague" ||
           base == "hyperneutrosophic" || base == "subsetvaluedneutrosophic")
    payload = parse_hyper(kind, p);
  else if (kind == "superhypercrisp" || kind == "superhyperfuzzy" ||
           kind == "superhypervague" || kind == "superhyperneutrosophic")
    payload = parse_superhyper(kind, p);
  else if (kind == "soft" || kind == "bijective_soft")
    payload = parse_soft(p);
  else if (kind == "softexpert")
    payload = parse_softexpert(p);
  else if (kind == "multisoft")
    payload = parse_multisoft(p);
  else if (kind == "hypersoft")
    payload = parse_hypersoft(p);
  else if (kind == "superhypersoft")
    payload = parse_superhypersoft(p);
  else if (kind == "treesoft" || kind == "bijective_treesoft")
    payload = parse_treesoft(p);
  else if (kind == "ranked_soft")
    payload = parse_ranked_soft(p);
  else if (kind == "ranked_hypersoft")
    payload = parse_ranked_hypersoft(p);
  else if (kind == "neutrosophic_multisoft")
    payload = parse_graded_layer<NeutroMultiSoftSet>(p);
  else if (kind == "neutrosophic_treesoft")
    payload = parse_graded_layer<NeutroTreeSoftSet>(p);
  else if (kind == "crisp_graph")
    payload = parse_crisp_graph(p);
  else if (kind == "hyperfuzzy_graph")
    payload = parse_hyperfuzzy_graph(p);
  else if (is_graded_graph(kind))
    payload = parse_graded_graph(kind, p);
  else if (kind == "plithogenic_graph" || kind == "general_plithogenic_graph")
    payload = parse_plithogenic_graph(kind, p);
  else if (kind == "multineutrosophic_graph" ||
           kind == "multiquadripartitioned_graph" ||
           kind == "multipentapartitioned_graph")
    payload = parse_multigraded_graph(kind, p);
  else if (kind == "hypergraph")
    payload = parse_hypergraph(p);
  else if (base == "neutrosophic_hypergraph")
    payload = parse_neutro_hypergraph(p);
  else if (kind == "superhypergraph")
    payload = parse_superhypergraph(p);
  else if (kind == "soft_graph" || kind == "multisoft_graph")
    payload = parse_soft_graph(p);
  else if (base == "neutrosophic_soft_graph")
    payload = parse_neutro_soft_graph(p);
  else if (kind == "hypersoft_graph")
    payload = parse_hypersoft_graph(p);
  else if (kind == "weighted_graph")
    payload = parse_weighted_graph(p);
  else if (kind == "hyperweighted_graph")
    payload = parse_hyperweighted_graph(p);
  else if (kind == "superhyperweighted_graph")
    payload = parse_superhyperweighted_graph(p);
  else if (kind == "labeled_graph")
    payload = parse_labeled_graph(p);
  else if (kind == "hyperlabeled_graph")
    payload = parse_hyperlabeled_graph(p);
  else if (kind == "superhyperlabeled_graph")
    payload = parse_superhyperlabeled_graph(p);
  else
    payload = parse_graded_set(kind, p);  // the graded-set kinds

  return Instance{kind, std::move(payload)};
}

Instance parse_document_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  try {
    return parse_document(doc);
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad document shape: ") + ex.what());
  }
}

Json serialize_document(const Instance& instance) {
  Json payload = std::visit(
      [&](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GradedSet>) return graded_set_json(p);
        else if constexpr (std::is_same_v<T, MultiGradedSet>) return multigraded_set_json(p);
        else if constexpr (std::is_same_v<T, MultiCrispSet>) return multicrisp_set_json(p);
        else if constexpr (std::is_same_v<T, PlithogenicSet>) return plithogenic_json(p);
        else if constexpr (std::is_same_v<T, MultiPlithogenicSet>) return multiplithogenic_json(p);
        else if constexpr (std::is_same_v<T, TreePlithogenicSet>) return treeplithogenic_json(p);
        else if constexpr (std::is_same_v<T, HyperGradedSet>) return hyper_json(p);
        else if constexpr (std::is_same_v<T, SuperHyperGradedSet>) return superhyper_json(p);
        else if constexpr (std::is_same_v<T, HyperPlithogenicSet>) return hyperplithogenic_json(p);
        else if constexpr (std::is_same_v<T, SoftSet>) return soft_json(p);
        else if constexpr (std::is_same_v<T, SoftExpertSet>) return softexpert_json(p);
        else if constexpr (std::is_same_v<T, MultiSoftSet>) return multisoft_json(p);
        else if constexpr (std::is_same_v<T, HyperSoftSet>) return hypersoft_json(p);
        else if constexpr (std::is_same_v<T, SuperHyperSoftSet>) return superhypersoft_json(p);
        else if constexpr (std::is_same_v<T, TreeSoftSet>) return treesoft_json(p);
        else if constexpr (std::is_same_v<T, RankedSoftSet>) return ranked_soft_json(p);
        else if constexpr (std::is_same_v<T, RankedHyperSoftSet>) return ranked_hypersoft_json(p);
        else if constexpr (std::is_same_v<T, NeutroMultiSoftSet>) return graded_layer_json(p);
        else if constexpr (std::is_same_v<T, NeutroTreeSoftSet>) return graded_layer_json(p);
        else if constexpr (std::is_same_v<T, CrispGraph>) return crisp_graph_json(p);
        else if constexpr (std::is_same_v<T, GradedGraph>) return graded_graph_json(p);
        else if constexpr (std::is_same_v<T, HyperFuzzyGraph>) return hyperfuzzy_graph_json(p);
        else if constexpr (std::is_same_v<T, PlithogenicGraph>) return plithogenic_graph_json(p);
        else if constexpr (std::is_same_v<T, MultiGradedGraph>) return multigraded_graph_json(p);
        else if constexpr (std::is_same_v<T, Hypergraph>) return hypergraph_json(p);
        else if constexpr (std::is_same_v<T, NeutroHypergraph>) return neutro_hypergraph_json(p);
        else if constexpr (std::is_same_v<T, SuperHyperGraph>) return superhypergraph_json(p);
        else if constexpr (std::is_same_v<T, SoftGraph>) return soft_graph_json(p);
        else if constexpr (std::is_same_v<T, NeutroSoftGraph>) return neutro_soft_graph_json(p);
        else if constexpr (std::is_same_v<T, HyperSoftGraph>) return hypersoft_graph_json(p);
        else if constexpr (std::is_same_v<T, WeightedGraph>) return weighted_graph_json(p);
        else if constexpr (std::is_same_v<T, HyperWeightedGraph>) return hyperweighted_graph_json(p);
        else if constexpr (std::is_same_v<T, SuperHyperWeightedGraph>) return superhyperweighted_graph_json(p);
        else if constexpr (std::is_same_v<T, LabeledGraph>) return labeled_graph_json(p);
        else if constexpr (std::is_same_v<T, HyperLabeledGraph>) return hyperlabeled_graph_json(p);
        else return superhyperlabeled_graph_json(p);
      },
      instance.payload);
  return Json{{"kind", instance.kind}, {"payload", payload}};
}

std::string emit_document(const Instance& instance) {
  return canonical_dump(serialize_document(instance));
}

}  // namespace uncertain
