#include "uncertain/graphs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "uncertain/numeric.hpp"

namespace uncertain {

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

std::string ev_name(const EdgeAttrValue& v) {
  return "(" + v.first + "," + v.second + ")";
}

}  // namespace

ValidationReport validate_crisp_graph(const CrispGraph& g) {
  ValidationReport report;
  for (const auto& e : g.edges) {
    if (e.u == e.v)
      report.add("SelfLoop", e.name(), "self-loops are not allowed");
    if (!g.vertices.contains(e.u) || !g.vertices.contains(e.v))
      report.add("UnknownEndpoint", e.name(), "edge endpoint outside vertex set");
  }
  return report;
}

bool is_connected(const CrispGraph& g) {
  if (g.vertices.empty()) return true;
  return induced_connected(g, g.vertices.as_set());
}

bool induced_connected(const CrispGraph& g, const ElementSet& vertices) {
  if (vertices.empty()) return true;
  ElementSet seen;
  std::deque<Element> queue{*vertices.begin()};
  seen.insert(*vertices.begin());
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    for (const auto& e : g.edges) {
      Element other;
      if (e.u == cur)
        other = e.v;
      else if (e.v == cur)
        other = e.u;
      else
        continue;
      if (vertices.count(other) && !seen.count(other)) {
        seen.insert(other);
        queue.push_back(other);
      }
    }
  }
  return seen.size() == vertices.size();
}

// --- graded graphs -----------------------------------------------------------

namespace {

// Positional edge rules per kind: +1 means component <= min of endpoints,
// -1 means component >= max of endpoints, 0 means unconstrained.
std::vector<int> edge_rule(GradeKind kind) {
  switch (kind) {
    case GradeKind::Fuzzy: return {+1};
    case GradeKind::Quadripartitioned: return {+1, +1, +2, +2};  // U,F <= max
    case GradeKind::Pentapartitioned: return {+1, +1, -1, -1, -1};
    case GradeKind::Heptapartitioned: return {+1, +1, +1, -1, -1, -1, -1};
    default: return std::vector<int>(arity(kind), 0);
  }
}

}  // namespace

ValidationReport validate_graded_graph(const GradedGraph& g, bool skip_edge_rules) {
  ValidationReport report = validate_crisp_graph(g.base);
  if (g.ranges.size() != arity(g.kind)) {
    report.add("RangeArity", "", "range count does not match kind arity");
    return report;
  }

  for (const auto& v : g.base.vertices) {
    auto it = g.vertex_grades.find(v);
    if (it == g.vertex_grades.end()) {
      report.add("MissingGrade", v, "vertex has no grade");
      continue;
    }
    if (it->second.size() != arity(g.kind)) {
      report.add("ArityMismatch", v, "component count does not match kind");
      continue;
    }
    ValidationReport vertex_report = validate_grade(g.vertex_grade(v));
    for (const auto& viol : vertex_report.violations())
      report.add(viol.code, v + "." + viol.where, viol.message);
  }
  for (const auto& e : g.base.edges) {
    auto it = g.edge_grades.find(e);
    if (it == g.edge_grades.end()) {
      report.add("MissingGrade", e.name(), "edge has no grade");
      continue;
    }
    if (it->second.size() != arity(g.kind)) {
      report.add("ArityMismatch", e.name(), "component count does not match kind");
      continue;
    }
    ValidationReport edge_report = validate_grade(g.edge_grade(e));
    for (const auto& viol : edge_report.violations())
      report.add(viol.code, e.name() + "." + viol.where, viol.message);
  }
  if (!report.ok()) return report;

  // The min/max block applies to standard-regime graphs; extended ranges are
  // validated by ranges and sums alone (the off/over/under definitions
  // restate only range conditions).
  if (skip_edge_rules || !g.standard_regime()) return report;

  const auto rules = edge_rule(g.kind);
  const auto& names = component_names(g.kind);
  for (const auto& e : g.base.edges) {
    const auto& eg = g.edge_grades.at(e);
    const auto& ug = g.vertex_grades.at(e.u);
    const auto& vg = g.vertex_grades.at(e.v);
    for (std::size_t i = 0; i < rules.size(); ++i) {
      double lo = std::min(ug[i], vg[i]);
      double hi = std::max(ug[i], vg[i]);
      if (rules[i] == +1 && !approx_le(eg[i], lo))
        report.add("EdgeRule", e.name() + "." + names[i],
                   fmt(eg[i]) + " exceeds min of endpoints " + fmt(lo));
      if (rules[i] == +2 && !approx_le(eg[i], hi))
        report.add("EdgeRule", e.name() + "." + names[i],
                   fmt(eg[i]) + " exceeds max of endpoints " + fmt(hi));
      if (rules[i] == -1 && !approx_ge(eg[i], hi))
        report.add("EdgeRule", e.name() + "." + names[i],
                   fmt(eg[i]) + " below max of endpoints " + fmt(hi));
    }
  }
  return report;
}

ValidationReport validate_hyperfuzzy_graph(const HyperFuzzyGraph& g) {
  ValidationReport report = validate_crisp_graph(g.base);
  auto check = [&](const std::vector<double>& xs, const std::string& where) {
    if (xs.empty()) {
      report.add("EmptySubset", where, "membership subset must be non-empty");
      return;
    }
    for (double x : xs)
      if (!in_interval(x, g.range.lo, g.range.hi))
        report.add("OutOfRange", where,
                   fmt(x) + " outside [" + fmt(g.range.lo) + ", " + fmt(g.range.hi) + "]");
  };
  for (const auto& v : g.base.vertices) {
    auto it = g.vertex_sets.find(v);
    if (it == g.vertex_sets.end())
      report.add("MissingValue", v, "vertex has no membership subset");
    else
      check(it->second, v);
  }
  for (const auto& e : g.base.edges) {
    auto it = g.edge_sets.find(e);
    if (it == g.edge_sets.end())
      report.add("MissingValue", e.name(), "edge has no membership subset");
    else
      check(it->second, e.name());
  }
  return report;
}

ValidationReport hyperfuzzy_graph_validate(const HyperFuzzyGraph& g) {
  return validate_hyperfuzzy_graph(g);
}

// --- plithogenic graphs --------------------------------------------------------

ValidationReport validate_plithogenic_graph(const PlithogenicGraph& pg) {
  ValidationReport report = validate_crisp_graph(pg.base);

  // aCf axioms.
  {
    PlithogenicSet probe;
    probe.spec = {pg.vertex_attr, pg.vertex_values};
    probe.dcf = pg.acf;
    probe.daf = DAFTable::standard(1);
    ValidationReport acf_report = validate_plithogenic(probe);
    for (const auto& v : acf_report.violations())
      if (v.code.rfind("DCF", 0) == 0 || v.code == "MissingDCF")
        report.add(v.code, "aCf." + v.where, v.message);
  }

  // bCf reflexivity and symmetry.
  for (const auto& a : pg.edge_values) {
    auto it = pg.bcf.find({a, a});
    if (it == pg.bcf.end()) {
      report.add("MissingDCF", "bCf." + ev_name(a), "no contradiction degree");
      continue;
    }
    for (double d : it->second)
      if (!approx_eq(d, 0.0))
        report.add("DCFReflexivity", "bCf." + ev_name(a),
                   "bCf(a,a) must be 0, got " + fmt(d));
  }
  for (const auto& a : pg.edge_values) {
    for (const auto& b : pg.edge_values) {
      auto ab = pg.bcf.find({a, b});
      auto ba = pg.bcf.find({b, a});
      if (ab != pg.bcf.end() && ba != pg.bcf.end() && ab->second != ba->second)
        report.add("DCFSymmetry", "bCf." + ev_name(a) + ev_name(b),
                   "bCf(a,b) differs from bCf(b,a)");
    }
  }

  // Appurtenance ranges and completeness.
  for (const auto& x : pg.base.vertices) {
    for (const auto& a : pg.vertex_values) {
      auto it = pg.adf.find({x, a});
      if (it == pg.adf.end()) {
        report.add("MissingDAF", "adf(" + x + "," + a + ")", "no degrees");
        continue;
      }
      if (it->second.size() != pg.dims)
        report.add("DAFArity", "adf(" + x + "," + a + ")",
                   "expected " + std::to_string(pg.dims) + " degrees");
      for (double d : it->second)
        if (!in_interval(d, pg.range.lo, pg.range.hi))
          report.add("DAFRange", "adf(" + x + "," + a + ")",
                     fmt(d) + " outside [" + fmt(pg.range.lo) + ", " + fmt(pg.range.hi) + "]");
    }
  }
  for (const auto& e : pg.base.edges) {
    for (const auto& ev : pg.edge_values) {
      auto it = pg.bdf.find({e, ev});
      if (it == pg.bdf.end()) {
        report.add("MissingDAF", "bdf(" + e.name() + "," + ev_name(ev) + ")",
                   "no degrees");
        continue;
      }
      if (it->second.size() != pg.dims)
        report.add("DAFArity", "bdf(" + e.name() + "," + ev_name(ev) + ")",
                   "expected " + std::to_string(pg.dims) + " degrees");
      for (double d : it->second)
        if (!in_interval(d, pg.range.lo, pg.range.hi))
          report.add("DAFRange", "bdf(" + e.name() + "," + ev_name(ev) + ")",
                     fmt(d) + " outside [" + fmt(pg.range.lo) + ", " + fmt(pg.range.hi) + "]");
    }
  }
  if (pg.general_flag || !report.ok()) return report;

  // Edge appurtenance constraint: bdf((xy),(a,b)) <= min(adf(x,a), adf(y,b)).
  for (const auto& e : pg.base.edges) {
    for (const auto& ev : pg.edge_values) {
      auto bit = pg.bdf.find({e, ev});
      if (bit == pg.bdf.end()) continue;
      auto xa = pg.adf.find({e.u, ev.first});
      auto yb = pg.adf.find({e.v, ev.second});
      if (xa == pg.adf.end() || yb == pg.adf.end()) {
        report.add("MissingDAF", "bdf(" + e.name() + "," + ev_name(ev) + ")",
                   "edge value references vertex degrees that are undefined");
        continue;
      }
      for (std::size_t i = 0; i < pg.dims; ++i) {
        double bound = std::min(xa->second[i], yb->second[i]);
        if (!approx_le(bit->second[i], bound))
          report.add("EdgeAppurtenance",
                     "bdf(" + e.name() + "," + ev_name(ev) + ")[" + std::to_string(i) + "]",
                     fmt(bit->second[i]) + " exceeds min(adf) " + fmt(bound));
      }
    }
  }

  // Contradiction constraint: bCf((a,b),(c,d)) <= min(aCf(a,c), aCf(b,d)).
  for (const auto& ab : pg.edge_values) {
    for (const auto& cd : pg.edge_values) {
      auto bit = pg.bcf.find({ab, cd});
      if (bit == pg.bcf.end()) continue;
      const auto* ac = pg.acf.find(ab.first, cd.first);
      const auto* bd = pg.acf.find(ab.second, cd.second);
      if (!ac || !bd) continue;
      for (std::size_t i = 0; i < bit->second.size() && i < ac->size() && i < bd->size(); ++i) {
        double bound = std::min((*ac)[i], (*bd)[i]);
        if (!approx_le(bit->second[i], bound))
          report.add("EdgeContradiction",
                     "bCf." + ev_name(ab) + ev_name(cd) + "[" + std::to_string(i) + "]",
                     fmt(bit->second[i]) + " exceeds min(aCf) " + fmt(bound));
      }
    }
  }
  return report;
}

// --- multi graded graphs --------------------------------------------------------

ValidationReport validate_multigraded_graph(const MultiGradedGraph& mg) {
  ValidationReport report = validate_crisp_graph(mg.base);
  if (mg.kind == MultiGraphKind::MultiNeutrosophic) {
    auto check = [&](const MultiGrade& m, const std::string& where) {
      ValidationReport grade_report = validate_multi_grade(m);
      for (const auto& v : grade_report.violations())
        report.add(v.code, where + "." + v.where, v.message);
    };
    for (const auto& v : mg.base.vertices) {
      auto it = mg.vertex_multi.find(v);
      if (it == mg.vertex_multi.end())
        report.add("MissingGrade", v, "vertex has no evaluations");
      else
        check(it->second, v);
    }
    for (const auto& e : mg.base.edges) {
      auto it = mg.edge_multi.find(e);
      if (it == mg.edge_multi.end())
        report.add("MissingGrade", e.name(), "edge has no evaluations");
      else
        check(it->second, e.name());
    }
    return report;
  }

  const GradeKind tuple_kind = mg.kind == MultiGraphKind::MultiQuadripartitioned
                                   ? GradeKind::Quadripartitioned
                                   : GradeKind::Pentapartitioned;
  auto check_list = [&](const std::vector<std::vector<double>>& list,
                        const std::string& where) {
    if (list.empty()) {
      report.add("MissingGrade", where, "no evaluations");
      return;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].size() != arity(tuple_kind)) {
        report.add("ArityMismatch", where + "[" + std::to_string(i) + "]",
                   "component count does not match kind");
        continue;
      }
      GradeTuple t = GradeTuple::make(tuple_kind, list[i]);
      ValidationReport tuple_report = validate_grade(t);
      for (const auto& v : tuple_report.violations())
        report.add(v.code, where + "[" + std::to_string(i) + "]." + v.where,
                   v.message);
    }
  };
  for (const auto& v : mg.base.vertices) {
    auto it = mg.vertex_tuples.find(v);
    if (it == mg.vertex_tuples.end())
      report.add("MissingGrade", v, "vertex has no evaluations");
    else
      check_list(it->second, v);
  }
  for (const auto& e : mg.base.edges) {
    auto it = mg.edge_tuples.find(e);
    if (it == mg.edge_tuples.end())
      report.add("MissingGrade", e.name(), "edge has no evaluations");
    else
      check_list(it->second, e.name());
  }
  return report;
}

// --- hypergraphs ------------------------------------------------------------------

ValidationReport validate_hypergraph(const Hypergraph& h) {
  ValidationReport report;
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    if (h.hyperedges[i].empty())
      report.add("EmptyHyperedge", "e" + std::to_string(i), "hyperedges are non-empty");
    for (const auto& v : h.hyperedges[i])
      if (!h.vertices.contains(v))
        report.add("UnknownVertex", "e" + std::to_string(i),
                   v + " outside the vertex set");
  }
  return report;
}

ValidationReport validate_neutro_hypergraph(const NeutroHypergraph& h) {
  ValidationReport report = validate_hypergraph(h.shape);
  auto check = [&](const std::array<double, 3>& g, const std::string& where) {
    for (double c : g)
      if (!in_interval(c, h.range.lo, h.range.hi))
        report.add("OutOfRange", where,
                   fmt(c) + " outside [" + fmt(h.range.lo) + ", " + fmt(h.range.hi) + "]");
    double sum = g[0] + g[1] + g[2];
    double hi = 3.0 * std::max(h.range.hi, 1.0);
    double lo = 3.0 * std::min(h.range.lo, 0.0);
    if (!in_interval(sum, lo, hi))
      report.add("SumConstraint", where,
                 "T + I + F = " + fmt(sum) + " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
  };
  for (const auto& v : h.shape.vertices) {
    auto it = h.vertex_grades.find(v);
    if (it == h.vertex_grades.end())
      report.add("MissingGrade", v, "vertex has no grade");
    else
      check(it->second, v);
  }
  if (h.edge_grades.size() != h.shape.hyperedges.size())
    report.add("MissingGrade", "edges", "one grade per hyperedge required");
  else
    for (std::size_t i = 0; i < h.edge_grades.size(); ++i)
      check(h.edge_grades[i], "e" + std::to_string(i));
  return report;
}

ValidationReport validate_superhypergraph(const SuperHyperGraph& g) {
  ValidationReport report;
  if (g.level < 1) report.add("BadLevel", "", "level must be at least 1");
  for (const auto& sv : g.supervertices)
    if (!valid_at_level(sv, g.base, g.level))
      report.add("BadTowerElement", sv.to_string(),
                 "not a level-" + std::to_string(g.level) + " element");
  for (const auto& se : g.superedges)
    if (!valid_at_level(se, g.base, g.level))
      report.add("BadTowerElement", se.to_string(),
                 "not a level-" + std::to_string(g.level) + " element");
  return report;
}

// --- soft graphs ------------------------------------------------------------------

ValidationReport soft_graph_validate(const SoftGraph& sg) {
  ValidationReport report = validate_crisp_graph(sg.base);
  for (const auto& [key, value] : sg.mapping) {
    const auto& [fv, ke] = value;
    std::string where = set_key_name(key);
    for (const auto& v : fv)
      if (!sg.base.vertices.contains(v))
        report.add("UnknownVertex", where, v + " outside the base graph");
    for (const auto& e : ke) {
      if (!sg.base.edges.count(e)) {
        report.add("UnknownEdge", where, e.name() + " not an edge of the base graph");
        continue;
      }
      if (!fv.count(e.u) || !fv.count(e.v))
        report.add("NotASubgraph", where,
                   e.name() + " has an endpoint outside F(" + where + ")");
    }
  }
  return report;
}

ValidationReport validate_neutro_soft_graph(const NeutroSoftGraph& g) {
  ValidationReport report = validate_crisp_graph(g.base);
  auto check = [&](const std::array<double, 3>& t, const std::string& where) {
    for (double c : t)
      if (!in_interval(c, g.range.lo, g.range.hi))
        report.add("OutOfRange", where,
                   fmt(c) + " outside [" + fmt(g.range.lo) + ", " + fmt(g.range.hi) + "]");
    double sum = t[0] + t[1] + t[2];
    double hi = 3.0 * std::max(g.range.hi, 1.0);
    if (!approx_le(sum, hi))
      report.add("SumConstraint", where, "T + I + F = " + fmt(sum) + " above " + fmt(hi));
  };
  for (const auto& [key, layer] : g.mapping) {
    for (const auto& e : layer.edges) {
      if (!g.base.edges.count(e))
        report.add("UnknownEdge", key, e.name() + " not in the base graph");
      if (!layer.vertices.count(e.u) || !layer.vertices.count(e.v))
        report.add("NotASubgraph", key, e.name() + " has an endpoint outside F(" + key + ")");
    }
    for (const auto& v : layer.vertices) {
      if (!g.base.vertices.contains(v))
        report.add("UnknownVertex", key, v + " outside the base graph");
      auto it = layer.vertex_grades.find(v);
      if (it == layer.vertex_grades.end())
        report.add("MissingGrade", key + "." + v, "no grade");
      else
        check(it->second, key + "." + v);
    }
    for (const auto& e : layer.edges) {
      auto it = layer.edge_grades.find(e);
      if (it == layer.edge_grades.end())
        report.add("MissingGrade", key + "." + e.name(), "no grade");
      else
        check(it->second, key + "." + e.name());
    }
  }
  return report;
}

ValidationReport hypersoft_graph_validate(const HyperSoftGraph& hsg) {
  if (!is_connected(hsg.base))
    throw DisconnectedBaseError("the base graph must be connected");
  ValidationReport report = validate_crisp_graph(hsg.base);
  std::set<std::string> pool;
  for (const auto& d : hsg.domains)
    for (const auto& v : d.values) pool.insert(v);
  for (const auto& [key, ctx] : hsg.mapping) {
    std::string where = "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) where += ",";
      where += key[i];
    }
    where += ")";
    if (key.size() != hsg.domains.size())
      report.add("KeyArity", where,
                 "expected " + std::to_string(hsg.domains.size()) + " components");
    for (const auto& v : key)
      if (!pool.count(v))
        report.add("UnknownValue", where, v + " not a declared attribute value");
    for (const auto& v : ctx.vertices)
      if (!hsg.base.vertices.contains(v))
        report.add("UnknownVertex", where, v + " outside the base graph");
    if (!induced_connected(hsg.base, ctx.vertices))
      report.add("Disconnected", where, "F" + where + " induces a disconnected subgraph");
    auto check = [&](const std::array<double, 3>& t, const std::string& at) {
      for (double c : t)
        if (!in_interval(c, hsg.range.lo, hsg.range.hi))
          report.add("OutOfRange", at,
                     fmt(c) + " outside [" + fmt(hsg.range.lo) + ", " + fmt(hsg.range.hi) + "]");
      double sum = t[0] + t[1] + t[2];
      if (!approx_le(sum, 3.0 * std::max(hsg.range.hi, 1.0)))
        report.add("SumConstraint", at, "T + I + F above the bound");
    };
    for (const auto& [v, t] : ctx.vertex_grades) check(t, where + "." + v);
    for (const auto& [e, t] : ctx.edge_grades) check(t, where + "." + e.name());
  }
  return report;
}

// --- conversions ------------------------------------------------------------------

GradedGraph reduce_graph(const GradedGraph& g, GradeKind target) {
  GradedGraph out;
  out.base = g.base;
  out.kind = target;
  bool first = true;
  for (const auto& [v, comps] : g.vertex_grades) {
    GradeTuple t = reduce_grade(GradeTuple::make(g.kind, comps, g.ranges), target);
    if (first) {
      out.ranges = t.ranges;
      first = false;
    }
    out.vertex_grades[v] = t.components;
  }
  for (const auto& [e, comps] : g.edge_grades) {
    GradeTuple t = reduce_grade(GradeTuple::make(g.kind, comps, g.ranges), target);
    if (first) {
      out.ranges = t.ranges;
      first = false;
    }
    out.edge_grades[e] = t.components;
  }
  if (first) out.ranges = standard_ranges(target);
  return out;
}

GradedGraph embed_graph(const GradedGraph& g, GradeKind target) {
  GradedGraph out;
  out.base = g.base;
  out.kind = target;
  bool first = true;
  for (const auto& [v, comps] : g.vertex_grades) {
    GradeTuple t = embed_grade(GradeTuple::make(g.kind, comps, g.ranges), target);
    if (first) {
      out.ranges = t.ranges;
      first = false;
    }
    out.vertex_grades[v] = t.components;
  }
  for (const auto& [e, comps] : g.edge_grades) {
    GradeTuple t = embed_grade(GradeTuple::make(g.kind, comps, g.ranges), target);
    if (first) {
      out.ranges = t.ranges;
      first = false;
    }
    out.edge_grades[e] = t.components;
  }
  if (first) out.ranges = standard_ranges(target);
  return out;
}

PlithogenicGraphReduction plithogenic_graph_reduce(const PlithogenicGraph& pg,
                                                   FourComponentGraphKind four) {
  if (pg.cdims != 1)
    throw UnsupportedDimsError("graph reduction requires t = 1");
  if (pg.dims < 1 || pg.dims > 5)
    throw UnsupportedDimsError("graph reduction requires s in 1..5");
  if (pg.vertex_values.size() != 1 || pg.edge_values.size() != 1)
    throw AmbiguousValueError("graph reduction requires single attribute values");

  GradeKind kind;
  switch (pg.dims) {
    case 1: kind = GradeKind::Fuzzy; break;
    case 2: kind = GradeKind::IntuitionisticFuzzy; break;
    case 3: kind = GradeKind::Neutrosophic; break;
    case 4:
      kind = four == FourComponentGraphKind::Quadripartitioned
                 ? GradeKind::Quadripartitioned
                 : GradeKind::DoubleValued;
      break;
    default: kind = GradeKind::Pentapartitioned; break;
  }

  PlithogenicGraphReduction out;
  out.graph.base = pg.base;
  out.graph.kind = kind;
  out.graph.ranges.assign(arity(kind), pg.range);
  const AttributeValue& va = pg.vertex_values.front();
  const EdgeAttrValue& ea = pg.edge_values.front();
  for (const auto& v : pg.base.vertices) {
    auto it = pg.adf.find({v, va});
    if (it == pg.adf.end())
      throw DomainError("IncompleteDAF", "missing adf entry for " + v);
    out.graph.vertex_grades[v] = it->second;
  }
  for (const auto& e : pg.base.edges) {
    auto it = pg.bdf.find({e, ea});
    if (it == pg.bdf.end())
      throw DomainError("IncompleteDAF", "missing bdf entry for " + e.name());
    out.graph.edge_grades[e] = it->second;
  }
  out.revalidation = validate_graded_graph(out.graph, pg.general_flag);
  return out;
}

GradedGraph collapse_multigraph(const MultiGradedGraph& mg, MultiCollapseMode mode) {
  GradedGraph out;
  out.base = mg.base;

  if (mg.kind == MultiGraphKind::MultiNeutrosophic) {
    out.kind = GradeKind::Neutrosophic;
    out.ranges = standard_ranges(out.kind);
    auto fold = [&](const MultiGrade& m, const std::string& where) {
      if (mode == MultiCollapseMode::SingletonOnly) {
        if (m.p() != 1 || m.r() != 1 || m.s() != 1)
          throw NotSingletonError(where + " carries multiple evaluations");
        return std::vector<double>{m.truths[0], m.indeterminacies[0], m.falsities[0]};
      }
      auto mean = [](const std::vector<double>& xs) {
        if (xs.empty()) return 0.0;
        double sum = 0.0;
        for (double x : xs) sum += x;
        return sum / static_cast<double>(xs.size());
      };
      return std::vector<double>{mean(m.truths), mean(m.indeterminacies),
                                 mean(m.falsities)};
    };
    for (const auto& [v, m] : mg.vertex_multi) out.vertex_grades[v] = fold(m, v);
    for (const auto& [e, m] : mg.edge_multi) out.edge_grades[e] = fold(m, e.name());
    return out;
  }

  out.kind = mg.kind == MultiGraphKind::MultiQuadripartitioned
                 ? GradeKind::Quadripartitioned
                 : GradeKind::Pentapartitioned;
  out.ranges = standard_ranges(out.kind);
  auto fold = [&](const std::vector<std::vector<double>>& list,
                  const std::string& where) {
    if (list.empty()) throw DomainError("MissingGrade", where + " has no evaluations");
    if (mode == MultiCollapseMode::SingletonOnly) {
      if (list.size() != 1)
        throw NotSingletonError(where + " carries multiple evaluations");
      return list.front();
    }
    std::vector<double> mean(list.front().size(), 0.0);
    for (const auto& entry : list)
      for (std::size_t i = 0; i < mean.size() && i < entry.size(); ++i)
        mean[i] += entry[i];
    for (auto& c : mean) c /= static_cast<double>(list.size());
    return mean;
  };
  for (const auto& [v, list] : mg.vertex_tuples) out.vertex_grades[v] = fold(list, v);
  for (const auto& [e, list] : mg.edge_tuples) out.edge_grades[e] = fold(list, e.name());
  return out;
}

MultiGradedGraph multipenta_to_multiquad(const MultiGradedGraph& mg) {
  if (mg.kind != MultiGraphKind::MultiPentapartitioned)
    throw DomainError("WrongKind", "expects a multi-pentapartitioned graph");
  MultiGradedGraph out;
  out.base = mg.base;
  out.kind = MultiGraphKind::MultiQuadripartitioned;
  auto merge = [](const std::vector<std::vector<double>>& list) {
    std::vector<std::vector<double>> merged;
    for (const auto& t : list)
      if (t.size() == 5) merged.push_back({t[0], t[1], t[3] + t[2], t[4]});
    return merged;
  };
  for (const auto& [v, list] : mg.vertex_tuples) out.vertex_tuples[v] = merge(list);
  for (const auto& [e, list] : mg.edge_tuples) out.edge_tuples[e] = merge(list);
  return out;
}

CrispGraph hypergraph_to_graph(const Hypergraph& h) {
  CrispGraph out;
  out.vertices = h.vertices;
  for (const auto& he : h.hyperedges) {
    if (he.size() != 2)
      throw NonBinaryEdgeError("hyperedge {" + join(he) + "} has size " +
                               std::to_string(he.size()));
    auto it = he.begin();
    Element a = *it++;
    Element b = *it;
    out.edges.insert(Edge(a, b));
  }
  return out;
}

GradedGraph neutro_hypergraph_to_graph(const NeutroHypergraph& h) {
  CrispGraph base;
  base.vertices = h.shape.vertices;
  GradedGraph out;
  out.kind = GradeKind::Neutrosophic;
  out.ranges.assign(3, h.range);
  for (std::size_t i = 0; i < h.shape.hyperedges.size(); ++i) {
    const auto& he = h.shape.hyperedges[i];
    if (he.size() != 2)
      throw NonBinaryEdgeError("hyperedge {" + join(he) + "} has size " +
                               std::to_string(he.size()));
    auto it = he.begin();
    Element a = *it++;
    Element b = *it;
    Edge e(a, b);
    base.edges.insert(e);
    if (i < h.edge_grades.size()) {
      const auto& g = h.edge_grades[i];
      out.edge_grades[e] = {g[0], g[1], g[2]};
    }
  }
  out.base = base;
  for (const auto& [v, g] : h.vertex_grades)
    out.vertex_grades[v] = {g[0], g[1], g[2]};
  return out;
}

NeutroHypergraph neutro_hypergraph_restrict(const NeutroHypergraph& h, Regime side) {
  NeutroHypergraph out = h;
  switch (side) {
    case Regime::Over: out.range = {0.0, std::max(h.range.hi, 1.0)}; break;
    case Regime::Under: out.range = {std::min(h.range.lo, 0.0), 1.0}; break;
    default: return out;
  }
  ValidationReport check = validate_neutro_hypergraph(out);
  if (!check.ok())
    throw DomainError("OutOfRange",
                      "values do not fit the one-sided range: " + check.to_string());
  return out;
}

SuperHyperGraph graph_to_superhypergraph(const CrispGraph& g) {
  SuperHyperGraph out;
  out.base = g.vertices;
  out.level = 1;
  for (const auto& v : g.vertices)
    out.supervertices.push_back(NestedElem::make_set({NestedElem::make_atom(v)}));
  for (const auto& e : g.edges)
    out.superedges.push_back(NestedElem::make_set(
        {NestedElem::make_atom(e.u), NestedElem::make_atom(e.v)}));
  std::sort(out.supervertices.begin(), out.supervertices.end(), nested_less);
  std::sort(out.superedges.begin(), out.superedges.end(), nested_less);
  return out;
}

Hypergraph graph_to_hypergraph(const CrispGraph& g) {
  Hypergraph out;
  out.vertices = g.vertices;
  for (const auto& e : g.edges) out.hyperedges.push_back({e.u, e.v});
  return out;
}

SuperHyperGraph hypergraph_to_superhypergraph(const Hypergraph& h) {
  SuperHyperGraph out;
  out.base = h.vertices;
  out.level = 1;
  for (const auto& v : h.vertices)
    out.supervertices.push_back(NestedElem::make_set({NestedElem::make_atom(v)}));
  for (const auto& he : h.hyperedges) {
    std::vector<NestedElem> members;
    for (const auto& v : he) members.push_back(NestedElem::make_atom(v));
    out.superedges.push_back(NestedElem::make_set(std::move(members)));
  }
  std::sort(out.supervertices.begin(), out.supervertices.end(), nested_less);
  std::sort(out.superedges.begin(), out.superedges.end(), nested_less);
  return out;
}

SoftGraph multisoft_graph_to_soft(const SoftGraph& msg) {
  SoftGraph out;
  out.base = msg.base;
  for (const auto& [key, _] : msg.mapping) {
    ElementSet fv;
    EdgeSet ke;
    for (const auto& [other, value] : msg.mapping) {
      if (!is_subset(ParameterSet(other.begin(), other.end()),
                     ParameterSet(key.begin(), key.end())))
        continue;
      fv.insert(value.first.begin(), value.first.end());
      ke.insert(value.second.begin(), value.second.end());
    }
    out.mapping[key] = {std::move(fv), std::move(ke)};
  }
  return out;
}

GradedGraph neutro_soft_graph_aggregate(const NeutroSoftGraph& nsg) {
  GradedGraph out;
  out.base = nsg.base;
  out.kind = GradeKind::Neutrosophic;
  out.ranges.assign(3, nsg.range);
  for (const auto& v : nsg.base.vertices) {
    bool mentioned = false;
    std::array<double, 3> agg{0.0, 0.0, 0.0};
    for (const auto& [key, layer] : nsg.mapping) {
      auto it = layer.vertex_grades.find(v);
      if (it == layer.vertex_grades.end()) continue;
      if (!mentioned) {
        agg = it->second;
        mentioned = true;
      } else {
        agg[0] = std::max(agg[0], it->second[0]);
        agg[1] = std::max(agg[1], it->second[1]);
        agg[2] = std::min(agg[2], it->second[2]);
      }
    }
    if (!mentioned)
      throw UnmentionedError("vertex " + v + " appears in no parameter layer");
    out.vertex_grades[v] = {agg[0], agg[1], agg[2]};
  }
  for (const auto& e : nsg.base.edges) {
    bool mentioned = false;
    std::array<double, 3> agg{0.0, 0.0, 0.0};
    for (const auto& [key, layer] : nsg.mapping) {
      auto it = layer.edge_grades.find(e);
      if (it == layer.edge_grades.end()) continue;
      if (!mentioned) {
        agg = it->second;
        mentioned = true;
      } else {
        agg[0] = std::max(agg[0], it->second[0]);
        agg[1] = std::max(agg[1], it->second[1]);
        agg[2] = std::min(agg[2], it->second[2]);
      }
    }
    if (!mentioned)
      throw UnmentionedError("edge " + e.name() + " appears in no parameter layer");
    out.edge_grades[e] = {agg[0], agg[1], agg[2]};
  }
  return out;
}

SoftGraph neutro_soft_graph_strip(const NeutroSoftGraph& nsg) {
  SoftGraph out;
  out.base = nsg.base;
  for (const auto& [key, layer] : nsg.mapping)
    out.mapping[ParameterSet{key}] = {layer.vertices, layer.edges};
  return out;
}

GradedGraph hypersoft_graph_aggregate(const HyperSoftGraph& hsg) {
  NeutroSoftGraph flat;
  flat.base = hsg.base;
  flat.range = hsg.range;
  for (const auto& [key, ctx] : hsg.mapping) {
    std::string name;
    for (const auto& part : key) name += (name.empty() ? "" : ",") + part;
    NeutroSoftGraph::Layer layer;
    layer.vertices = ctx.vertices;
    layer.vertex_grades = ctx.vertex_grades;
    layer.edge_grades = ctx.edge_grades;
    for (const auto& [e, _] : ctx.edge_grades) layer.edges.insert(e);
    flat.mapping[name] = std::move(layer);
  }
  return neutro_soft_graph_aggregate(flat);
}

// --- annotated graphs ------------------------------------------------------------

namespace {

template <typename Map>
ValidationReport check_nonempty_sets(const CrispGraph& base, const Map& edge_map) {
  ValidationReport report = validate_crisp_graph(base);
  for (const auto& e : base.edges) {
    auto it = edge_map.find(e);
    if (it == edge_map.end()) {
      report.add("MissingAnnotation", e.name(), "edge has no annotation");
      continue;
    }
    if (it->second.empty())
      report.add("EmptySubset", e.name(), "annotation sets are non-empty");
  }
  return report;
}

}  // namespace

ValidationReport validate_annotated(const HyperWeightedGraph& g) {
  return check_nonempty_sets(g.base, g.weights);
}

ValidationReport validate_annotated(const SuperHyperWeightedGraph& g) {
  ValidationReport report = check_nonempty_sets(g.base, g.weights);
  for (const auto& [e, sets] : g.weights)
    for (const auto& hyper : sets)
      if (hyper.empty())
        report.add("EmptySubset", e.name(), "hyperweights are non-empty sets");
  return report;
}

ValidationReport validate_annotated(const HyperLabeledGraph& g) {
  ValidationReport report = validate_crisp_graph(g.base);
  for (const auto& v : g.base.vertices) {
    auto it = g.vertex_labels.find(v);
    if (it == g.vertex_labels.end())
      report.add("MissingAnnotation", v, "vertex has no label set");
    else if (it->second.empty())
      report.add("EmptySubset", v, "label sets are non-empty");
  }
  for (const auto& e : g.base.edges) {
    auto it = g.edge_labels.find(e);
    if (it == g.edge_labels.end())
      report.add("MissingAnnotation", e.name(), "edge has no label set");
    else if (it->second.empty())
      report.add("EmptySubset", e.name(), "label sets are non-empty");
  }
  return report;
}

ValidationReport validate_annotated(const SuperHyperLabeledGraph& g) {
  ValidationReport report = validate_crisp_graph(g.base);
  auto check = [&](const std::vector<std::vector<std::string>>& sets,
                   const std::string& where) {
    if (sets.empty()) {
      report.add("EmptySubset", where, "superhyperlabel sets are non-empty");
      return;
    }
    for (const auto& hyper : sets)
      if (hyper.empty())
        report.add("EmptySubset", where, "hyperlabels are non-empty sets");
  };
  for (const auto& v : g.base.vertices) {
    auto it = g.vertex_labels.find(v);
    if (it == g.vertex_labels.end())
      report.add("MissingAnnotation", v, "vertex has no label set");
    else
      check(it->second, v);
  }
  for (const auto& e : g.base.edges) {
    auto it = g.edge_labels.find(e);
    if (it == g.edge_labels.end())
      report.add("MissingAnnotation", e.name(), "edge has no label set");
    else
      check(it->second, e.name());
  }
  return report;
}

HyperWeightedGraph annotated_lift(const WeightedGraph& g) {
  HyperWeightedGraph out;
  out.base = g.base;
  for (const auto& [e, w] : g.weights) out.weights[e] = {w};
  return out;
}

SuperHyperWeightedGraph annotated_lift(const HyperWeightedGraph& g) {
  SuperHyperWeightedGraph out;
  out.base = g.base;
  for (const auto& [e, ws] : g.weights) out.weights[e] = {ws};
  return out;
}

WeightedGraph annotated_reduce(const HyperWeightedGraph& g) {
  WeightedGraph out;
  out.base = g.base;
  for (const auto& [e, ws] : g.weights) {
    if (ws.size() != 1)
      throw NonSingletonError("edge " + e.name() + " carries " +
                              std::to_string(ws.size()) + " weights");
    out.weights[e] = ws.front();
  }
  return out;
}

HyperWeightedGraph annotated_reduce(const SuperHyperWeightedGraph& g) {
  HyperWeightedGraph out;
  out.base = g.base;
  for (const auto& [e, sets] : g.weights) {
    if (sets.size() != 1)
      throw NonSingletonError("edge " + e.name() + " carries " +
                              std::to_string(sets.size()) + " hyperweights");
    out.weights[e] = sets.front();
  }
  return out;
}

HyperLabeledGraph annotated_lift(const LabeledGraph& g) {
  HyperLabeledGraph out;
  out.base = g.base;
  for (const auto& [v, l] : g.vertex_labels) out.vertex_labels[v] = {l};
  for (const auto& [e, l] : g.edge_labels) out.edge_labels[e] = {l};
  return out;
}

SuperHyperLabeledGraph annotated_lift(const HyperLabeledGraph& g) {
  SuperHyperLabeledGraph out;
  out.base = g.base;
  for (const auto& [v, ls] : g.vertex_labels) out.vertex_labels[v] = {ls};
  for (const auto& [e, ls] : g.edge_labels) out.edge_labels[e] = {ls};
  return out;
}

LabeledGraph annotated_reduce(const HyperLabeledGraph& g) {
  LabeledGraph out;
  out.base = g.base;
  for (const auto& [v, ls] : g.vertex_labels) {
    if (ls.size() != 1)
      throw NonSingletonError("vertex " + v + " carries multiple labels");
    out.vertex_labels[v] = ls.front();
  }
  for (const auto& [e, ls] : g.edge_labels) {
    if (ls.size() != 1)
      throw NonSingletonError("edge " + e.name() + " carries multiple labels");
    out.edge_labels[e] = ls.front();
  }
  return out;
}

HyperLabeledGraph annotated_reduce(const SuperHyperLabeledGraph& g) {
  HyperLabeledGraph out;
  out.base = g.base;
  for (const auto& [v, sets] : g.vertex_labels) {
    if (sets.size() != 1)
      throw NonSingletonError("vertex " + v + " carries multiple hyperlabels");
    out.vertex_labels[v] = sets.front();
  }
  for (const auto& [e, sets] : g.edge_labels) {
    if (sets.size() != 1)
      throw NonSingletonError("edge " + e.name() + " carries multiple hyperlabels");
    out.edge_labels[e] = sets.front();
  }
  return out;
}

CrispGraphRough rough_graph_approx(const CrispGraph& g, const Partition& p,
                                   const ElementSet& target) {
  if (!(p.universe == g.vertices))
    throw UniverseMismatchError("partition must cover the vertex set");
  CrispGraphRough out;
  out.vertices = rough_approx(p, target);
  for (const auto& e : g.edges) {
    if (out.vertices.lower.count(e.u) && out.vertices.lower.count(e.v))
      out.edge_lower.insert({e.u, e.v});
    if (out.vertices.upper.count(e.u) && out.vertices.upper.count(e.v))
      out.edge_upper.insert({e.u, e.v});
  }
  return out;
}

}  // namespace uncertain
