#include "uncertain/plithogenic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "uncertain/numeric.hpp"

namespace uncertain {

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

ValidationReport check_dcf(const DCFMatrix& dcf,
                           const std::vector<AttributeValue>& values) {
  ValidationReport report;
  for (const auto& a : values) {
    const auto* diag = dcf.find(a, a);
    if (!diag) {
      report.add("MissingDCF", a + "," + a, "no contradiction degree");
      continue;
    }
    for (double d : *diag)
      if (!approx_eq(d, 0.0))
        report.add("DCFReflexivity", a + "," + a,
                   "pCF(a,a) must be 0, got " + fmt(d));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const auto& a = values[i];
      const auto& b = values[j];
      auto ab = dcf.entries.find({a, b});
      auto ba = dcf.entries.find({b, a});
      if (ab == dcf.entries.end() && ba == dcf.entries.end()) {
        report.add("MissingDCF", a + "," + b, "no contradiction degree");
        continue;
      }
      if (ab != dcf.entries.end() && ba != dcf.entries.end() &&
          ab->second != ba->second)
        report.add("DCFSymmetry", a + "," + b, "pCF(a,b) differs from pCF(b,a)");
      const auto& degrees =
          ab != dcf.entries.end() ? ab->second : ba->second;
      if (degrees.size() != dcf.dims)
        report.add("DCFArity", a + "," + b, "expected " +
                       std::to_string(dcf.dims) + " contradiction degrees");
      for (double d : degrees)
        if (!in_interval(d, 0.0, 1.0))
          report.add("DCFRange", a + "," + b, fmt(d) + " outside [0, 1]");
    }
  }
  return report;
}

ValidationReport check_daf(const DAFTable& daf, const Universe& carrier,
                           const std::vector<AttributeValue>& values,
                           const std::string& label) {
  ValidationReport report;
  if (daf.ranges.size() != daf.dims)
    report.add("RangeArity", label, "one range per DAF component required");
  for (const auto& x : carrier) {
    for (const auto& a : values) {
      const auto* degrees = daf.find(x, a);
      if (!degrees) {
        report.add("MissingDAF", label + "(" + x + "," + a + ")",
                   "no appurtenance degrees");
        continue;
      }
      if (degrees->size() != daf.dims) {
        report.add("DAFArity", label + "(" + x + "," + a + ")",
                   "expected " + std::to_string(daf.dims) + " degrees");
        continue;
      }
      for (std::size_t i = 0; i < degrees->size(); ++i) {
        GradeRange r = i < daf.ranges.size() ? daf.ranges[i] : GradeRange::standard();
        if (!in_interval((*degrees)[i], r.lo, r.hi))
          report.add("DAFRange", label + "(" + x + "," + a + ")",
                     fmt((*degrees)[i]) + " outside [" + fmt(r.lo) + ", " + fmt(r.hi) + "]");
      }
    }
  }
  return report;
}

GradeKind kind_for_dims(std::size_t s, TwoComponentKind two) {
  switch (s) {
    case 1: return GradeKind::Fuzzy;
    case 2:
      return two == TwoComponentKind::Vague ? GradeKind::Vague
                                            : GradeKind::IntuitionisticFuzzy;
    case 3: return GradeKind::Neutrosophic;
    case 4: return GradeKind::Quadripartitioned;
    case 5: return GradeKind::Pentapartitioned;
    default:
      throw UnsupportedDimsError("no graded kind for s = " + std::to_string(s));
  }
}

}  // namespace

DCFMatrix DCFMatrix::zero(const std::vector<AttributeValue>& values,
                          std::size_t t) {
  DCFMatrix dcf;
  dcf.dims = t;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j)
      dcf.entries[{values[i], values[j]}] = std::vector<double>(t, 0.0);
  return dcf;
}

ValidationReport validate_plithogenic(const PlithogenicSet& ps) {
  ValidationReport report;
  if (ps.spec.values.empty())
    report.add("EmptyValueSet", ps.spec.name, "attribute needs at least one value");
  report.merge(check_dcf(ps.dcf, ps.spec.values));
  report.merge(check_daf(ps.daf, ps.carrier, ps.spec.values, "pdf"));
  return report;
}

ValidationReport validate_multiplithogenic(const MultiPlithogenicSet& mps) {
  ValidationReport report;
  if (mps.attributes.size() != mps.dafs.size()) {
    report.add("DAFCount", "", "one DAF per attribute required");
    return report;
  }
  std::set<std::string> names;
  std::set<AttributeValue> seen;
  std::vector<AttributeValue> all_values;
  for (const auto& attr : mps.attributes) {
    if (!names.insert(attr.name).second)
      report.add("DuplicateAttribute", attr.name, "attribute names must be distinct");
    if (attr.values.empty())
      report.add("EmptyValueSet", attr.name, "attribute needs at least one value");
    for (const auto& v : attr.values) {
      if (!seen.insert(v).second)
        report.add("OverlappingValues", v, "attribute value sets must be disjoint");
      all_values.push_back(v);
    }
  }
  for (std::size_t i = 0; i < mps.attributes.size(); ++i) {
    if (mps.dafs[i].dims != mps.dims())
      report.add("DAFDims", mps.attributes[i].name,
                 "all DAFs must share the same component count");
    report.merge(check_daf(mps.dafs[i], mps.carrier, mps.attributes[i].values,
                           "pdf_" + mps.attributes[i].name));
  }
  report.merge(check_dcf(mps.dcf, all_values));
  return report;
}

ValidationReport validate_treeplithogenic(const TreePlithogenicSet& tps) {
  ValidationReport report;
  if (tps.tree.node_count() == 0)
    report.add("EmptyTree", "", "attribute tree has no nodes");
  std::vector<AttributeValue> all_values;
  for (const auto& id : tps.tree.all_nodes()) {
    auto vit = tps.node_values.find(id);
    if (vit == tps.node_values.end()) {
      report.add("MissingValues", id, "tree node has no value set");
      continue;
    }
    auto dit = tps.node_dafs.find(id);
    if (dit == tps.node_dafs.end()) {
      report.add("MissingDAF", id, "tree node has no DAF");
      continue;
    }
    if (dit->second.dims != tps.dims())
      report.add("DAFDims", id, "all DAFs must share the same component count");
    report.merge(check_daf(dit->second, tps.carrier, vit->second, "pdf_" + id));
    for (const auto& v : vit->second) all_values.push_back(v);
  }
  for (const auto& [id, _] : tps.node_values)
    if (!tps.tree.has_node(id))
      report.add("UnknownNode", id, "value set for a node not in the tree");
  for (const auto& [id, _] : tps.node_dafs)
    if (!tps.tree.has_node(id))
      report.add("UnknownNode", id, "DAF for a node not in the tree");
  std::sort(all_values.begin(), all_values.end());
  all_values.erase(std::unique(all_values.begin(), all_values.end()),
                   all_values.end());
  report.merge(check_dcf(tps.dcf, all_values));
  return report;
}

GradedSet reduce_plithogenic(const PlithogenicSet& ps, TwoComponentKind two) {
  if (ps.dcf.dims != 1)
    throw UnsupportedDimsError("reduction requires t = 1");
  if (ps.daf.dims > 5)
    throw UnsupportedDimsError("reduction requires s <= 5");
  if (ps.spec.values.size() != 1)
    throw AmbiguousValueError("reduction requires a single attribute value");

  const AttributeValue& value = ps.spec.values.front();
  GradedSet out;
  out.kind = kind_for_dims(ps.daf.dims, two);
  out.ranges = ps.daf.ranges;
  out.ranges.resize(arity(out.kind), GradeRange::standard());
  out.universe = ps.carrier;
  for (const auto& x : ps.carrier) {
    const auto* degrees = ps.daf.find(x, value);
    if (!degrees || degrees->size() != ps.daf.dims)
      throw DomainError("IncompleteDAF", "missing DAF entry for " + x);
    out.grades[x] = *degrees;
  }
  return out;
}

std::map<Element, MultiGrade> multiplithogenic_to_multineutro(
    const MultiPlithogenicSet& mps) {
  if (mps.dims() != 3)
    throw UnsupportedDimsError("conversion requires s = 3");
  if (mps.dcf.dims != 1)
    throw UnsupportedDimsError("conversion requires t = 1");
  std::map<Element, MultiGrade> out;
  for (const auto& x : mps.carrier) {
    MultiGrade m;
    for (std::size_t i = 0; i < mps.attributes.size(); ++i) {
      for (const auto& a : mps.attributes[i].values) {
        const auto* degrees = mps.dafs[i].find(x, a);
        if (!degrees || degrees->size() != 3)
          throw DomainError("IncompleteDAF", "missing DAF entry for " + x);
        m.truths.push_back((*degrees)[0]);
        m.indeterminacies.push_back((*degrees)[1]);
        m.falsities.push_back((*degrees)[2]);
      }
    }
    out[x] = std::move(m);
  }
  return out;
}

PlithogenicSet aggregate_multiplithogenic(const MultiPlithogenicSet& mps,
                                          Aggregation agg) {
  const std::size_t s = mps.dims();
  PlithogenicSet out;
  out.carrier = mps.carrier;
  std::string name;
  for (const auto& attr : mps.attributes) {
    if (!name.empty()) name += "+";
    name += attr.name;
  }
  out.spec.name = name.empty() ? "combined" : name;
  out.spec.values = {"combined"};
  out.daf.dims = s;
  out.daf.ranges.assign(s, GradeRange::standard());
  for (std::size_t i = 0; i < mps.attributes.size() && i < mps.dafs.size(); ++i)
    for (std::size_t c = 0; c < mps.dafs[i].ranges.size() && c < s; ++c)
      out.daf.ranges[c] = {std::min(out.daf.ranges[c].lo, mps.dafs[i].ranges[c].lo),
                           std::max(out.daf.ranges[c].hi, mps.dafs[i].ranges[c].hi)};

  for (const auto& x : mps.carrier) {
    std::vector<double> combined;
    std::size_t count = 0;
    for (std::size_t i = 0; i < mps.attributes.size(); ++i) {
      for (const auto& a : mps.attributes[i].values) {
        const auto* degrees = mps.dafs[i].find(x, a);
        if (!degrees || degrees->size() != s)
          throw DomainError("IncompleteDAF", "missing DAF entry for " + x);
        if (combined.empty()) {
          combined = *degrees;
        } else {
          for (std::size_t c = 0; c < s; ++c) {
            switch (agg) {
              case Aggregation::Max:
                combined[c] = std::max(combined[c], (*degrees)[c]);
                break;
              case Aggregation::Min:
                combined[c] = std::min(combined[c], (*degrees)[c]);
                break;
              case Aggregation::Mean:
                combined[c] += (*degrees)[c];
                break;
            }
          }
        }
        ++count;
      }
    }
    if (agg == Aggregation::Mean && count > 0)
      for (auto& c : combined) c /= static_cast<double>(count);
    out.daf.entries[{x, "combined"}] = std::move(combined);
  }
  out.dcf = DCFMatrix::zero(out.spec.values, mps.dcf.dims);
  return out;
}

MultiPlithogenicSet treeplithogenic_to_multiplithogenic(
    const TreePlithogenicSet& tps) {
  if (tps.tree.depth() != 2)
    throw WrongDepthError("flattening requires an attribute tree of depth 2");
  MultiPlithogenicSet out;
  out.carrier = tps.carrier;
  out.dcf.dims = tps.dcf.dims;
  for (const auto& level1 : tps.tree.level1()) {
    const auto* node = tps.tree.node(level1);
    AttributeSpec spec;
    spec.name = level1;
    DAFTable daf;
    daf.dims = tps.dims();
    daf.ranges.assign(daf.dims, GradeRange::standard());
    for (const auto& child : node->children) {
      auto vit = tps.node_values.find(child);
      auto dit = tps.node_dafs.find(child);
      if (vit == tps.node_values.end() || dit == tps.node_dafs.end())
        throw DomainError("IncompleteDAF", "level-2 node " + child + " lacks data");
      if (vit->second.size() != 1)
        throw AmbiguousValueError("level-2 node " + child +
                                  " must carry a single attribute value");
      spec.values.push_back(child);  // node ids are the new values
      daf.ranges = dit->second.ranges;
      const AttributeValue& v = vit->second.front();
      for (const auto& x : tps.carrier) {
        const auto* degrees = dit->second.find(x, v);
        if (!degrees)
          throw DomainError("IncompleteDAF", "missing DAF entry for " + x);
        daf.entries[{x, child}] = *degrees;
      }
      // Carry contradiction degrees across, keyed by the node ids.
      for (const auto& other : tps.tree.nodes_at_level(2)) {
        auto oit = tps.node_values.find(other);
        if (oit == tps.node_values.end() || oit->second.size() != 1) continue;
        const auto* deg = tps.dcf.find(v, oit->second.front());
        if (deg) out.dcf.entries[{child, other}] = *deg;
      }
    }
    out.attributes.push_back(std::move(spec));
    out.dafs.push_back(std::move(daf));
  }
  return out;
}

namespace {

// Shared cursor for the two node-keyed views: requires a singleton value set
// per node and a DAF of the stated dimension.
template <typename Store>
void build_view(const TreePlithogenicSet& tps, std::size_t dims, Store&& store) {
  if (tps.dims() != dims)
    throw UnsupportedDimsError("view requires s = " + std::to_string(dims));
  if (tps.dcf.dims != 1)
    throw UnsupportedDimsError("view requires t = 1");
  for (const auto& id : tps.tree.all_nodes()) {
    auto vit = tps.node_values.find(id);
    auto dit = tps.node_dafs.find(id);
    if (vit == tps.node_values.end() || dit == tps.node_dafs.end())
      throw DomainError("IncompleteDAF", "node " + id + " lacks data");
    if (vit->second.size() != 1)
      throw AmbiguousValueError("node " + id + " must carry a single value");
    const AttributeValue& v = vit->second.front();
    for (const auto& x : tps.carrier) {
      const auto* degrees = dit->second.find(x, v);
      if (!degrees || degrees->size() != dims)
        throw DomainError("IncompleteDAF", "missing DAF entry for " + x);
      store(NodeKey{id}, x, *degrees);
    }
  }
}

}  // namespace

TreeNeutrosophicView treeplithogenic_to_treeneutrosophic(
    const TreePlithogenicSet& tps) {
  TreeNeutrosophicView view;
  view.carrier = tps.carrier;
  build_view(tps, 3, [&](const NodeKey& key, const Element& x,
                         const std::vector<double>& d) {
    view.membership[key][x] = {d[0], d[1], d[2]};
  });
  return view;
}

TreeFuzzyView treeplithogenic_to_treefuzzy(const TreePlithogenicSet& tps) {
  TreeFuzzyView view;
  view.carrier = tps.carrier;
  build_view(tps, 1, [&](const NodeKey& key, const Element& x,
                         const std::vector<double>& d) {
    view.membership[key][x] = d[0];
  });
  return view;
}

}  // namespace uncertain
