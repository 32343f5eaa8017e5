#include "uncertain/soft.hpp"

#include <algorithm>
#include <sstream>

#include "uncertain/numeric.hpp"

namespace uncertain {

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

std::string tuple_name(const std::vector<std::string>& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ",";
    out += key[i];
  }
  return out + ")";
}

std::string subset_tuple_name(const std::vector<std::vector<std::string>>& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < key[i].size(); ++j) {
      if (j) out += ",";
      out += key[i][j];
    }
    out += "}";
  }
  return out + ")";
}

void check_values_in_universe(ValidationReport& report, const Universe& universe,
                              const ElementSet& value, const std::string& where) {
  for (const auto& e : value)
    if (!universe.contains(e))
      report.add("UnknownElement", where, "value contains " + e);
}

ValidationReport check_domains(const std::vector<AttrDomain>& domains) {
  ValidationReport report;
  std::set<std::string> names, values;
  for (const auto& d : domains) {
    if (!names.insert(d.name).second)
      report.add("DuplicateAttribute", d.name, "attribute names must be distinct");
    for (const auto& v : d.values)
      if (!values.insert(v).second)
        report.add("OverlappingDomains", v,
                   "attribute value sets must be pairwise disjoint");
  }
  return report;
}

template <typename Map>
bool all_empty(const Map& mapping) {
  for (const auto& [_, value] : mapping)
    if (!value.empty()) return false;
  return true;
}

template <typename Map>
ElementSet union_of_values(const Map& mapping) {
  ElementSet out;
  for (const auto& [_, value] : mapping) out.insert(value.begin(), value.end());
  return out;
}

ValidationReport check_partition(const RankedPartition& partition,
                                 const Universe& universe,
                                 const std::string& where) {
  ValidationReport report;
  ElementSet seen;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (const auto& e : partition[i]) {
      if (!universe.contains(e))
        report.add("UnknownElement", where + ".V" + std::to_string(i),
                   "block contains " + e);
      if (!seen.insert(e).second)
        report.add("BlockOverlap", where + ".V" + std::to_string(i),
                   e + " appears in more than one block");
    }
  }
  if (seen != universe.as_set())
    report.add("NotACover", where, "blocks must union to the universe");
  return report;
}

}  // namespace

// --- algebra ---------------------------------------------------------------

SoftSet soft_union(const SoftSet& f, const SoftSet& g) {
  if (!(f.universe == g.universe))
    throw UniverseMismatchError("soft union needs a shared universe");
  SoftSet out;
  out.universe = f.universe;
  out.mapping = f.mapping;
  for (const auto& [key, value] : g.mapping) {
    auto it = out.mapping.find(key);
    if (it == out.mapping.end())
      out.mapping[key] = value;
    else
      it->second = set_union(it->second, value);
  }
  return out;
}

SoftSet soft_intersection(const SoftSet& f, const SoftSet& g) {
  if (!(f.universe == g.universe))
    throw UniverseMismatchError("soft intersection needs a shared universe");
  SoftSet out;
  out.universe = f.universe;
  for (const auto& [key, value] : f.mapping) {
    auto it = g.mapping.find(key);
    if (it != g.mapping.end())
      out.mapping[key] = set_intersection(value, it->second);
  }
  return out;
}

bool is_soft_subset(const SoftSet& f, const SoftSet& g) {
  if (!(f.universe == g.universe))
    throw UniverseMismatchError("soft subset needs a shared universe");
  for (const auto& [key, value] : f.mapping) {
    auto it = g.mapping.find(key);
    if (it == g.mapping.end()) return false;
    if (!is_subset(value, it->second)) return false;
  }
  return true;
}

bool is_null(const SoftSet& s) { return all_empty(s.mapping); }
bool is_full(const SoftSet& s) {
  return union_of_values(s.mapping) == s.universe.as_set();
}
bool is_null(const MultiSoftSet& s) { return all_empty(s.mapping); }
bool is_full(const MultiSoftSet& s) {
  return union_of_values(s.mapping) == s.universe.as_set();
}
bool is_null(const HyperSoftSet& s) { return all_empty(s.mapping); }
bool is_full(const HyperSoftSet& s) {
  return union_of_values(s.mapping) == s.universe.as_set();
}
bool is_null(const SuperHyperSoftSet& s) { return all_empty(s.mapping); }
bool is_full(const SuperHyperSoftSet& s) {
  return union_of_values(s.mapping) == s.universe.as_set();
}
bool is_null(const TreeSoftSet& s) { return all_empty(s.mapping); }
bool is_full(const TreeSoftSet& s) {
  return union_of_values(s.mapping) == s.universe.as_set();
}

ValidationReport validate_soft(const SoftSet& s) {
  ValidationReport report;
  for (const auto& [key, value] : s.mapping)
    check_values_in_universe(report, s.universe, value, key);
  return report;
}

ValidationReport validate_multisoft(const MultiSoftSet& s) {
  ValidationReport report;
  std::set<Parameter> pool;
  for (const auto& [name, family] : s.families) {
    for (const auto& p : family)
      if (!pool.insert(p).second)
        report.add("OverlappingFamilies", p,
                   "parameter appears in more than one family");
  }
  for (const auto& [key, value] : s.mapping) {
    for (const auto& p : key)
      if (!pool.count(p))
        report.add("UnknownParameter", set_key_name(key),
                   "key references unknown parameter " + p);
    check_values_in_universe(report, s.universe, value, set_key_name(key));
  }
  return report;
}

// --- hypersoft ---------------------------------------------------------------

ValidationReport hypersoft_validate(const HyperSoftSet& h) {
  ValidationReport report = check_domains(h.domains);
  for (const auto& [key, value] : h.mapping) {
    if (key.size() != h.domains.size()) {
      report.add("KeyArity", tuple_name(key),
                 "expected " + std::to_string(h.domains.size()) + " components");
      continue;
    }
    for (std::size_t i = 0; i < key.size(); ++i) {
      const auto& values = h.domains[i].values;
      if (std::find(values.begin(), values.end(), key[i]) == values.end())
        report.add("UnknownValue", tuple_name(key),
                   key[i] + " not in domain " + h.domains[i].name);
    }
    check_values_in_universe(report, h.universe, value, tuple_name(key));
  }
  return report;
}

SoftSet hypersoft_as_soft(const HyperSoftSet& h) {
  if (h.domains.size() != 1)
    throw WrongArityError("soft reinterpretation requires exactly one attribute");
  SoftSet out;
  out.universe = h.universe;
  for (const auto& [key, value] : h.mapping) {
    if (key.size() != 1)
      throw WrongArityError("tuple key " + tuple_name(key) + " is not unary");
    out.mapping[key.front()] = value;
  }
  return out;
}

ValidationReport superhypersoft_validate(const SuperHyperSoftSet& s) {
  ValidationReport report = check_domains(s.domains);
  for (const auto& [key, value] : s.mapping) {
    if (key.size() != s.domains.size()) {
      report.add("KeyArity", subset_tuple_name(key),
                 "expected " + std::to_string(s.domains.size()) + " components");
      continue;
    }
    for (std::size_t i = 0; i < key.size(); ++i) {
      for (const auto& v : key[i]) {
        const auto& values = s.domains[i].values;
        if (std::find(values.begin(), values.end(), v) == values.end())
          report.add("UnknownValue", subset_tuple_name(key),
                     v + " not in domain " + s.domains[i].name);
      }
      if (!std::is_sorted(key[i].begin(), key[i].end()))
        report.add("NonCanonicalKey", subset_tuple_name(key),
                   "subsets within keys must be stored sorted");
    }
    check_values_in_universe(report, s.universe, value, subset_tuple_name(key));
  }
  return report;
}

SuperHyperSoftSet superhypersoft_from_hypersoft(const HyperSoftSet& h) {
  SuperHyperSoftSet out;
  out.universe = h.universe;
  out.domains = h.domains;
  for (const auto& [key, value] : h.mapping) {
    std::vector<std::vector<std::string>> wrapped;
    wrapped.reserve(key.size());
    for (const auto& component : key) wrapped.push_back({component});
    out.mapping[std::move(wrapped)] = value;
  }
  return out;
}

HyperSoftSet superhypersoft_to_hypersoft(const SuperHyperSoftSet& s) {
  HyperSoftSet out;
  out.universe = s.universe;
  out.domains = s.domains;
  for (const auto& [key, value] : s.mapping) {
    std::vector<std::string> unwrapped;
    bool all_singletons = true;
    for (const auto& component : key) {
      if (component.size() != 1) {
        all_singletons = false;
        break;
      }
      unwrapped.push_back(component.front());
    }
    if (all_singletons) out.mapping[std::move(unwrapped)] = value;
  }
  return out;
}

// --- treesoft ---------------------------------------------------------------

ValidationReport treesoft_validate(const TreeSoftSet& t) {
  ValidationReport report;
  for (const auto& [key, value] : t.mapping) {
    for (const auto& node : key)
      if (!t.tree.has_node(node))
        report.add("UnknownNode", set_key_name(key),
                   "key references unknown node " + node);
    check_values_in_universe(report, t.universe, value, set_key_name(key));
  }
  return report;
}

MultiSoftSet treesoft_to_multisoft(const TreeSoftSet& t) {
  if (t.tree.depth() != 2)
    throw WrongDepthError("multisoft flattening requires a depth-2 tree");
  for (const auto& [key, _] : t.mapping)
    for (const auto& node : key)
      if (t.tree.level_of(node) != 2)
        throw BadKeyError("key references level-" +
                          std::to_string(*t.tree.level_of(node)) + " node " + node);
  MultiSoftSet out;
  out.universe = t.universe;
  for (const auto& level1 : t.tree.level1()) {
    const auto* node = t.tree.node(level1);
    ParameterSet family(node->children.begin(), node->children.end());
    out.families.emplace_back(level1, std::move(family));
  }
  for (const auto& [key, value] : t.mapping) out.mapping[key] = value;
  return out;
}

TreeSoftSet multisoft_to_treesoft(const MultiSoftSet& m) {
  TreeSoftSet out;
  out.universe = m.universe;
  for (const auto& [name, family] : m.families) {
    out.tree.add_root_child(name);
    for (const auto& p : family) out.tree.add_child(name, p);
  }
  for (const auto& [key, value] : m.mapping) out.mapping[key] = value;
  return out;
}

ValidationReport soft_expert_validate(const SoftExpertSet& se) {
  ValidationReport report;
  auto listed = [](const std::vector<std::string>& xs, const std::string& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  for (const auto& [key, value] : se.mapping) {
    const auto& [e, x, o] = key;
    std::string where = "(" + e + "," + x + "," + o + ")";
    if (!listed(se.parameters, e))
      report.add("UnknownParameter", where, e + " not in E");
    if (!listed(se.experts, x)) report.add("UnknownExpert", where, x + " not in X");
    if (!listed(se.opinions, o)) report.add("UnknownOpinion", where, o + " not in O");
    check_values_in_universe(report, se.universe, value, where);
  }
  return report;
}

// --- bijective / ranked -------------------------------------------------------

namespace {

ValidationReport check_bijective(const std::vector<std::pair<std::string, ElementSet>>& entries,
                                 const Universe& universe) {
  ValidationReport report;
  ElementSet covered;
  for (const auto& [name, value] : entries) {
    for (const auto& e : value) {
      if (!covered.insert(e).second)
        report.add("Disjointness", name, e + " appears under more than one key");
    }
  }
  if (covered != universe.as_set())
    report.add("Exhaustivity", "", "values must union to the universe");
  return report;
}

}  // namespace

ValidationReport bijective_validate(const SoftSet& s) {
  std::vector<std::pair<std::string, ElementSet>> entries;
  for (const auto& [key, value] : s.mapping) entries.emplace_back(key, value);
  return check_bijective(entries, s.universe);
}

ValidationReport bijective_validate(const TreeSoftSet& t) {
  ValidationReport report;
  std::vector<std::pair<std::string, ElementSet>> entries;
  for (const auto& [key, value] : t.mapping) {
    if (key.size() != 1) {
      report.add("NonSingletonKey", set_key_name(key),
                 "bijective treesoft keys are single nodes");
      continue;
    }
    entries.emplace_back(*key.begin(), value);
  }
  report.merge(check_bijective(entries, t.universe));
  return report;
}

TreeSoftSet bijective_relax(const TreeSoftSet& bt) { return bt; }

ValidationReport ranked_validate(const RankedSoftSet& r) {
  ValidationReport report;
  for (const auto& [key, partition] : r.mapping)
    report.merge(check_partition(partition, r.universe, key));
  return report;
}

ValidationReport ranked_validate(const RankedHyperSoftSet& r) {
  ValidationReport report = check_domains(r.domains);
  for (const auto& [key, partition] : r.mapping) {
    if (key.size() != r.domains.size()) {
      report.add("KeyArity", tuple_name(key),
                 "expected " + std::to_string(r.domains.size()) + " components");
      continue;
    }
    for (std::size_t i = 0; i < key.size(); ++i) {
      const auto& values = r.domains[i].values;
      if (std::find(values.begin(), values.end(), key[i]) == values.end())
        report.add("UnknownValue", tuple_name(key),
                   key[i] + " not in domain " + r.domains[i].name);
    }
    report.merge(check_partition(partition, r.universe, tuple_name(key)));
  }
  return report;
}

ValidationReport graded_soft_validate_value(const GradedSoftValue& value,
                                            const Universe& universe,
                                            const std::string& where) {
  ValidationReport report;
  check_values_in_universe(report, universe, value.members, where);
  for (const auto& e : value.members)
    if (!value.grades.count(e))
      report.add("MissingGrade", where, "no grade for member " + e);
  for (const auto& [e, g] : value.grades) {
    if (!value.members.count(e))
      report.add("StrayGrade", where, "grade for non-member " + e);
    for (double c : g)
      if (!in_interval(c, 0.0, 1.0))
        report.add("OutOfRange", where + "." + e, fmt(c) + " outside [0, 1]");
    double sum = g[0] + g[1] + g[2];
    if (!in_interval(sum, 0.0, 3.0))
      report.add("SumConstraint", where + "." + e,
                 "T + I + F = " + fmt(sum) + " outside [0, 3]");
  }
  return report;
}

std::string parameter_key_name(const Parameter& p) { return p; }

std::string set_key_name(const ParameterSet& s) { return "{" + join(s) + "}"; }

}  // namespace uncertain
