#include "uncertain/rough.hpp"

#include <algorithm>
#include <functional>

namespace uncertain {

const ElementSet& Partition::class_of(const Element& x) const {
  for (const auto& block : blocks)
    if (block.count(x)) return block;
  throw DomainError("NoClass", "element " + x + " belongs to no block");
}

Partition Partition::singletons(const Universe& u) {
  Partition p;
  p.universe = u;
  for (const auto& e : u) p.blocks.push_back({e});
  return p;
}

ValidationReport validate_partition(const Partition& p) {
  ValidationReport report;
  ElementSet seen;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (p.blocks[i].empty())
      report.add("EmptyBlock", "block " + std::to_string(i), "blocks are non-empty");
    for (const auto& e : p.blocks[i]) {
      if (!p.universe.contains(e))
        report.add("UnknownElement", "block " + std::to_string(i),
                   e + " outside the universe");
      if (!seen.insert(e).second)
        report.add("BlockOverlap", "block " + std::to_string(i),
                   e + " appears in more than one block");
    }
  }
  if (seen != p.universe.as_set())
    report.add("NotACover", "", "blocks must union to the universe");
  return report;
}

Partition partition_from_relation(
    const Universe& u, const std::vector<std::pair<Element, Element>>& pairs) {
  // Union-find over the universe.
  std::map<Element, Element> parent;
  for (const auto& e : u) parent[e] = e;
  std::function<Element(const Element&)> find = [&](const Element& x) -> Element {
    Element root = x;
    while (parent[root] != root) root = parent[root];
    return root;
  };
  for (const auto& [a, b] : pairs) {
    if (!u.contains(a) || !u.contains(b))
      throw NotEquivalenceError("pair references an element outside the universe");
    parent[find(a)] = find(b);
  }

  std::map<Element, ElementSet> classes;
  for (const auto& e : u) classes[find(e)].insert(e);

  // The listed pairs must already be transitively and symmetrically closed:
  // every within-class pair of distinct elements must be listed in some
  // orientation.
  auto listed = [&](const Element& a, const Element& b) {
    for (const auto& [x, y] : pairs)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  for (const auto& [_, cls] : classes) {
    for (const auto& a : cls)
      for (const auto& b : cls)
        if (a < b && !listed(a, b))
          throw NotEquivalenceError("relation is not transitively closed: (" + a +
                                    ", " + b + ") is implied but not listed");
  }

  Partition p;
  p.universe = u;
  for (auto& [_, cls] : classes) p.blocks.push_back(std::move(cls));
  return p;
}

Regions regions_of(const RoughPair& pair, const Universe& ambient) {
  Regions r;
  r.pos = pair.lower;
  r.neg = set_difference(ambient.as_set(), pair.upper);
  r.bnd = set_difference(pair.upper, pair.lower);
  r.definable = r.bnd.empty();
  return r;
}

RoughPair rough_approx(const Partition& p, const ElementSet& target) {
  if (!p.universe.covers(target))
    throw NotASubsetError("target must be a subset of the universe");
  RoughPair out;
  out.target = target;
  out.kind = RoughKind::Classical;
  for (const auto& block : p.blocks) {
    bool inside = is_subset(block, target);
    bool meets = !set_intersection(block, target).empty();
    if (inside) out.lower.insert(block.begin(), block.end());
    if (meets) out.upper.insert(block.begin(), block.end());
  }
  return out;
}

RoughPair soft_rough_approx(const SoftSet& s, const ElementSet& target) {
  if (!s.universe.covers(target))
    throw NotASubsetError("target must be a subset of the universe");
  RoughPair out;
  out.target = target;
  out.kind = RoughKind::SoftFamily;
  for (const auto& [_, value] : s.mapping) {
    if (value.empty()) continue;
    if (is_subset(value, target)) out.lower.insert(value.begin(), value.end());
    if (!set_intersection(value, target).empty())
      out.upper.insert(value.begin(), value.end());
  }
  return out;
}

TreesoftRoughResult treesoft_rough_approx(const TreeSoftSet& t,
                                          const ElementSet& target) {
  if (!t.universe.covers(target))
    throw NotASubsetError("target must be a subset of H");
  SoftSet flattened;
  flattened.universe = t.universe;
  for (const auto& [key, value] : t.mapping)
    flattened.mapping[set_key_name(key)] = value;
  TreesoftRoughResult out;
  out.pair = soft_rough_approx(flattened, target);
  out.regions = regions_of(out.pair, t.universe);
  return out;
}

std::vector<RoughPair> multirough(const std::vector<Partition>& relations,
                                  const ElementSet& target) {
  std::vector<RoughPair> out;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (i > 0 && !(relations[i].universe == relations.front().universe))
      throw UniverseMismatchError("all relations must share one universe");
    out.push_back(rough_approx(relations[i], target));
  }
  return out;
}

std::map<std::string, RoughPair> treerough(
    const AttributeTree& tree, const std::map<std::string, Partition>& node_relations,
    const ElementSet& target) {
  std::map<std::string, RoughPair> out;
  const Universe* universe = nullptr;
  for (const auto& node : tree.all_nodes()) {
    auto it = node_relations.find(node);
    if (it == node_relations.end())
      throw DomainError("MissingRelation", "node " + node + " has no relation");
    if (universe && !(it->second.universe == *universe))
      throw UniverseMismatchError("all node relations must share one universe");
    universe = &it->second.universe;
    out[node] = rough_approx(it->second, target);
  }
  return out;
}

std::map<std::vector<std::string>, RoughPair> hyperrough(const HyperSoftSet& h,
                                                         const Partition& p) {
  if (!(h.universe == p.universe))
    throw UniverseMismatchError("hypersoft set and partition must share a universe");
  std::map<std::vector<std::string>, RoughPair> out;
  for (const auto& [key, value] : h.mapping) out[key] = rough_approx(p, value);
  return out;
}

std::map<std::vector<std::vector<std::string>>, RoughPair> hyperrough(
    const SuperHyperSoftSet& s, const Partition& p) {
  if (!(s.universe == p.universe))
    throw UniverseMismatchError("superhypersoft set and partition must share a universe");
  std::map<std::vector<std::vector<std::string>>, RoughPair> out;
  for (const auto& [key, value] : s.mapping) out[key] = rough_approx(p, value);
  return out;
}

}  // namespace uncertain
