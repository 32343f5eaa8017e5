#ifndef UNCERTAIN_ROUGH_HPP
#define UNCERTAIN_ROUGH_HPP

#include <map>
#include <string>
#include <vector>

#include "uncertain/attribute_tree.hpp"
#include "uncertain/soft.hpp"
#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

// Equivalence relation represented by its blocks.
struct Partition {
  Universe universe;
  std::vector<ElementSet> blocks;  // disjoint, non-empty, cover the universe

  const ElementSet& class_of(const Element& x) const;

  static Partition singletons(const Universe& u);
};

ValidationReport validate_partition(const Partition& p);

// Builds a partition from an explicit relation given as pairs. The input must
// already be an equivalence relation on the universe (reflexive pairs may be
// omitted); throws NotEquivalenceError when the listed pairs are not closed
// under transitivity/symmetry.
Partition partition_from_relation(
    const Universe& u, const std::vector<std::pair<Element, Element>>& pairs);

enum class RoughKind { Classical, SoftFamily };

struct RoughPair {
  ElementSet lower;
  ElementSet upper;
  ElementSet target;
  RoughKind kind = RoughKind::Classical;
};

struct Regions {
  ElementSet pos;
  ElementSet neg;
  ElementSet bnd;
  bool definable = false;
};

Regions regions_of(const RoughPair& pair, const Universe& ambient);

// lower = {x : [x] subset of X}, upper = {x : [x] meets X}.
RoughPair rough_approx(const Partition& p, const ElementSet& target);

// lower = {u : exists a with u in F(a) and F(a) subset of X},
// upper = {u : exists a with u in F(a) and F(a) meets X}.
RoughPair soft_rough_approx(const SoftSet& s, const ElementSet& target);

struct TreesoftRoughResult {
  RoughPair pair;
  Regions regions;
};

// Soft-style approximations with keys ranging over the listed tree keys;
// regions computed against H.
TreesoftRoughResult treesoft_rough_approx(const TreeSoftSet& t,
                                          const ElementSet& target);

// One classical pair per relation, in input order.
std::vector<RoughPair> multirough(const std::vector<Partition>& relations,
                                  const ElementSet& target);

// Per-node classical pair, one per attribute-tree node.
std::map<std::string, RoughPair> treerough(
    const AttributeTree& tree, const std::map<std::string, Partition>& node_relations,
    const ElementSet& target);

// Per attribute tuple a: rough_approx(p, F(a)).
std::map<std::vector<std::string>, RoughPair> hyperrough(const HyperSoftSet& h,
                                                         const Partition& p);
std::map<std::vector<std::vector<std::string>>, RoughPair> hyperrough(
    const SuperHyperSoftSet& s, const Partition& p);

struct CrispGraphRough {
  RoughPair vertices;
  std::set<std::pair<Element, Element>> edge_lower;
  std::set<std::pair<Element, Element>> edge_upper;
};

}  // namespace uncertain

#endif
