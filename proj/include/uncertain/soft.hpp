#ifndef UNCERTAIN_SOFT_HPP
#define UNCERTAIN_SOFT_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "uncertain/attribute_tree.hpp"
#include "uncertain/grades.hpp"
#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

using Parameter = std::string;
using ParameterSet = std::set<Parameter>;

// Sparse throughout this family: unlisted keys are undefined, which is
// distinct from a key mapped to the empty set.
struct SoftSet {
  Universe universe;
  std::map<Parameter, ElementSet> mapping;
};

struct SoftExpertSet {
  Universe universe;
  std::vector<Parameter> parameters;  // E
  std::vector<std::string> experts;   // X
  std::vector<std::string> opinions;  // O
  std::map<std::tuple<Parameter, std::string, std::string>, ElementSet> mapping;
};

struct MultiSoftSet {
  Universe universe;
  std::vector<std::pair<std::string, ParameterSet>> families;  // disjoint E_i
  std::map<ParameterSet, ElementSet> mapping;
};

struct AttrDomain {
  std::string name;
  std::vector<std::string> values;
};

// Keys are attribute-value tuples in declaration order.
struct HyperSoftSet {
  Universe universe;
  std::vector<AttrDomain> domains;  // pairwise disjoint value sets
  std::map<std::vector<std::string>, ElementSet> mapping;
};

// Keys are tuples of attribute-value subsets (stored sorted).
struct SuperHyperSoftSet {
  Universe universe;
  std::vector<AttrDomain> domains;
  std::map<std::vector<std::vector<std::string>>, ElementSet> mapping;
};

// Keys are subsets of tree nodes.
struct TreeSoftSet {
  Universe universe;  // H
  AttributeTree tree;
  std::map<NodeKey, ElementSet> mapping;
};

using RankedPartition = std::vector<ElementSet>;  // (V_0, ..., V_k)

struct RankedSoftSet {
  Universe universe;
  std::map<Parameter, RankedPartition> mapping;
};

struct RankedHyperSoftSet {
  Universe universe;
  std::vector<AttrDomain> domains;
  std::map<std::vector<std::string>, RankedPartition> mapping;
};

// A soft-family value carrying per-element neutrosophic grades on X_a.
struct GradedSoftValue {
  ElementSet members;
  std::map<Element, std::array<double, 3>> grades;  // exactly on members
};

// Generic graded layer over any key type used by the family.
template <typename Key>
struct GradedSoftLayer {
  Universe universe;
  std::map<Key, GradedSoftValue> mapping;
};

using NeutroSoftSet = GradedSoftLayer<Parameter>;
struct NeutroMultiSoftSet : GradedSoftLayer<ParameterSet> {};
struct NeutroTreeSoftSet : GradedSoftLayer<NodeKey> {};

// --- Soft set algebra ------------------------------------------------------

// Union over A ∪ B with the three-case rule; intersection over A ∩ B.
SoftSet soft_union(const SoftSet& f, const SoftSet& g);
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g);
bool is_soft_subset(const SoftSet& f, const SoftSet& g);

// Null: every listed key maps to the empty set. Full: the union of listed
// values covers the universe.
bool is_null(const SoftSet& s);
bool is_full(const SoftSet& s);
bool is_null(const MultiSoftSet& s);
bool is_full(const MultiSoftSet& s);
bool is_null(const HyperSoftSet& s);
bool is_full(const HyperSoftSet& s);
bool is_null(const SuperHyperSoftSet& s);
bool is_full(const SuperHyperSoftSet& s);
bool is_null(const TreeSoftSet& s);
bool is_full(const TreeSoftSet& s);

ValidationReport validate_soft(const SoftSet& s);
ValidationReport validate_multisoft(const MultiSoftSet& s);

ValidationReport hypersoft_validate(const HyperSoftSet& h);
// Reinterprets a 1-attribute hypersoft set as a plain soft set.
SoftSet hypersoft_as_soft(const HyperSoftSet& h);

ValidationReport superhypersoft_validate(const SuperHyperSoftSet& s);
// Wraps every tuple component e as the singleton {e}.
SuperHyperSoftSet superhypersoft_from_hypersoft(const HyperSoftSet& h);
// Restriction of a superhypersoft set to singleton-only keys.
HyperSoftSet superhypersoft_to_hypersoft(const SuperHyperSoftSet& s);

ValidationReport treesoft_validate(const TreeSoftSet& t);
// Depth-2 flatten: level-2 nodes become the flat parameter pool.
MultiSoftSet treesoft_to_multisoft(const TreeSoftSet& t);
// Inverse embedding: families become level-1 nodes, parameters their children.
TreeSoftSet multisoft_to_treesoft(const MultiSoftSet& m);

ValidationReport soft_expert_validate(const SoftExpertSet& se);

// Disjointness and exhaustivity, reported independently. The tree overload
// additionally requires singleton node keys.
ValidationReport bijective_validate(const SoftSet& s);
ValidationReport bijective_validate(const TreeSoftSet& t);
// Drops the bijectivity claim; the mapping itself is returned unchanged.
TreeSoftSet bijective_relax(const TreeSoftSet& bt);

ValidationReport ranked_validate(const RankedSoftSet& r);
ValidationReport ranked_validate(const RankedHyperSoftSet& r);

template <typename Key>
std::map<Key, ElementSet> graded_soft_strip(const GradedSoftLayer<Key>& g) {
  std::map<Key, ElementSet> out;
  for (const auto& [key, value] : g.mapping) out[key] = value.members;
  return out;
}

ValidationReport graded_soft_validate_value(const GradedSoftValue& value,
                                            const Universe& universe,
                                            const std::string& where);

template <typename Key>
ValidationReport graded_soft_validate(const GradedSoftLayer<Key>& g,
                                      std::string (*key_name)(const Key&)) {
  ValidationReport report;
  for (const auto& [key, value] : g.mapping)
    report.merge(graded_soft_validate_value(value, g.universe, key_name(key)));
  return report;
}

std::string parameter_key_name(const Parameter& p);
std::string set_key_name(const ParameterSet& s);

}  // namespace uncertain

#endif
