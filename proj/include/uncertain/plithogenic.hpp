#ifndef UNCERTAIN_PLITHOGENIC_HPP
#define UNCERTAIN_PLITHOGENIC_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "uncertain/attribute_tree.hpp"
#include "uncertain/grades.hpp"
#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

using AttributeValue = std::string;

struct AttributeSpec {
  std::string name;
  std::vector<AttributeValue> values;  // finite, non-empty
};

// Degree-of-Appurtenance Function: (element, attribute value) -> s reals.
struct DAFTable {
  std::size_t dims = 1;  // s
  std::vector<GradeRange> ranges;  // one per component
  std::map<std::pair<Element, AttributeValue>, std::vector<double>> entries;

  static DAFTable standard(std::size_t s) {
    DAFTable t;
    t.dims = s;
    t.ranges.assign(s, GradeRange::standard());
    return t;
  }

  const std::vector<double>* find(const Element& x, const AttributeValue& a) const {
    auto it = entries.find({x, a});
    return it == entries.end() ? nullptr : &it->second;
  }
};

// Degree-of-Contradiction Function: (value, value) -> t reals in [0,1].
// Reflexive (zero diagonal) and symmetric.
struct DCFMatrix {
  std::size_t dims = 1;  // t
  std::map<std::pair<AttributeValue, AttributeValue>, std::vector<double>> entries;

  const std::vector<double>* find(const AttributeValue& a,
                                  const AttributeValue& b) const {
    auto it = entries.find({a, b});
    if (it != entries.end()) return &it->second;
    it = entries.find({b, a});
    return it == entries.end() ? nullptr : &it->second;
  }

  static DCFMatrix zero(const std::vector<AttributeValue>& values,
                        std::size_t t = 1);
};

struct PlithogenicSet {
  Universe carrier;
  AttributeSpec spec;
  DAFTable daf;
  DCFMatrix dcf;
  bool general_flag = false;

  GradeRange range() const {
    return daf.ranges.empty() ? GradeRange::standard() : daf.ranges.front();
  }
};

struct MultiPlithogenicSet {
  Universe carrier;
  std::vector<AttributeSpec> attributes;  // distinct names, disjoint value sets
  std::vector<DAFTable> dafs;             // one per attribute, same dims
  DCFMatrix dcf;                          // over the union of all value sets

  std::size_t dims() const { return dafs.empty() ? 1 : dafs.front().dims; }
};

struct TreePlithogenicSet {
  Universe carrier;
  AttributeTree tree;
  std::map<std::string, std::vector<AttributeValue>> node_values;  // per node
  std::map<std::string, DAFTable> node_dafs;                       // per node
  DCFMatrix dcf;

  std::size_t dims() const {
    return node_dafs.empty() ? 1 : node_dafs.begin()->second.dims;
  }
};

// Sparse views produced by tree-level reductions: keys are node subsets,
// unlisted keys are undefined (absence is not zero membership).
struct TreeFuzzyView {
  Universe carrier;
  std::map<NodeKey, std::map<Element, double>> membership;
};

struct TreeNeutrosophicView {
  Universe carrier;
  std::map<NodeKey, std::map<Element, std::array<double, 3>>> membership;
};

// --- Operations ----------------------------------------------------------

// DCF reflexivity/symmetry/range, DAF range and completeness over
// carrier x values.
ValidationReport validate_plithogenic(const PlithogenicSet& ps);
ValidationReport validate_multiplithogenic(const MultiPlithogenicSet& mps);
ValidationReport validate_treeplithogenic(const TreePlithogenicSet& tps);

enum class TwoComponentKind { Vague, IntuitionisticFuzzy };

// Positional reduction onto a graded set (s = 1..5, t = 1, single attribute
// value). The s = 2 case is Vague by default; the caller may pick
// IntuitionisticFuzzy instead. Violations of the target's constraints are
// left to validate_grade, never clamped.
GradedSet reduce_plithogenic(const PlithogenicSet& ps,
                             TwoComponentKind two = TwoComponentKind::Vague);

// Collects the three DAF components per element over all attribute values
// (s = 3, t = 1).
std::map<Element, MultiGrade> multiplithogenic_to_multineutro(
    const MultiPlithogenicSet& mps);

enum class Aggregation { Max, Min, Mean };

// Collapses all attribute values to one combined value with componentwise
// aggregated DAF.
PlithogenicSet aggregate_multiplithogenic(const MultiPlithogenicSet& mps,
                                          Aggregation agg);

// Depth-2 flatten: level-1 nodes become attributes, level-2 nodes their
// values. Requires every level-2 node to carry a single attribute value.
MultiPlithogenicSet treeplithogenic_to_multiplithogenic(
    const TreePlithogenicSet& tps);

// s = 3 / s = 1 reinterpretations keyed by singleton node subsets.
TreeNeutrosophicView treeplithogenic_to_treeneutrosophic(
    const TreePlithogenicSet& tps);
TreeFuzzyView treeplithogenic_to_treefuzzy(const TreePlithogenicSet& tps);

}  // namespace uncertain

#endif
