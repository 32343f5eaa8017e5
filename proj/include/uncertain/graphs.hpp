#ifndef UNCERTAIN_GRAPHS_HPP
#define UNCERTAIN_GRAPHS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uncertain/grades.hpp"
#include "uncertain/plithogenic.hpp"
#include "uncertain/powerset.hpp"
#include "uncertain/rough.hpp"
#include "uncertain/soft.hpp"
#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

// Unordered simple edge; endpoints stored sorted.
struct Edge {
  Element u, v;

  Edge() = default;
  Edge(Element a, Element b) {
    if (b < a) std::swap(a, b);
    u = std::move(a);
    v = std::move(b);
  }

  std::string name() const { return "(" + u + "," + v + ")"; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::set<Edge>;

struct CrispGraph {
  Universe vertices;
  EdgeSet edges;

  bool has_edge(const Element& a, const Element& b) const {
    return edges.count(Edge(a, b)) > 0;
  }
};

ValidationReport validate_crisp_graph(const CrispGraph& g);
bool is_connected(const CrispGraph& g);
bool induced_connected(const CrispGraph& g, const ElementSet& vertices);

// Vertex- and edge-graded graph; all grades share one kind and range set.
struct GradedGraph {
  CrispGraph base;
  GradeKind kind = GradeKind::Fuzzy;
  std::vector<GradeRange> ranges;
  std::map<Element, std::vector<double>> vertex_grades;
  std::map<Edge, std::vector<double>> edge_grades;

  GradeTuple vertex_grade(const Element& v) const {
    return GradeTuple::make(kind, vertex_grades.at(v), ranges);
  }
  GradeTuple edge_grade(const Edge& e) const {
    return GradeTuple::make(kind, edge_grades.at(e), ranges);
  }
  bool standard_regime() const {
    for (const auto& r : ranges)
      if (!r.is_standard()) return false;
    return true;
  }
};

// Hesitant / hyperfuzzy graph: finite membership subsets per vertex and edge.
struct HyperFuzzyGraph {
  CrispGraph base;
  GradeRange range = GradeRange::standard();
  std::map<Element, std::vector<double>> vertex_sets;
  std::map<Edge, std::vector<double>> edge_sets;
};

// Edge attribute values are pairs of vertex attribute values, which is what
// the non-general edge constraints compare against.
using EdgeAttrValue = std::pair<AttributeValue, AttributeValue>;

struct PlithogenicGraph {
  CrispGraph base;
  bool general_flag = false;
  std::size_t dims = 1;   // s
  std::size_t cdims = 1;  // t
  GradeRange range = GradeRange::standard();

  // Vertex side (PM).
  std::string vertex_attr;
  std::vector<AttributeValue> vertex_values;
  std::map<std::pair<Element, AttributeValue>, std::vector<double>> adf;
  DCFMatrix acf;

  // Edge side (PN).
  std::string edge_attr;
  std::vector<EdgeAttrValue> edge_values;
  std::map<std::pair<Edge, EdgeAttrValue>, std::vector<double>> bdf;
  // bCf keyed by a pair of edge attribute values.
  std::map<std::pair<EdgeAttrValue, EdgeAttrValue>, std::vector<double>> bcf;
};

enum class MultiGraphKind { MultiNeutrosophic, MultiQuadripartitioned, MultiPentapartitioned };

// Per-vertex/edge lists of evaluations. MultiNeutrosophic stores one
// MultiGrade; the partitioned kinds store lists of quad/penta tuples.
struct MultiGradedGraph {
  CrispGraph base;
  MultiGraphKind kind = MultiGraphKind::MultiNeutrosophic;
  std::map<Element, MultiGrade> vertex_multi;
  std::map<Edge, MultiGrade> edge_multi;
  std::map<Element, std::vector<std::vector<double>>> vertex_tuples;
  std::map<Edge, std::vector<std::vector<double>>> edge_tuples;
};

struct Hypergraph {
  Universe vertices;
  std::vector<ElementSet> hyperedges;  // non-empty vertex subsets
};

// Neutrosophic-annotated hypergraph (over/under/off by range).
struct NeutroHypergraph {
  Hypergraph shape;
  GradeRange range = GradeRange::standard();
  std::map<Element, std::array<double, 3>> vertex_grades;
  std::vector<std::array<double, 3>> edge_grades;  // parallel to hyperedges
};

struct SuperHyperGraph {
  Universe base;        // V0
  std::size_t level = 1;
  std::vector<NestedElem> supervertices;  // members of P*_n(V0)
  std::vector<NestedElem> superedges;     // members of P*_n(V0)
};

// Soft graph keyed by parameter sets; plain soft graphs use singleton keys.
struct SoftGraph {
  CrispGraph base;
  std::map<ParameterSet, std::pair<ElementSet, EdgeSet>> mapping;
};

// Soft graph with per-key neutrosophic layers on F(a) and K(a).
struct NeutroSoftGraph {
  CrispGraph base;
  GradeRange range = GradeRange::standard();
  struct Layer {
    ElementSet vertices;
    EdgeSet edges;
    std::map<Element, std::array<double, 3>> vertex_grades;
    std::map<Edge, std::array<double, 3>> edge_grades;
  };
  std::map<Parameter, Layer> mapping;
};

// Hypersoft graph over a connected base; per-tuple vertex subsets must induce
// connected subgraphs. Optional neutrosophic layers per context.
struct HyperSoftGraph {
  CrispGraph base;
  std::vector<AttrDomain> domains;
  GradeRange range = GradeRange::standard();
  struct Context {
    ElementSet vertices;
    std::map<Element, std::array<double, 3>> vertex_grades;  // optional
    std::map<Edge, std::array<double, 3>> edge_grades;       // optional
  };
  std::map<std::vector<std::string>, Context> mapping;
};

struct WeightedGraph {
  CrispGraph base;
  std::map<Edge, double> weights;
};

struct HyperWeightedGraph {
  CrispGraph base;
  std::map<Edge, std::vector<double>> weights;  // non-empty weight sets
};

struct SuperHyperWeightedGraph {
  CrispGraph base;
  std::map<Edge, std::vector<std::vector<double>>> weights;
};

struct LabeledGraph {
  CrispGraph base;
  std::map<Element, std::string> vertex_labels;
  std::map<Edge, std::string> edge_labels;
};

struct HyperLabeledGraph {
  CrispGraph base;
  std::map<Element, std::vector<std::string>> vertex_labels;
  std::map<Edge, std::vector<std::string>> edge_labels;
};

struct SuperHyperLabeledGraph {
  CrispGraph base;
  std::map<Element, std::vector<std::vector<std::string>>> vertex_labels;
  std::map<Edge, std::vector<std::vector<std::string>>> edge_labels;
};

// --- Operations ------------------------------------------------------------

// Kind-specific edge-constraint blocks: Fuzzy mu(e) <= min; Quad T,C <= min
// and U,F <= max; Penta T,C <= min and R,U,F >= max; Hepta T,M,C <= min and
// U,I,K,F >= max; IF/Neutro/DVNS get range checks only. The min/max block is
// enforced for standard-regime graphs; extended-range graphs are validated by
// ranges and sums alone. `skip_edge_rules` drops the block unconditionally.
ValidationReport validate_graded_graph(const GradedGraph& g,
                                       bool skip_edge_rules = false);

ValidationReport validate_hyperfuzzy_graph(const HyperFuzzyGraph& g);

// aCf/bCf reflexivity and symmetry always; when general_flag is false also
// bdf((xy),(a,b)) <= min(adf(x,a), adf(y,b)) and
// bCf((a,b),(c,d)) <= min(aCf(a,c), aCf(b,d)), componentwise.
ValidationReport validate_plithogenic_graph(const PlithogenicGraph& pg);

ValidationReport validate_multigraded_graph(const MultiGradedGraph& mg);
ValidationReport validate_hypergraph(const Hypergraph& h);
ValidationReport validate_neutro_hypergraph(const NeutroHypergraph& h);
ValidationReport validate_superhypergraph(const SuperHyperGraph& g);
ValidationReport soft_graph_validate(const SoftGraph& sg);
ValidationReport validate_neutro_soft_graph(const NeutroSoftGraph& g);
ValidationReport hypersoft_graph_validate(const HyperSoftGraph& hsg);

// Vertex- and edge-wise reduce_grade along the registered reduction chain;
// the base graph is untouched.
GradedGraph reduce_graph(const GradedGraph& g, GradeKind target);

// Vertex- and edge-wise embed_grade; the base graph is untouched.
GradedGraph embed_graph(const GradedGraph& g, GradeKind target);

enum class FourComponentGraphKind { Quadripartitioned, DoubleValued };

struct PlithogenicGraphReduction {
  GradedGraph graph;
  ValidationReport revalidation;  // edge rules skipped for general sources
};

// Positional mapping onto a typed graph (s = 1..5, t = 1, single vertex
// attribute value). s = 2 yields an intuitionistic fuzzy graph; s = 4 yields
// a quadripartitioned graph unless the double-valued reading is requested.
PlithogenicGraphReduction plithogenic_graph_reduce(
    const PlithogenicGraph& pg,
    FourComponentGraphKind four = FourComponentGraphKind::Quadripartitioned);

enum class MultiCollapseMode { SingletonOnly, Mean };

// SingletonOnly unwraps multiplicity-1 evaluations verbatim; Mean averages
// each component list.
GradedGraph collapse_multigraph(const MultiGradedGraph& mg, MultiCollapseMode mode);

// Merges U' = U + R per evaluation.
MultiGradedGraph multipenta_to_multiquad(const MultiGradedGraph& mg);

// Size-2-hyperedge reinterpretation; NonBinaryEdge otherwise.
CrispGraph hypergraph_to_graph(const Hypergraph& h);
GradedGraph neutro_hypergraph_to_graph(const NeutroHypergraph& h);
// Narrows the declared range of an off hypergraph to one side; fails with a
// report entry when a value would fall outside the narrowed range.
NeutroHypergraph neutro_hypergraph_restrict(const NeutroHypergraph& h, Regime side);

// Wraps each vertex as {v} and each edge {u,v} as a superedge.
SuperHyperGraph graph_to_superhypergraph(const CrispGraph& g);
Hypergraph graph_to_hypergraph(const CrispGraph& g);
SuperHyperGraph hypergraph_to_superhypergraph(const Hypergraph& h);

// A' = A, F'(a) = union of F(a') over listed a' subset of a; likewise K'.
SoftGraph multisoft_graph_to_soft(const SoftGraph& msg);

// T' = sup, I' = sup, F' = inf over the keys mentioning each vertex/edge.
// Throws UnmentionedError when some vertex or edge of the base appears in no
// key; sup/inf over an empty key set is undefined and the base graph is
// preserved verbatim.
GradedGraph neutro_soft_graph_aggregate(const NeutroSoftGraph& nsg);
SoftGraph neutro_soft_graph_strip(const NeutroSoftGraph& nsg);
GradedGraph hypersoft_graph_aggregate(const HyperSoftGraph& hsg);

// Annotation validators and singleton lifts/reductions.
ValidationReport validate_annotated(const HyperWeightedGraph& g);
ValidationReport validate_annotated(const SuperHyperWeightedGraph& g);
ValidationReport validate_annotated(const HyperLabeledGraph& g);
ValidationReport validate_annotated(const SuperHyperLabeledGraph& g);

HyperWeightedGraph annotated_lift(const WeightedGraph& g);
SuperHyperWeightedGraph annotated_lift(const HyperWeightedGraph& g);
WeightedGraph annotated_reduce(const HyperWeightedGraph& g);
HyperWeightedGraph annotated_reduce(const SuperHyperWeightedGraph& g);

HyperLabeledGraph annotated_lift(const LabeledGraph& g);
SuperHyperLabeledGraph annotated_lift(const HyperLabeledGraph& g);
LabeledGraph annotated_reduce(const HyperLabeledGraph& g);
HyperLabeledGraph annotated_reduce(const SuperHyperLabeledGraph& g);

ValidationReport hyperfuzzy_graph_validate(const HyperFuzzyGraph& g);

// Vertex pair against a caller-supplied target; edge approximations by the
// endpoint rule over the vertex approximations.
CrispGraphRough rough_graph_approx(const CrispGraph& g, const Partition& p,
                                   const ElementSet& target);

}  // namespace uncertain

#endif
