#ifndef UNCERTAIN_LATTICE_HPP
#define UNCERTAIN_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uncertain/graphs.hpp"
#include "uncertain/grades.hpp"
#include "uncertain/hyper.hpp"
#include "uncertain/plithogenic.hpp"
#include "uncertain/soft.hpp"
#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

using Payload = std::variant<
    GradedSet, MultiGradedSet, MultiCrispSet,
    PlithogenicSet, MultiPlithogenicSet, TreePlithogenicSet,
    HyperGradedSet, SuperHyperGradedSet, HyperPlithogenicSet,
    SoftSet, SoftExpertSet, MultiSoftSet, HyperSoftSet, SuperHyperSoftSet,
    TreeSoftSet, RankedSoftSet, RankedHyperSoftSet, NeutroMultiSoftSet,
    NeutroTreeSoftSet,
    CrispGraph, GradedGraph, HyperFuzzyGraph, PlithogenicGraph,
    MultiGradedGraph, Hypergraph, NeutroHypergraph, SuperHyperGraph,
    SoftGraph, NeutroSoftGraph, HyperSoftGraph,
    WeightedGraph, HyperWeightedGraph, SuperHyperWeightedGraph,
    LabeledGraph, HyperLabeledGraph, SuperHyperLabeledGraph>;

// A structure instance tagged with its registered kind. The tag resolves
// variants the payload type alone cannot (bijective vs plain soft sets,
// regime-qualified kinds, multisoft vs soft graphs).
struct Instance {
  std::string kind;
  Payload payload;
};

struct RegistryEdge {
  std::string id;        // "special->general"
  std::string from;
  std::string to;
  std::string witness;   // embedding operation and its fixed parameters
  std::string law;       // the generalization statement the edge mechanizes
  std::function<Instance(const Instance&)> apply;
};

struct EdgeVerdict {
  std::string edge_id;
  enum class Status { EmbeddedAndValid, EmbedFailed, ValidationFailed, NoGenerator } status =
      Status::EmbeddedAndValid;
  std::size_t samples_run = 0;
  std::size_t failures = 0;
  std::string counterexample;  // serialized smallest failing instance
  std::string detail;
};

struct LatticeReport {
  std::vector<EdgeVerdict> verdicts;

  bool all_passed() const {
    for (const auto& v : verdicts)
      if (v.failures > 0 || v.status == EdgeVerdict::Status::EmbedFailed ||
          v.status == EdgeVerdict::Status::ValidationFailed)
        return false;
    return true;
  }
  std::size_t edges_tested() const {
    std::size_t n = 0;
    for (const auto& v : verdicts)
      if (v.status != EdgeVerdict::Status::NoGenerator) ++n;
    return n;
  }
};

// Deterministic splitmix-style generator handle used by instance generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();                         // [0, 1)
  double uniform(double lo, double hi);     // [lo, hi)
  std::size_t index(std::size_t bound);     // [0, bound)
  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

using Generator = std::function<Instance(Rng&, std::size_t size)>;
using Validator = std::function<ValidationReport(const Instance&)>;

class KindRegistry {
 public:
  void add_kind(const std::string& kind, Validator validator,
                Generator generator = nullptr);
  void add_edge(RegistryEdge edge);

  bool has_kind(const std::string& kind) const { return kinds_.count(kind) > 0; }
  std::vector<std::string> kinds() const;
  const std::vector<RegistryEdge>& edges() const { return edges_; }

  ValidationReport validate(const Instance& instance) const;
  bool can_generate(const std::string& kind) const;
  Instance generate(const std::string& kind, Rng& rng, std::size_t size) const;

  // Reachability along registered edges (reflexive).
  bool is_generalization(const std::string& special, const std::string& general) const;

  // Composes witnesses along the shortest registered path; ties broken by
  // lexicographic edge id. The result passes the target kind's validator or
  // WitnessFailureError is thrown naming the failing edge.
  Instance embed(const Instance& instance, const std::string& target) const;

  // Every kind reachable from `kind`, excluding `kind` itself.
  std::vector<std::string> reachable_from(const std::string& kind) const;

  // Seeded embed-then-revalidate sweep over every edge.
  LatticeReport verify(std::size_t samples, std::uint64_t seed) const;

  // One "special -> general : theorem" line per edge.
  std::string export_edge_list() const;

  bool is_dag() const;

 private:
  struct KindInfo {
    Validator validator;
    Generator generator;
  };
  std::map<std::string, KindInfo> kinds_;
  std::vector<RegistryEdge> edges_;

  std::optional<std::vector<const RegistryEdge*>> shortest_path(
      const std::string& from, const std::string& to) const;
};

// The registry holding every structure kind and generalization edge this
// library mechanizes.
const KindRegistry& default_registry();

// Short description of an instance used in counterexample reports.
std::string describe_instance(const Instance& instance);

}  // namespace uncertain

#endif
