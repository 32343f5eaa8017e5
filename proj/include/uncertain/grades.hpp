#ifndef UNCERTAIN_GRADES_HPP
#define UNCERTAIN_GRADES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

// Admissible range of one membership component. lo is the underlimit,
// hi is the overlimit; standard membership is lo = 0, hi = 1.
struct GradeRange {
  double lo = 0.0;
  double hi = 1.0;

  bool is_standard() const;
  bool well_formed() const;  // lo <= 0 <= 1 <= hi

  static GradeRange standard() { return {0.0, 1.0}; }
  static GradeRange over(double omega) { return {0.0, omega}; }
  static GradeRange under(double psi) { return {psi, 1.0}; }
  static GradeRange off(double psi, double omega) { return {psi, omega}; }

  friend bool operator==(const GradeRange&, const GradeRange&) = default;
};

enum class GradeKind {
  Crisp,
  Fuzzy,
  Vague,
  IntuitionisticFuzzy,
  Neutrosophic,
  Quadripartitioned,
  Pentapartitioned,
  Heptapartitioned,
  DoubleValued,
  HyperBinary,
};

std::size_t arity(GradeKind kind);
const std::vector<std::string>& component_names(GradeKind kind);
std::string kind_name(GradeKind kind);
std::optional<GradeKind> kind_from_name(const std::string& name);

// Default admissible ranges: [0,1] per component, except HyperBinary which
// lives in [0,2].
std::vector<GradeRange> standard_ranges(GradeKind kind);

// A membership tuple: 1 to 7 reals keyed positionally by component name,
// each with its own admissible range.
struct GradeTuple {
  GradeKind kind = GradeKind::Fuzzy;
  std::vector<double> components;
  std::vector<GradeRange> ranges;

  static GradeTuple make(GradeKind kind, std::vector<double> components);
  static GradeTuple make(GradeKind kind, std::vector<double> components,
                         std::vector<GradeRange> ranges);

  double operator[](std::size_t i) const { return components[i]; }

  friend bool operator==(const GradeTuple&, const GradeTuple&) = default;
};

// Every element of the universe carries exactly one grade; all grades share
// the same kind and ranges.
struct GradedSet {
  Universe universe;
  GradeKind kind = GradeKind::Fuzzy;
  std::vector<GradeRange> ranges;
  std::map<Element, std::vector<double>> grades;

  GradeTuple grade_of(const Element& e) const;
};

// Multiple truth / indeterminacy / falsity evaluations per element.
// Standard components live in [0,1]; the offset variant carries an
// explicit range and uses the SVMNO sum condition.
struct MultiGrade {
  std::vector<double> truths;
  std::vector<double> indeterminacies;
  std::vector<double> falsities;
  GradeRange range = GradeRange::standard();

  std::size_t p() const { return truths.size(); }
  std::size_t r() const { return indeterminacies.size(); }
  std::size_t s() const { return falsities.size(); }
  std::size_t n() const { return p() + r() + s(); }
  double component_sum() const;

  friend bool operator==(const MultiGrade&, const MultiGrade&) = default;
};

struct MultiCrispGrade {
  std::vector<bool> evaluations;  // length k >= 2

  std::size_t k() const { return evaluations.size(); }
};

// Set-level carriers for the multi-valued grades.
struct MultiGradedSet {
  Universe universe;
  std::map<Element, MultiGrade> grades;
};

struct MultiCrispSet {
  Universe universe;
  std::map<Element, MultiCrispGrade> grades;
};

enum class Regime { Standard, Over, Under, Off };
std::string regime_name(Regime r);

// --- Operations ---------------------------------------------------------

// Reports every violated invariant of the tuple; empty report = valid.
// Throws ArityMismatchError when the component count does not match the kind.
ValidationReport validate_grade(const GradeTuple& g);

// The discrete hyperbinary form: a multiplicity in {0, 1, 2}.
bool is_discrete_hyperbinary(const GradeTuple& g);

ValidationReport validate_graded_set(const GradedSet& s);
ValidationReport validate_multi_grade(const MultiGrade& m);
ValidationReport validate_multigraded_set(const MultiGradedSet& s);
ValidationReport validate_multicrisp_set(const MultiCrispSet& s);

// Witness-based classification: Over iff some component exceeds 1 and none
// falls below 0, Under symmetrically, Off iff both witness kinds occur.
Regime classify_regime(const GradedSet& s);

struct OffsetSplit {
  GradedSet over_part;
  GradedSet under_part;
};

// Restricts an off/over/under set to its boundary-violating elements.
// An element with both a >1 and a <0 component appears in both halves.
// Throws NoWitnessError when no element violates a standard bound.
OffsetSplit split_offset(const GradedSet& s);

// Registered generalization steps between tuple kinds; multi-step targets are
// reached by composing single steps along the registered chain.
GradeTuple embed_grade(const GradeTuple& g, GradeKind target);

// Registered reductions (Quad->Neutro, Penta->Quad, Hepta->Penta, halving of
// [0,2]-ranged tuples). Widens component ranges where the formula can exceed
// the source bound.
GradeTuple reduce_grade(const GradeTuple& g, GradeKind target);

bool has_embedding_path(GradeKind from, GradeKind to);
bool has_reduction_path(GradeKind from, GradeKind to);

GradedSet embed_graded_set(const GradedSet& s, GradeKind target);

enum class CollapseMode { SingletonOnly, Partner };

struct CollapseResult {
  std::optional<GradeTuple> tuple;  // SingletonOnly
  std::optional<double> partner;    // Partner membership value
};

// SingletonOnly unwraps p=r=s=1 into a neutrosophic tuple; Partner computes
// the mean of all components (the partner-set membership value).
CollapseResult collapse_multi(const MultiGrade& m, CollapseMode mode);

// Lifts k >= 2 crisp evaluations into a degenerate multi-grade with
// p = k truth entries and no indeterminacy/falsity entries.
MultiGrade multicrisp_to_multineutro(const MultiCrispGrade& m);

}  // namespace uncertain

#endif
