#ifndef UNCERTAIN_HYPER_HPP
#define UNCERTAIN_HYPER_HPP

#include <map>
#include <string>
#include <vector>

#include "uncertain/grades.hpp"
#include "uncertain/plithogenic.hpp"
#include "uncertain/powerset.hpp"
#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

enum class HyperKind {
  HyperCrisp,
  HyperFuzzy,
  HyperVague,
  HyperNeutrosophic,
  SubsetValuedNeutrosophic,
};

enum class SuperHyperKind {
  SuperHyperCrisp,
  SuperHyperFuzzy,
  SuperHyperVague,
  SuperHyperNeutrosophic,
};

std::size_t hyper_arity(HyperKind kind);
std::size_t hyper_arity(SuperHyperKind kind);
std::string hyper_kind_name(HyperKind kind);
std::string hyper_kind_name(SuperHyperKind kind);
HyperKind hyper_of(SuperHyperKind kind);
SuperHyperKind super_of(HyperKind kind);

// Finite enumerated grade points. For the point-set kinds each entry is one
// grade tuple (arity 1, 2 or 3). For SubsetValuedNeutrosophic the entries are
// exactly three rows: the T, I and F component subsets.
using GradePointSet = std::vector<std::vector<double>>;

struct HyperGradedSet {
  Universe universe;
  HyperKind kind = HyperKind::HyperFuzzy;
  GradeRange range = GradeRange::standard();
  std::map<Element, GradePointSet> values;
};

// Sparse: unlisted tower keys are undefined. Keys are canonical nested-set
// encodings of non-empty level-n elements over the universe.
struct SuperHyperGradedSet {
  Universe universe;
  std::size_t level = 1;
  SuperHyperKind kind = SuperHyperKind::SuperHyperFuzzy;
  GradeRange range = GradeRange::standard();
  std::map<std::string, GradePointSet> values;
};

// Plithogenic set whose DAF yields non-empty subsets of [0,1]^s.
struct HyperPlithogenicSet {
  Universe carrier;
  AttributeSpec spec;
  std::size_t dims = 1;  // s
  GradeRange range = GradeRange::standard();
  std::map<std::pair<Element, AttributeValue>, GradePointSet> hdaf;
  DCFMatrix dcf;
};

// --- Operations ----------------------------------------------------------

ValidationReport validate_hyper(const HyperGradedSet& h);
// When `total` is set, additionally requires a value for every non-empty
// level-n tower element (only meaningful when the tower fits the cap).
ValidationReport validate_hyper(const SuperHyperGradedSet& s, bool total = false,
                                std::uint64_t cap = kDefaultPowersetCap);
ValidationReport validate_hyperplithogenic(const HyperPlithogenicSet& hp);

// mu'(x) = { (T + (1 - F)) / 2 : (T,I,F) in h(x) }.
HyperGradedSet hyperneutro_to_hyperfuzzy(const HyperGradedSet& h);

// Unions the HDAF subsets over all attribute values per element
// (s = 1 -> HyperFuzzy, 2 -> HyperVague, 3 -> HyperNeutrosophic).
HyperGradedSet reduce_hyperplithogenic(const HyperPlithogenicSet& hp);

// mu'(A) = union of h(x) over x in A, materialized for every non-empty
// subset of the universe (level-1 lift).
SuperHyperGradedSet lift_pointwise(const HyperGradedSet& h,
                                   std::uint64_t cap = kDefaultPowersetCap);

// Restriction of a level-1 super set to singleton keys.
HyperGradedSet restrict_to_singletons(const SuperHyperGradedSet& s);

// Per key: {(T/(T+F), F/(T+F)) : T+F > 0}; throws EmptyAfterNormalizationError
// when a key would lose every triple.
SuperHyperGradedSet superneutro_to_supervague(const SuperHyperGradedSet& s);

// Per key: the set of first components.
SuperHyperGradedSet supervague_to_superfuzzy(const SuperHyperGradedSet& s);

// Singleton-subset unwrap to the matching single-valued graded set.
// Requires every point set to be a singleton.
GradedSet hyper_to_graded(const HyperGradedSet& h);
HyperGradedSet graded_to_hyper(const GradedSet& s);

}  // namespace uncertain

#endif
