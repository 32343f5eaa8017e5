#ifndef UNCERTAIN_POWERSET_HPP
#define UNCERTAIN_POWERSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uncertain/universe.hpp"
#include "uncertain/validation.hpp"

namespace uncertain {

// One element of the n-th powerset tower in canonical form: atoms at level 0,
// finite sets of level-(k-1) elements at level k. Members are kept sorted and
// deduplicated, so structural equality is syntactic equality.
struct NestedElem {
  bool is_atom = true;
  std::string atom;
  std::vector<NestedElem> members;  // canonical order, no duplicates

  static NestedElem make_atom(std::string name);
  static NestedElem make_set(std::vector<NestedElem> members);

  bool empty_set() const { return !is_atom && members.empty(); }

  // Canonical text form: atoms verbatim, sets "{m1,m2,...}" with members in
  // canonical order.
  std::string to_string() const;

  friend bool operator==(const NestedElem&, const NestedElem&) = default;
};

// Canonical order: by size first, then memberwise; atoms by name.
bool nested_less(const NestedElem& a, const NestedElem& b);

// Parses the canonical encoding. Returns nullopt on malformed input.
std::optional<NestedElem> parse_nested(const std::string& text);

// True iff `e` is a structurally valid level-`level` element over `base`
// (atoms of the base at level 0, sets of valid level-(k-1) elements above).
bool valid_at_level(const NestedElem& e, const Universe& base, std::size_t level);

inline constexpr std::uint64_t kDefaultPowersetCap = 65536;

struct PowerTower {
  Universe base;
  std::size_t level = 0;
  std::vector<NestedElem> elements;  // canonical order
};

// Predicted |P*_n(base)|; nullopt when it exceeds 2^64 - 1. `display` always
// receives a printable form such as "16" or "2^256".
std::optional<std::uint64_t> predict_tower_size(std::size_t base_size,
                                                std::size_t level,
                                                std::string* display = nullptr);

// Materializes every level-n element in canonical order.
// Throws CapExceededError (carrying the predicted cardinality) when the
// predicted size exceeds `cap`.
PowerTower iterated_powerset(const Universe& base, std::size_t level,
                             std::uint64_t cap = kDefaultPowersetCap);

// All non-empty subsets of `base` as level-1 elements in canonical order.
// Subject to the same cap.
std::vector<NestedElem> nonempty_subsets(const Universe& base,
                                         std::uint64_t cap = kDefaultPowersetCap);

}  // namespace uncertain

#endif
