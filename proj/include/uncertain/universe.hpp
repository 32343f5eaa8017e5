#ifndef UNCERTAIN_UNIVERSE_HPP
#define UNCERTAIN_UNIVERSE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace uncertain {

using Element = std::string;
using ElementSet = std::set<Element>;

// Finite ordered collection of element identifiers. Order is the declaration
// order; identifiers are unique.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Element> elements) {
    for (auto& e : elements) add(std::move(e));
  }

  bool add(Element e) {
    if (contains(e)) return false;
    elements_.push_back(std::move(e));
    return true;
  }

  bool contains(const Element& e) const {
    return std::find(elements_.begin(), elements_.end(), e) != elements_.end();
  }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Element>& elements() const { return elements_; }

  ElementSet as_set() const {
    return ElementSet(elements_.begin(), elements_.end());
  }

  bool covers(const ElementSet& s) const {
    for (const auto& e : s)
      if (!contains(e)) return false;
    return true;
  }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
};

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (const auto& e : a)
    if (b.count(e)) out.insert(e);
  return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (const auto& e : a)
    if (!b.count(e)) out.insert(e);
  return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  for (const auto& e : a)
    if (!b.count(e)) return false;
  return true;
}

inline std::string join(const ElementSet& s, const std::string& sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& e : s) {
    if (!first) out += sep;
    out += e;
    first = false;
  }
  return out;
}

}  // namespace uncertain

#endif
