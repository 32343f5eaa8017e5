#include "uncertain/powerset.hpp"

#include <algorithm>

namespace uncertain {

NestedElem NestedElem::make_atom(std::string name) {
  NestedElem e;
  e.is_atom = true;
  e.atom = std::move(name);
  return e;
}

NestedElem NestedElem::make_set(std::vector<NestedElem> members) {
  NestedElem e;
  e.is_atom = false;
  std::sort(members.begin(), members.end(), nested_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  e.members = std::move(members);
  return e;
}

std::string NestedElem::to_string() const {
  if (is_atom) return atom;
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i].to_string();
  }
  out += "}";
  return out;
}

bool nested_less(const NestedElem& a, const NestedElem& b) {
  if (a.is_atom != b.is_atom) return a.is_atom;  // atoms sort before sets
  if (a.is_atom) return a.atom < b.atom;
  if (a.members.size() != b.members.size())
    return a.members.size() < b.members.size();
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (a.members[i] == b.members[i]) continue;
    return nested_less(a.members[i], b.members[i]);
  }
  return false;
}

namespace {

// Recursive descent over the canonical text form.
bool parse_elem(const std::string& text, std::size_t& pos, NestedElem& out) {
  if (pos >= text.size()) return false;
  if (text[pos] == '{') {
    ++pos;
    std::vector<NestedElem> members;
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      out = NestedElem::make_set({});
      return true;
    }
    while (true) {
      NestedElem member;
      if (!parse_elem(text, pos, member)) return false;
      members.push_back(std::move(member));
      if (pos >= text.size()) return false;
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == '}') {
        ++pos;
        out = NestedElem::make_set(std::move(members));
        return true;
      }
      return false;
    }
  }
  std::size_t start = pos;
  while (pos < text.size() && text[pos] != ',' && text[pos] != '}' &&
         text[pos] != '{')
    ++pos;
  if (pos == start) return false;
  out = NestedElem::make_atom(text.substr(start, pos - start));
  return true;
}

}  // namespace

std::optional<NestedElem> parse_nested(const std::string& text) {
  std::size_t pos = 0;
  NestedElem out;
  if (!parse_elem(text, pos, out) || pos != text.size()) return std::nullopt;
  return out;
}

bool valid_at_level(const NestedElem& e, const Universe& base, std::size_t level) {
  if (level == 0) return e.is_atom && base.contains(e.atom);
  if (e.is_atom) return false;
  for (const auto& m : e.members)
    if (!valid_at_level(m, base, level - 1)) return false;
  return true;
}

std::optional<std::uint64_t> predict_tower_size(std::size_t base_size,
                                                std::size_t level,
                                                std::string* display) {
  std::uint64_t size = base_size;
  for (std::size_t k = 1; k <= level; ++k) {
    if (size >= 64) {
      if (display) *display = "2^" + std::to_string(size);
      return std::nullopt;
    }
    size = std::uint64_t{1} << size;
  }
  if (display) *display = std::to_string(size);
  return size;
}

PowerTower iterated_powerset(const Universe& base, std::size_t level,
                             std::uint64_t cap) {
  std::string display;
  auto predicted = predict_tower_size(base.size(), level, &display);
  if (!predicted || *predicted > cap)
    throw CapExceededError("powerset at level " + std::to_string(level) +
                               " would hold " + display +
                               " elements, above the cap of " + std::to_string(cap),
                           display);

  PowerTower tower;
  tower.base = base;
  tower.level = level;
  for (const auto& a : base) tower.elements.push_back(NestedElem::make_atom(a));
  std::sort(tower.elements.begin(), tower.elements.end(), nested_less);

  for (std::size_t k = 1; k <= level; ++k) {
    const std::vector<NestedElem> prev = std::move(tower.elements);
    std::vector<NestedElem> next;
    next.reserve(std::size_t{1} << prev.size());
    const std::uint64_t count = std::uint64_t{1} << prev.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<NestedElem> members;
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) members.push_back(prev[i]);
      next.push_back(NestedElem::make_set(std::move(members)));
    }
    std::sort(next.begin(), next.end(), nested_less);
    tower.elements = std::move(next);
  }
  return tower;
}

std::vector<NestedElem> nonempty_subsets(const Universe& base, std::uint64_t cap) {
  PowerTower tower = iterated_powerset(base, 1, cap);
  std::vector<NestedElem> out;
  for (auto& e : tower.elements)
    if (!e.empty_set()) out.push_back(std::move(e));
  return out;
}

}  // namespace uncertain
