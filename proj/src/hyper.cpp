#include "uncertain/hyper.hpp"

#include <algorithm>
#include <sstream>

#include "uncertain/numeric.hpp"

namespace uncertain {

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

void sort_points(GradePointSet& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// Shared per-point checks for the four point-set kinds.
void check_points(ValidationReport& report, const std::string& where,
                  const GradePointSet& points, std::size_t arity,
                  const GradeRange& range, bool crisp, bool vague_sum,
                  bool neutro_sum) {
  if (points.empty()) {
    report.add("EmptySubset", where, "assigned grade subset must be non-empty");
    return;
  }
  for (const auto& point : points) {
    if (point.size() != arity) {
      report.add("PointArity", where,
                 "expected " + std::to_string(arity) + " components");
      continue;
    }
    for (double c : point) {
      if (!in_interval(c, range.lo, range.hi))
        report.add("OutOfRange", where,
                   fmt(c) + " outside [" + fmt(range.lo) + ", " + fmt(range.hi) + "]");
      if (crisp && !approx_eq(c, 0.0) && !approx_eq(c, 1.0))
        report.add("NotBinary", where, fmt(c) + " must be 0 or 1");
    }
    if (vague_sum && point.size() == 2) {
      double sum = point[0] + point[1];
      double lo = std::min(range.lo, 0.0), hi = std::max(range.hi, 1.0);
      if (!in_interval(sum, lo, hi))
        report.add("SumConstraint", where,
                   "t + f = " + fmt(sum) + " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
    }
    if (neutro_sum && point.size() == 3) {
      double sum = point[0] + point[1] + point[2];
      double lo = 3.0 * std::min(range.lo, 0.0), hi = 3.0 * std::max(range.hi, 1.0);
      if (!in_interval(sum, lo, hi))
        report.add("SumConstraint", where,
                   "T + I + F = " + fmt(sum) + " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
    }
  }
}

void check_point_set(ValidationReport& report, const std::string& where,
                     const GradePointSet& points, HyperKind kind,
                     const GradeRange& range) {
  switch (kind) {
    case HyperKind::HyperCrisp:
      check_points(report, where, points, 1, range, true, false, false);
      break;
    case HyperKind::HyperFuzzy:
      check_points(report, where, points, 1, range, false, false, false);
      break;
    case HyperKind::HyperVague:
      check_points(report, where, points, 2, range, false, true, false);
      break;
    case HyperKind::HyperNeutrosophic:
      check_points(report, where, points, 3, range, false, false, true);
      break;
    case HyperKind::SubsetValuedNeutrosophic: {
      if (points.size() != 3) {
        report.add("ComponentCount", where,
                   "subset-valued grades need exactly the T, I and F subsets");
        return;
      }
      double inf_sum = 0.0, sup_sum = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& row = points[i];
        if (row.empty()) {
          report.add("EmptySubset", where, "component subset must be non-empty");
          return;
        }
        for (double c : row)
          if (!in_interval(c, 0.0, 1.0))
            report.add("OutOfRange", where, fmt(c) + " outside [0, 1]");
        inf_sum += *std::min_element(row.begin(), row.end());
        sup_sum += *std::max_element(row.begin(), row.end());
      }
      if (!approx_ge(inf_sum, 0.0) || !approx_le(inf_sum, sup_sum) ||
          !approx_le(sup_sum, 3.0))
        report.add("SumConstraint", where,
                   "0 <= inf T + inf I + inf F <= sup T + sup I + sup F <= 3 violated");
      break;
    }
  }
}

void check_point_set(ValidationReport& report, const std::string& where,
                     const GradePointSet& points, SuperHyperKind kind,
                     const GradeRange& range) {
  switch (kind) {
    case SuperHyperKind::SuperHyperCrisp:
      check_points(report, where, points, 1, range, true, false, false);
      break;
    case SuperHyperKind::SuperHyperFuzzy:
      check_points(report, where, points, 1, range, false, false, false);
      break;
    case SuperHyperKind::SuperHyperVague:
      check_points(report, where, points, 2, range, false, true, false);
      break;
    case SuperHyperKind::SuperHyperNeutrosophic:
      check_points(report, where, points, 3, range, false, false, true);
      break;
  }
}

}  // namespace

std::size_t hyper_arity(HyperKind kind) {
  switch (kind) {
    case HyperKind::HyperCrisp:
    case HyperKind::HyperFuzzy: return 1;
    case HyperKind::HyperVague: return 2;
    case HyperKind::HyperNeutrosophic:
    case HyperKind::SubsetValuedNeutrosophic: return 3;
  }
  return 1;
}

std::size_t hyper_arity(SuperHyperKind kind) {
  switch (kind) {
    case SuperHyperKind::SuperHyperCrisp:
    case SuperHyperKind::SuperHyperFuzzy: return 1;
    case SuperHyperKind::SuperHyperVague: return 2;
    case SuperHyperKind::SuperHyperNeutrosophic: return 3;
  }
  return 1;
}

std::string hyper_kind_name(HyperKind kind) {
  switch (kind) {
    case HyperKind::HyperCrisp: return "hypercrisp";
    case HyperKind::HyperFuzzy: return "hyperfuzzy";
    case HyperKind::HyperVague: return "hypervague";
    case HyperKind::HyperNeutrosophic: return "hyperneutrosophic";
    case HyperKind::SubsetValuedNeutrosophic: return "subsetvaluedneutrosophic";
  }
  return "hyperfuzzy";
}

std::string hyper_kind_name(SuperHyperKind kind) {
  switch (kind) {
    case SuperHyperKind::SuperHyperCrisp: return "superhypercrisp";
    case SuperHyperKind::SuperHyperFuzzy: return "superhyperfuzzy";
    case SuperHyperKind::SuperHyperVague: return "superhypervague";
    case SuperHyperKind::SuperHyperNeutrosophic: return "superhyperneutrosophic";
  }
  return "superhyperfuzzy";
}

HyperKind hyper_of(SuperHyperKind kind) {
  switch (kind) {
    case SuperHyperKind::SuperHyperCrisp: return HyperKind::HyperCrisp;
    case SuperHyperKind::SuperHyperFuzzy: return HyperKind::HyperFuzzy;
    case SuperHyperKind::SuperHyperVague: return HyperKind::HyperVague;
    case SuperHyperKind::SuperHyperNeutrosophic:
      return HyperKind::HyperNeutrosophic;
  }
  return HyperKind::HyperFuzzy;
}

SuperHyperKind super_of(HyperKind kind) {
  switch (kind) {
    case HyperKind::HyperCrisp: return SuperHyperKind::SuperHyperCrisp;
    case HyperKind::HyperFuzzy: return SuperHyperKind::SuperHyperFuzzy;
    case HyperKind::HyperVague: return SuperHyperKind::SuperHyperVague;
    case HyperKind::HyperNeutrosophic:
    case HyperKind::SubsetValuedNeutrosophic:
      return SuperHyperKind::SuperHyperNeutrosophic;
  }
  return SuperHyperKind::SuperHyperFuzzy;
}

ValidationReport validate_hyper(const HyperGradedSet& h) {
  ValidationReport report;
  for (const auto& e : h.universe) {
    auto it = h.values.find(e);
    if (it == h.values.end()) {
      report.add("MissingValue", e, "element has no grade subset");
      continue;
    }
    check_point_set(report, e, it->second, h.kind, h.range);
  }
  for (const auto& [e, _] : h.values)
    if (!h.universe.contains(e))
      report.add("UnknownElement", e, "value for element outside universe");
  return report;
}

ValidationReport validate_hyper(const SuperHyperGradedSet& s, bool total,
                                std::uint64_t cap) {
  ValidationReport report;
  if (s.level < 1) report.add("BadLevel", "", "level must be at least 1");
  for (const auto& [key, points] : s.values) {
    auto parsed = parse_nested(key);
    if (!parsed || parsed->to_string() != key) {
      report.add("BadKey", key, "not a canonical nested-set encoding");
      continue;
    }
    if (parsed->is_atom || parsed->empty_set()) {
      report.add("BadKey", key, "keys must be non-empty tower sets");
      continue;
    }
    if (!valid_at_level(*parsed, s.universe, s.level)) {
      report.add("BadKey", key,
                 "not a level-" + std::to_string(s.level) + " tower element");
      continue;
    }
    check_point_set(report, key, points, s.kind, s.range);
  }
  if (total) {
    PowerTower tower = iterated_powerset(s.universe, s.level, cap);
    for (const auto& elem : tower.elements) {
      if (elem.empty_set()) continue;
      if (!s.values.count(elem.to_string()))
        report.add("MissingKey", elem.to_string(),
                   "totality requested but key undefined");
    }
  }
  return report;
}

ValidationReport validate_hyperplithogenic(const HyperPlithogenicSet& hp) {
  ValidationReport report;
  if (hp.spec.values.empty())
    report.add("EmptyValueSet", hp.spec.name, "attribute needs at least one value");
  std::vector<AttributeValue> values = hp.spec.values;
  for (const auto& x : hp.carrier) {
    for (const auto& a : values) {
      auto it = hp.hdaf.find({x, a});
      if (it == hp.hdaf.end()) {
        report.add("MissingDAF", x + "," + a, "no hyper appurtenance subset");
        continue;
      }
      if (it->second.empty()) {
        report.add("EmptySubset", x + "," + a, "HDAF subset must be non-empty");
        continue;
      }
      for (const auto& vec : it->second) {
        if (vec.size() != hp.dims) {
          report.add("DAFArity", x + "," + a,
                     "expected " + std::to_string(hp.dims) + " components");
          continue;
        }
        for (double c : vec)
          if (!in_interval(c, hp.range.lo, hp.range.hi))
            report.add("DAFRange", x + "," + a,
                       fmt(c) + " outside [" + fmt(hp.range.lo) + ", " +
                           fmt(hp.range.hi) + "]");
      }
    }
  }
  // DCF axioms as in the single-valued case.
  DCFMatrix dcf = hp.dcf;
  PlithogenicSet probe;
  probe.spec = hp.spec;
  probe.dcf = dcf;
  probe.daf = DAFTable::standard(1);
  ValidationReport dcf_report = validate_plithogenic(probe);
  for (const auto& v : dcf_report.violations())
    if (v.code.rfind("DCF", 0) == 0 || v.code == "MissingDCF")
      report.add(v.code, v.where, v.message);
  return report;
}

HyperGradedSet hyperneutro_to_hyperfuzzy(const HyperGradedSet& h) {
  if (h.kind != HyperKind::HyperNeutrosophic)
    throw DomainError("WrongKind", "conversion expects a hyperneutrosophic set");
  HyperGradedSet out;
  out.universe = h.universe;
  out.kind = HyperKind::HyperFuzzy;
  out.range = GradeRange::standard();
  for (const auto& [e, points] : h.values) {
    GradePointSet converted;
    for (const auto& point : points)
      if (point.size() == 3)
        converted.push_back({(point[0] + (1.0 - point[2])) / 2.0});
    sort_points(converted);
    out.values[e] = std::move(converted);
  }
  return out;
}

HyperGradedSet reduce_hyperplithogenic(const HyperPlithogenicSet& hp) {
  if (hp.dims < 1 || hp.dims > 3)
    throw UnsupportedDimsError("reduction requires s in {1, 2, 3}");
  if (hp.dcf.dims != 1)
    throw UnsupportedDimsError("reduction requires t = 1");
  HyperGradedSet out;
  out.universe = hp.carrier;
  out.kind = hp.dims == 1   ? HyperKind::HyperFuzzy
             : hp.dims == 2 ? HyperKind::HyperVague
                            : HyperKind::HyperNeutrosophic;
  out.range = hp.range;
  for (const auto& x : hp.carrier) {
    GradePointSet merged;
    for (const auto& a : hp.spec.values) {
      auto it = hp.hdaf.find({x, a});
      if (it == hp.hdaf.end())
        throw DomainError("IncompleteDAF", "missing HDAF entry for " + x);
      merged.insert(merged.end(), it->second.begin(), it->second.end());
    }
    sort_points(merged);
    out.values[x] = std::move(merged);
  }
  return out;
}

SuperHyperGradedSet lift_pointwise(const HyperGradedSet& h, std::uint64_t cap) {
  if (h.kind == HyperKind::SubsetValuedNeutrosophic)
    throw DomainError("WrongKind", "subset-valued sets have no pointwise lift");
  SuperHyperGradedSet out;
  out.universe = h.universe;
  out.level = 1;
  out.kind = super_of(h.kind);
  out.range = h.range;
  for (const auto& subset : nonempty_subsets(h.universe, cap)) {
    GradePointSet merged;
    for (const auto& member : subset.members) {
      auto it = h.values.find(member.atom);
      if (it == h.values.end()) continue;
      merged.insert(merged.end(), it->second.begin(), it->second.end());
    }
    sort_points(merged);
    out.values[subset.to_string()] = std::move(merged);
  }
  return out;
}

HyperGradedSet restrict_to_singletons(const SuperHyperGradedSet& s) {
  if (s.level != 1)
    throw DomainError("BadLevel", "singleton restriction needs level 1");
  HyperGradedSet out;
  out.universe = s.universe;
  out.kind = hyper_of(s.kind);
  out.range = s.range;
  for (const auto& e : s.universe) {
    auto it = s.values.find("{" + e + "}");
    if (it != s.values.end()) out.values[e] = it->second;
  }
  return out;
}

SuperHyperGradedSet superneutro_to_supervague(const SuperHyperGradedSet& s) {
  if (s.kind != SuperHyperKind::SuperHyperNeutrosophic)
    throw DomainError("WrongKind", "conversion expects a superhyperneutrosophic set");
  SuperHyperGradedSet out;
  out.universe = s.universe;
  out.level = s.level;
  out.kind = SuperHyperKind::SuperHyperVague;
  out.range = GradeRange::standard();
  for (const auto& [key, points] : s.values) {
    GradePointSet pairs;
    for (const auto& point : points) {
      if (point.size() != 3) continue;
      double tf = point[0] + point[2];
      if (strictly_above(tf, 0.0))
        pairs.push_back({point[0] / tf, point[2] / tf});
    }
    if (pairs.empty())
      throw EmptyAfterNormalizationError("key " + key +
                                         " holds only triples with T + F = 0");
    sort_points(pairs);
    out.values[key] = std::move(pairs);
  }
  return out;
}

SuperHyperGradedSet supervague_to_superfuzzy(const SuperHyperGradedSet& s) {
  if (s.kind != SuperHyperKind::SuperHyperVague)
    throw DomainError("WrongKind", "conversion expects a superhypervague set");
  SuperHyperGradedSet out;
  out.universe = s.universe;
  out.level = s.level;
  out.kind = SuperHyperKind::SuperHyperFuzzy;
  out.range = s.range;
  for (const auto& [key, points] : s.values) {
    GradePointSet firsts;
    for (const auto& point : points)
      if (!point.empty()) firsts.push_back({point[0]});
    sort_points(firsts);
    out.values[key] = std::move(firsts);
  }
  return out;
}

GradedSet hyper_to_graded(const HyperGradedSet& h) {
  GradeKind kind;
  switch (h.kind) {
    case HyperKind::HyperCrisp: kind = GradeKind::Crisp; break;
    case HyperKind::HyperFuzzy: kind = GradeKind::Fuzzy; break;
    case HyperKind::HyperVague: kind = GradeKind::Vague; break;
    case HyperKind::HyperNeutrosophic: kind = GradeKind::Neutrosophic; break;
    default:
      throw DomainError("WrongKind", "no single-valued counterpart");
  }
  GradedSet out;
  out.universe = h.universe;
  out.kind = kind;
  out.ranges.assign(arity(kind), h.range);
  for (const auto& [e, points] : h.values) {
    if (points.size() != 1)
      throw NonSingletonError("element " + e + " carries " +
                              std::to_string(points.size()) + " grade points");
    out.grades[e] = points.front();
  }
  return out;
}

HyperGradedSet graded_to_hyper(const GradedSet& s) {
  HyperKind kind;
  switch (s.kind) {
    case GradeKind::Crisp: kind = HyperKind::HyperCrisp; break;
    case GradeKind::Fuzzy: kind = HyperKind::HyperFuzzy; break;
    case GradeKind::Vague: kind = HyperKind::HyperVague; break;
    case GradeKind::Neutrosophic: kind = HyperKind::HyperNeutrosophic; break;
    default:
      throw DomainError("WrongKind", "no hyper counterpart for this kind");
  }
  HyperGradedSet out;
  out.universe = s.universe;
  out.kind = kind;
  out.range = s.ranges.empty() ? GradeRange::standard() : s.ranges.front();
  for (const auto& [e, comps] : s.grades) out.values[e] = {comps};
  return out;
}

}  // namespace uncertain
