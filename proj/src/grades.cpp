#include "uncertain/grades.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

#include "uncertain/numeric.hpp"

namespace uncertain {

bool GradeRange::is_standard() const {
  return approx_eq(lo, 0.0) && approx_eq(hi, 1.0);
}

bool GradeRange::well_formed() const {
  return approx_le(lo, 0.0) && approx_ge(hi, 1.0);
}

namespace {

const std::map<GradeKind, std::vector<std::string>>& component_table() {
  static const std::map<GradeKind, std::vector<std::string>> table = {
      {GradeKind::Crisp, {"chi"}},
      {GradeKind::Fuzzy, {"mu"}},
      {GradeKind::Vague, {"t", "f"}},
      {GradeKind::IntuitionisticFuzzy, {"mu", "nu"}},
      {GradeKind::Neutrosophic, {"T", "I", "F"}},
      {GradeKind::Quadripartitioned, {"T", "C", "U", "F"}},
      {GradeKind::Pentapartitioned, {"T", "C", "R", "U", "F"}},
      {GradeKind::Heptapartitioned, {"T", "M", "C", "U", "I", "K", "F"}},
      {GradeKind::DoubleValued, {"T", "IT", "IF", "F"}},
      {GradeKind::HyperBinary, {"mu"}},
  };
  return table;
}

const std::map<GradeKind, std::string>& name_table() {
  static const std::map<GradeKind, std::string> table = {
      {GradeKind::Crisp, "crisp"},
      {GradeKind::Fuzzy, "fuzzy"},
      {GradeKind::Vague, "vague"},
      {GradeKind::IntuitionisticFuzzy, "intuitionistic"},
      {GradeKind::Neutrosophic, "neutrosophic"},
      {GradeKind::Quadripartitioned, "quadripartitioned"},
      {GradeKind::Pentapartitioned, "pentapartitioned"},
      {GradeKind::Heptapartitioned, "heptapartitioned"},
      {GradeKind::DoubleValued, "doublevalued"},
      {GradeKind::HyperBinary, "hyperbinary"},
  };
  return table;
}

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

std::size_t arity(GradeKind kind) { return component_table().at(kind).size(); }

const std::vector<std::string>& component_names(GradeKind kind) {
  return component_table().at(kind);
}

std::string kind_name(GradeKind kind) { return name_table().at(kind); }

std::optional<GradeKind> kind_from_name(const std::string& name) {
  for (const auto& [kind, n] : name_table())
    if (n == name) return kind;
  return std::nullopt;
}

std::vector<GradeRange> standard_ranges(GradeKind kind) {
  GradeRange r = kind == GradeKind::HyperBinary ? GradeRange{0.0, 2.0}
                                                : GradeRange::standard();
  return std::vector<GradeRange>(arity(kind), r);
}

GradeTuple GradeTuple::make(GradeKind kind, std::vector<double> components) {
  return make(kind, std::move(components), standard_ranges(kind));
}

GradeTuple GradeTuple::make(GradeKind kind, std::vector<double> components,
                            std::vector<GradeRange> ranges) {
  GradeTuple g;
  g.kind = kind;
  g.components = std::move(components);
  g.ranges = std::move(ranges);
  return g;
}

GradeTuple GradedSet::grade_of(const Element& e) const {
  return GradeTuple::make(kind, grades.at(e), ranges);
}

double MultiGrade::component_sum() const {
  double sum = 0.0;
  for (double t : truths) sum += t;
  for (double i : indeterminacies) sum += i;
  for (double f : falsities) sum += f;
  return sum;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Standard: return "standard";
    case Regime::Over: return "over";
    case Regime::Under: return "under";
    case Regime::Off: return "off";
  }
  return "standard";
}

// --- validate_grade ------------------------------------------------------

ValidationReport validate_grade(const GradeTuple& g) {
  const std::size_t n = arity(g.kind);
  if (g.components.size() != n) {
    throw ArityMismatchError("expected " + std::to_string(n) +
                             " components for kind " + kind_name(g.kind) +
                             ", got " + std::to_string(g.components.size()));
  }
  ValidationReport report;
  if (g.ranges.size() != n) {
    report.add("RangeArity", "", "expected " + std::to_string(n) + " ranges");
    return report;
  }

  const auto& names = component_names(g.kind);
  double lo_sum = 0.0, hi_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const GradeRange& r = g.ranges[i];
    if (!r.well_formed())
      report.add("BadRange", names[i],
                 "range [" + fmt(r.lo) + ", " + fmt(r.hi) + "] must satisfy lo <= 0 <= 1 <= hi");
    if (!in_interval(g.components[i], r.lo, r.hi))
      report.add("OutOfRange", names[i],
                 fmt(g.components[i]) + " outside [" + fmt(r.lo) + ", " + fmt(r.hi) + "]");
    lo_sum += std::min(r.lo, 0.0);
    hi_sum += std::max(r.hi, 1.0);
  }

  double sum = 0.0;
  for (double c : g.components) sum += c;

  auto check_sum = [&](double lo, double hi) {
    if (!in_interval(sum, lo, hi))
      report.add("SumConstraint", "",
                 "component sum " + fmt(sum) + " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
  };

  switch (g.kind) {
    case GradeKind::Crisp: {
      double chi = g.components[0];
      if (!approx_eq(chi, g.ranges[0].lo) && !approx_eq(chi, g.ranges[0].hi))
        report.add("NotCharacteristic", names[0],
                   fmt(chi) + " must be exactly " + fmt(g.ranges[0].lo) + " or " + fmt(g.ranges[0].hi));
      break;
    }
    case GradeKind::Fuzzy:
    case GradeKind::HyperBinary:
      break;  // range check above suffices
    case GradeKind::Vague: {
      // Standard: 0 <= t+f <= 1; extended ranges scale the bound.
      double lo = std::min(g.ranges[0].lo, g.ranges[1].lo);
      double hi = std::max(g.ranges[0].hi, g.ranges[1].hi);
      check_sum(std::min(lo, 0.0), std::max(hi, 1.0));
      break;
    }
    case GradeKind::IntuitionisticFuzzy: {
      bool standard = g.ranges[0].is_standard() && g.ranges[1].is_standard();
      if (standard) check_sum(0.0, 1.0);
      break;
    }
    case GradeKind::Neutrosophic:
    case GradeKind::Quadripartitioned:
    case GradeKind::Pentapartitioned:
    case GradeKind::Heptapartitioned:
    case GradeKind::DoubleValued:
      check_sum(lo_sum, hi_sum);
      break;
  }
  return report;
}

bool is_discrete_hyperbinary(const GradeTuple& g) {
  if (g.kind != GradeKind::HyperBinary || g.components.size() != 1) return false;
  double mu = g.components[0];
  return approx_eq(mu, 0.0) || approx_eq(mu, 1.0) || approx_eq(mu, 2.0);
}

ValidationReport validate_graded_set(const GradedSet& s) {
  ValidationReport report;
  if (s.ranges.size() != arity(s.kind)) {
    report.add("RangeArity", "", "range count does not match kind arity");
    return report;
  }
  for (const auto& e : s.universe) {
    auto it = s.grades.find(e);
    if (it == s.grades.end()) {
      report.add("MissingGrade", e, "element has no grade");
      continue;
    }
    if (it->second.size() != arity(s.kind)) {
      report.add("ArityMismatch", e, "component count does not match kind");
      continue;
    }
    ValidationReport elem = validate_grade(s.grade_of(e));
    for (const auto& v : elem.violations())
      report.add(v.code, e + "." + v.where, v.message);
  }
  for (const auto& [e, _] : s.grades)
    if (!s.universe.contains(e))
      report.add("UnknownElement", e, "grade for element outside universe");
  return report;
}

ValidationReport validate_multi_grade(const MultiGrade& m) {
  ValidationReport report;
  if (m.n() < 2)
    report.add("TooFewComponents", "", "p + r + s must be at least 2");
  auto check = [&](const std::vector<double>& xs, const std::string& where) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!in_interval(xs[i], m.range.lo, m.range.hi))
        report.add("OutOfRange", where + "[" + std::to_string(i) + "]",
                   fmt(xs[i]) + " outside [" + fmt(m.range.lo) + ", " + fmt(m.range.hi) + "]");
  };
  check(m.truths, "T");
  check(m.indeterminacies, "I");
  check(m.falsities, "F");
  double sum = m.component_sum();
  if (m.range.is_standard()) {
    if (!in_interval(sum, 0.0, static_cast<double>(m.n())))
      report.add("SumConstraint", "",
                 "component sum " + fmt(sum) + " outside [0, " + std::to_string(m.n()) + "]");
  } else {
    // SVMNO condition: Psi <= sum <= Omega.
    if (!in_interval(sum, m.range.lo, m.range.hi))
      report.add("SumConstraint", "",
                 "component sum " + fmt(sum) + " outside [" + fmt(m.range.lo) + ", " +
                     fmt(m.range.hi) + "]");
  }
  return report;
}

ValidationReport validate_multigraded_set(const MultiGradedSet& s) {
  ValidationReport report;
  for (const auto& e : s.universe) {
    auto it = s.grades.find(e);
    if (it == s.grades.end()) {
      report.add("MissingGrade", e, "element has no evaluations");
      continue;
    }
    ValidationReport elem_report = validate_multi_grade(it->second);
    for (const auto& v : elem_report.violations())
      report.add(v.code, e + "." + v.where, v.message);
  }
  return report;
}

ValidationReport validate_multicrisp_set(const MultiCrispSet& s) {
  ValidationReport report;
  for (const auto& e : s.universe) {
    auto it = s.grades.find(e);
    if (it == s.grades.end()) {
      report.add("MissingGrade", e, "element has no evaluations");
      continue;
    }
    if (it->second.k() < 2)
      report.add("TooFewEvaluations", e, "multi-crisp grades need k >= 2");
  }
  return report;
}

// --- regimes -------------------------------------------------------------

Regime classify_regime(const GradedSet& s) {
  bool over = false, under = false;
  for (const auto& [e, comps] : s.grades) {
    for (double c : comps) {
      if (strictly_above(c, 1.0)) over = true;
      if (strictly_below(c, 0.0)) under = true;
    }
  }
  if (over && under) return Regime::Off;
  if (over) return Regime::Over;
  if (under) return Regime::Under;
  return Regime::Standard;
}

OffsetSplit split_offset(const GradedSet& s) {
  ElementSet over_elems, under_elems;
  for (const auto& [e, comps] : s.grades) {
    for (double c : comps) {
      if (strictly_above(c, 1.0)) over_elems.insert(e);
      if (strictly_below(c, 0.0)) under_elems.insert(e);
    }
  }
  if (over_elems.empty() && under_elems.empty())
    throw NoWitnessError("no element violates a standard bound");

  auto restrict = [&](const ElementSet& keep, bool over_side) {
    GradedSet part;
    part.kind = s.kind;
    for (const GradeRange& r : s.ranges) {
      // Re-validate under the appropriate one-sided range.
      part.ranges.push_back(over_side ? GradeRange{0.0, std::max(r.hi, 1.0)}
                                      : GradeRange{std::min(r.lo, 0.0), 1.0});
    }
    for (const auto& e : s.universe) {
      if (keep.count(e)) {
        part.universe.add(e);
        part.grades[e] = s.grades.at(e);
      }
    }
    return part;
  };
  return {restrict(over_elems, true), restrict(under_elems, false)};
}

// --- embeddings and reductions -------------------------------------------

namespace {

struct GradeStep {
  GradeKind from;
  GradeKind to;
  GradeTuple (*apply)(const GradeTuple&);
};

GradeRange merged_range(const GradeRange& a, const GradeRange& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

GradeTuple crisp_to_fuzzy(const GradeTuple& g) {
  return GradeTuple::make(GradeKind::Fuzzy, {g[0]}, {g.ranges[0]});
}

GradeTuple fuzzy_to_vague(const GradeTuple& g) {
  return GradeTuple::make(GradeKind::Vague, {g[0], 1.0 - g[0]},
                          {g.ranges[0], g.ranges[0]});
}

GradeTuple fuzzy_to_intuitionistic(const GradeTuple& g) {
  return GradeTuple::make(GradeKind::IntuitionisticFuzzy, {g[0], 0.0},
                          {g.ranges[0], g.ranges[0]});
}

GradeTuple fuzzy_to_neutro(const GradeTuple& g) {
  GradeRange r = g.ranges[0];
  return GradeTuple::make(GradeKind::Neutrosophic, {g[0], 0.0, 1.0 - g[0]},
                          {r, r, r});
}

GradeTuple vague_to_neutro(const GradeTuple& g) {
  GradeRange r = merged_range(g.ranges[0], g.ranges[1]);
  return GradeTuple::make(GradeKind::Neutrosophic,
                          {g[0], 1.0 - g[0] - g[1], g[1]}, {r, r, r});
}

GradeTuple intuitionistic_to_neutro(const GradeTuple& g) {
  GradeRange r = merged_range(g.ranges[0], g.ranges[1]);
  return GradeTuple::make(GradeKind::Neutrosophic,
                          {g[0], 1.0 - g[0] - g[1], g[1]}, {r, r, r});
}

GradeTuple neutro_to_quad(const GradeTuple& g) {
  // C = 0, U = I.
  return GradeTuple::make(
      GradeKind::Quadripartitioned, {g[0], 0.0, g[1], g[2]},
      {g.ranges[0], GradeRange::standard(), g.ranges[1], g.ranges[2]});
}

GradeTuple quad_to_penta(const GradeTuple& g) {
  // R = 0.
  return GradeTuple::make(
      GradeKind::Pentapartitioned, {g[0], g[1], 0.0, g[2], g[3]},
      {g.ranges[0], g.ranges[1], GradeRange::standard(), g.ranges[2], g.ranges[3]});
}

GradeTuple penta_to_hepta(const GradeTuple& g) {
  // (T, C, R, U, F) -> (T, M=0, C, U, I=R, K=0, F).
  GradeRange std = GradeRange::standard();
  return GradeTuple::make(
      GradeKind::Heptapartitioned,
      {g[0], 0.0, g[1], g[3], g[2], 0.0, g[4]},
      {g.ranges[0], std, g.ranges[1], g.ranges[3], g.ranges[2], std, g.ranges[4]});
}

GradeTuple quad_to_neutro(const GradeTuple& g) {
  // T' = (T + C) / 2, I' = U, F' = F.
  GradeRange t{(g.ranges[0].lo + g.ranges[1].lo) / 2.0,
               (g.ranges[0].hi + g.ranges[1].hi) / 2.0};
  return GradeTuple::make(GradeKind::Neutrosophic,
                          {(g[0] + g[1]) / 2.0, g[2], g[3]},
                          {t, g.ranges[2], g.ranges[3]});
}

GradeTuple penta_to_quad(const GradeTuple& g) {
  // U' = U + R; widened range lo_U + lo_R .. hi_U + hi_R.
  GradeRange u{g.ranges[3].lo + g.ranges[2].lo, g.ranges[3].hi + g.ranges[2].hi};
  return GradeTuple::make(GradeKind::Quadripartitioned,
                          {g[0], g[1], g[3] + g[2], g[4]},
                          {g.ranges[0], g.ranges[1], u, g.ranges[4]});
}

GradeTuple hepta_to_penta(const GradeTuple& g) {
  // Drop M, K; R' = I.
  return GradeTuple::make(
      GradeKind::Pentapartitioned, {g[0], g[2], g[4], g[3], g[6]},
      {g.ranges[0], g.ranges[2], g.ranges[4], g.ranges[3], g.ranges[6]});
}

GradeTuple halve(const GradeTuple& g, GradeKind target) {
  std::vector<double> comps;
  std::vector<GradeRange> ranges;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    comps.push_back(g[i] / 2.0);
    ranges.push_back({std::min(g.ranges[i].lo / 2.0, 0.0),
                      std::max(g.ranges[i].hi / 2.0, 1.0)});
  }
  return GradeTuple::make(target, std::move(comps), std::move(ranges));
}

GradeTuple hyperbinary_to_fuzzy(const GradeTuple& g) {
  return halve(g, GradeKind::Fuzzy);
}

GradeTuple neutro_halving(const GradeTuple& g) {
  return halve(g, GradeKind::Neutrosophic);
}

const std::vector<GradeStep>& embedding_steps() {
  static const std::vector<GradeStep> steps = {
      {GradeKind::Crisp, GradeKind::Fuzzy, crisp_to_fuzzy},
      {GradeKind::Fuzzy, GradeKind::Vague, fuzzy_to_vague},
      {GradeKind::Fuzzy, GradeKind::IntuitionisticFuzzy, fuzzy_to_intuitionistic},
      {GradeKind::Fuzzy, GradeKind::Neutrosophic, fuzzy_to_neutro},
      {GradeKind::Vague, GradeKind::Neutrosophic, vague_to_neutro},
      {GradeKind::IntuitionisticFuzzy, GradeKind::Neutrosophic, intuitionistic_to_neutro},
      {GradeKind::Neutrosophic, GradeKind::Quadripartitioned, neutro_to_quad},
      {GradeKind::Quadripartitioned, GradeKind::Pentapartitioned, quad_to_penta},
      {GradeKind::Pentapartitioned, GradeKind::Heptapartitioned, penta_to_hepta},
  };
  return steps;
}

const std::vector<GradeStep>& reduction_steps() {
  static const std::vector<GradeStep> steps = {
      {GradeKind::Quadripartitioned, GradeKind::Neutrosophic, quad_to_neutro},
      {GradeKind::Pentapartitioned, GradeKind::Quadripartitioned, penta_to_quad},
      {GradeKind::Heptapartitioned, GradeKind::Pentapartitioned, hepta_to_penta},
      {GradeKind::HyperBinary, GradeKind::Fuzzy, hyperbinary_to_fuzzy},
  };
  return steps;
}

// Shortest chain over the step table; returns the composed image or nullopt.
std::optional<GradeTuple> walk(const std::vector<GradeStep>& steps,
                               const GradeTuple& g, GradeKind target) {
  if (g.kind == target) return g;
  // BFS over kinds.
  std::map<GradeKind, GradeKind> parent;  // to -> from
  std::map<GradeKind, const GradeStep*> via;
  std::deque<GradeKind> queue{g.kind};
  std::set<GradeKind> seen{g.kind};
  while (!queue.empty()) {
    GradeKind cur = queue.front();
    queue.pop_front();
    for (const auto& step : steps) {
      if (step.from != cur || seen.count(step.to)) continue;
      parent[step.to] = cur;
      via[step.to] = &step;
      if (step.to == target) {
        std::vector<const GradeStep*> chain;
        for (GradeKind k = target; k != g.kind; k = parent[k])
          chain.push_back(via[k]);
        GradeTuple out = g;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
          out = (*it)->apply(out);
        return out;
      }
      seen.insert(step.to);
      queue.push_back(step.to);
    }
  }
  return std::nullopt;
}

bool reachable(const std::vector<GradeStep>& steps, GradeKind from, GradeKind to) {
  if (from == to) return true;
  std::deque<GradeKind> queue{from};
  std::set<GradeKind> seen{from};
  while (!queue.empty()) {
    GradeKind cur = queue.front();
    queue.pop_front();
    for (const auto& step : steps) {
      if (step.from != cur || seen.count(step.to)) continue;
      if (step.to == to) return true;
      seen.insert(step.to);
      queue.push_back(step.to);
    }
  }
  return false;
}

}  // namespace

GradeTuple embed_grade(const GradeTuple& g, GradeKind target) {
  if (arity(g.kind) != g.components.size())
    throw ArityMismatchError("component count does not match kind");
  auto out = walk(embedding_steps(), g, target);
  if (!out)
    throw NoPathError("no registered embedding from " + kind_name(g.kind) +
                      " to " + kind_name(target));
  return *out;
}

GradeTuple reduce_grade(const GradeTuple& g, GradeKind target) {
  if (arity(g.kind) != g.components.size())
    throw ArityMismatchError("component count does not match kind");
  // Halving normalization of a [0,2]-ranged neutrosophic tuple.
  if (g.kind == GradeKind::Neutrosophic && target == GradeKind::Neutrosophic) {
    bool doubled = true;
    for (const auto& r : g.ranges)
      if (!approx_eq(r.hi, 2.0) || !approx_eq(r.lo, 0.0)) doubled = false;
    if (doubled) return neutro_halving(g);
    throw NoPathError("neutrosophic halving requires [0,2] ranges");
  }
  auto out = walk(reduction_steps(), g, target);
  if (!out)
    throw NoPathError("no registered reduction from " + kind_name(g.kind) +
                      " to " + kind_name(target));
  return *out;
}

bool has_embedding_path(GradeKind from, GradeKind to) {
  return reachable(embedding_steps(), from, to);
}

bool has_reduction_path(GradeKind from, GradeKind to) {
  return reachable(reduction_steps(), from, to);
}

GradedSet embed_graded_set(const GradedSet& s, GradeKind target) {
  GradedSet out;
  out.universe = s.universe;
  out.kind = target;
  bool first = true;
  for (const auto& e : s.universe) {
    GradeTuple g = embed_grade(s.grade_of(e), target);
    if (first) {
      out.ranges = g.ranges;
      first = false;
    }
    out.grades[e] = g.components;
  }
  if (first) {
    // Empty universe: embed a dummy to learn the target ranges.
    out.ranges = standard_ranges(target);
  }
  return out;
}

CollapseResult collapse_multi(const MultiGrade& m, CollapseMode mode) {
  if (mode == CollapseMode::SingletonOnly) {
    if (m.p() != 1 || m.r() != 1 || m.s() != 1)
      throw NotSingletonError("SingletonOnly requires p = r = s = 1");
    CollapseResult out;
    out.tuple = GradeTuple::make(
        GradeKind::Neutrosophic,
        {m.truths[0], m.indeterminacies[0], m.falsities[0]},
        {m.range, m.range, m.range});
    return out;
  }
  CollapseResult out;
  out.partner = m.component_sum() / static_cast<double>(m.n());
  return out;
}

MultiGrade multicrisp_to_multineutro(const MultiCrispGrade& m) {
  if (m.k() < 2)
    throw TooFewEvaluationsError("a multi-crisp grade needs k >= 2 evaluations");
  MultiGrade out;
  for (bool b : m.evaluations) out.truths.push_back(b ? 1.0 : 0.0);
  return out;
}

}  // namespace uncertain
