#include "uncertain/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "uncertain/numeric.hpp"

namespace uncertain {

// --- Rng ---------------------------------------------------------------------

std::uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::index(std::size_t bound) {
  return bound == 0 ? 0 : static_cast<std::size_t>(next() % bound);
}

// --- KindRegistry machinery -----------------------------------------------------

void KindRegistry::add_kind(const std::string& kind, Validator validator,
                            Generator generator) {
  kinds_[kind] = KindInfo{std::move(validator), std::move(generator)};
}

void KindRegistry::add_edge(RegistryEdge edge) {
  if (!kinds_.count(edge.from) || !kinds_.count(edge.to))
    throw UnknownKindError("edge " + edge.id + " references an unregistered kind");
  edges_.push_back(std::move(edge));
}

std::vector<std::string> KindRegistry::kinds() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : kinds_) out.push_back(k);
  return out;
}

ValidationReport KindRegistry::validate(const Instance& instance) const {
  auto it = kinds_.find(instance.kind);
  if (it == kinds_.end())
    throw UnknownKindError("kind " + instance.kind + " is not registered");
  return it->second.validator(instance);
}

bool KindRegistry::can_generate(const std::string& kind) const {
  auto it = kinds_.find(kind);
  return it != kinds_.end() && it->second.generator != nullptr;
}

Instance KindRegistry::generate(const std::string& kind, Rng& rng,
                                std::size_t size) const {
  auto it = kinds_.find(kind);
  if (it == kinds_.end() || !it->second.generator)
    throw UnknownKindError("no generator for kind " + kind);
  return it->second.generator(rng, size);
}

bool KindRegistry::is_generalization(const std::string& special,
                                     const std::string& general) const {
  if (!kinds_.count(special) || !kinds_.count(general))
    throw UnknownKindError("unregistered kind");
  if (special == general) return true;
  std::deque<std::string> queue{special};
  std::set<std::string> seen{special};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& e : edges_) {
      if (e.from != cur || seen.count(e.to)) continue;
      if (e.to == general) return true;
      seen.insert(e.to);
      queue.push_back(e.to);
    }
  }
  return false;
}

std::optional<std::vector<const RegistryEdge*>> KindRegistry::shortest_path(
    const std::string& from, const std::string& to) const {
  if (from == to) return std::vector<const RegistryEdge*>{};
  // Distances to the target via reverse BFS.
  std::map<std::string, std::size_t> dist;
  dist[to] = 0;
  std::deque<std::string> queue{to};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& e : edges_) {
      if (e.to != cur || dist.count(e.from)) continue;
      dist[e.from] = dist[cur] + 1;
      queue.push_back(e.from);
    }
  }
  if (!dist.count(from)) return std::nullopt;
  // Walk forward, picking the lexicographically smallest edge id that stays
  // on a shortest path.
  std::vector<const RegistryEdge*> path;
  std::string cur = from;
  while (cur != to) {
    const RegistryEdge* best = nullptr;
    for (const auto& e : edges_) {
      if (e.from != cur) continue;
      auto it = dist.find(e.to);
      if (it == dist.end() || it->second + 1 != dist[cur]) continue;
      if (!best || e.id < best->id) best = &e;
    }
    if (!best) return std::nullopt;
    path.push_back(best);
    cur = best->to;
  }
  return path;
}

Instance KindRegistry::embed(const Instance& instance,
                             const std::string& target) const {
  if (!kinds_.count(instance.kind) || !kinds_.count(target))
    throw UnknownKindError("unregistered kind");
  auto path = shortest_path(instance.kind, target);
  if (!path)
    throw NoPathError("no registered path from " + instance.kind + " to " + target);
  Instance cur = instance;
  for (const RegistryEdge* e : *path) {
    try {
      cur = e->apply(cur);
    } catch (const std::exception& ex) {
      throw WitnessFailureError(
          "witness " + e->witness + " failed: " + ex.what(), e->id);
    }
  }
  ValidationReport check = validate(cur);
  if (!check.ok())
    throw WitnessFailureError("embedded instance fails validation for " + target +
                                  ": " + check.to_string(),
                              path->empty() ? "" : path->back()->id);
  return cur;
}

std::vector<std::string> KindRegistry::reachable_from(const std::string& kind) const {
  std::vector<std::string> out;
  std::deque<std::string> queue{kind};
  std::set<std::string> seen{kind};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& e : edges_) {
      if (e.from != cur || seen.count(e.to)) continue;
      seen.insert(e.to);
      out.push_back(e.to);
      queue.push_back(e.to);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = a * 0x9e3779b97f4a7c15ULL ^ (b + 0x165667b19e3779f9ULL);
  h = (h ^ (h >> 29)) * 0xbf58476d1ce4e5b9ULL;
  return h ^ c * 0x94d049bb133111ebULL;
}

}  // namespace

LatticeReport KindRegistry::verify(std::size_t samples, std::uint64_t seed) const {
  LatticeReport report;
  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    const RegistryEdge& edge = edges_[ei];
    EdgeVerdict verdict;
    verdict.edge_id = edge.id;
    if (!can_generate(edge.from)) {
      verdict.status = EdgeVerdict::Status::NoGenerator;
      report.verdicts.push_back(std::move(verdict));
      continue;
    }
    for (std::size_t si = 0; si < samples; ++si) {
      Rng rng(mix(seed, ei, si));
      std::size_t size = 2 + si % 4;  // universes of 2..5 elements
      Instance special = generate(edge.from, rng, size);
      ++verdict.samples_run;
      Instance image;
      try {
        image = edge.apply(special);
      } catch (const std::exception& ex) {
        ++verdict.failures;
        if (verdict.status == EdgeVerdict::Status::EmbeddedAndValid) {
          verdict.status = EdgeVerdict::Status::EmbedFailed;
          verdict.detail = ex.what();
          verdict.counterexample = describe_instance(special);
        }
        continue;
      }
      ValidationReport check = validate(image);
      if (!check.ok()) {
        ++verdict.failures;
        if (verdict.status == EdgeVerdict::Status::EmbeddedAndValid) {
          verdict.status = EdgeVerdict::Status::ValidationFailed;
          verdict.detail = check.to_string();
          // Minimize: retry smaller universes and keep the smallest failure.
          verdict.counterexample = describe_instance(special);
          for (std::size_t small = 1; small <= size; ++small) {
            Rng small_rng(mix(seed ^ 0xabcdULL, ei, small));
            Instance candidate = generate(edge.from, small_rng, small);
            try {
              Instance small_image = edge.apply(candidate);
              if (!validate(small_image).ok()) {
                verdict.counterexample = describe_instance(candidate);
                break;
              }
            } catch (const std::exception&) {
              verdict.counterexample = describe_instance(candidate);
              break;
            }
          }
        }
      }
    }
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

std::string KindRegistry::export_edge_list() const {
  std::ostringstream out;
  for (const auto& e : edges_)
    out << e.from << " -> " << e.to << " : " << e.law << "\n";
  return out.str();
}

bool KindRegistry::is_dag() const {
  std::map<std::string, std::size_t> indegree;
  for (const auto& [k, _] : kinds_) indegree[k] = 0;
  for (const auto& e : edges_) ++indegree[e.to];
  std::deque<std::string> queue;
  for (const auto& [k, d] : indegree)
    if (d == 0) queue.push_back(k);
  std::size_t visited = 0;
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    ++visited;
    for (const auto& e : edges_) {
      if (e.from != cur) continue;
      if (--indegree[e.to] == 0) queue.push_back(e.to);
    }
  }
  return visited == kinds_.size();
}

std::string describe_instance(const Instance& instance) {
  std::ostringstream out;
  out << instance.kind << " ";
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, GradedSet>) {
          out << "{";
          bool first = true;
          for (const auto& [e, comps] : payload.grades) {
            if (!first) out << "; ";
            out << e << ":(";
            for (std::size_t i = 0; i < comps.size(); ++i)
              out << (i ? "," : "") << comps[i];
            out << ")";
            first = false;
          }
          out << "}";
        } else if constexpr (std::is_same_v<T, CrispGraph>) {
          out << "|V|=" << payload.vertices.size() << " |E|=" << payload.edges.size();
        } else if constexpr (std::is_same_v<T, GradedGraph>) {
          out << "|V|=" << payload.base.vertices.size()
              << " |E|=" << payload.base.edges.size();
        } else {
          out << "(instance)";
        }
      },
      instance.payload);
  return out.str();
}

// ============================================================================
// Default registry: kinds, generators, witnesses.
// ============================================================================

namespace {

constexpr double kOmega = 2.0;
constexpr double kPsi = -1.0;

Regime regime_of(const std::vector<GradeRange>& ranges,
                 const std::vector<GradeRange>& baseline) {
  bool over = false, under = false;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    double base_hi = i < baseline.size() ? baseline[i].hi : 1.0;
    double base_lo = i < baseline.size() ? baseline[i].lo : 0.0;
    if (ranges[i].hi > base_hi + epsilon()) over = true;
    if (ranges[i].lo < base_lo - epsilon()) under = true;
  }
  if (over && under) return Regime::Off;
  if (over) return Regime::Over;
  if (under) return Regime::Under;
  return Regime::Standard;
}

std::string regime_suffix(Regime r) {
  switch (r) {
    case Regime::Standard: return "";
    case Regime::Over: return "_over";
    case Regime::Under: return "_under";
    case Regime::Off: return "_off";
  }
  return "";
}

GradeRange range_for(Regime r, const GradeRange& base = GradeRange::standard()) {
  switch (r) {
    case Regime::Standard: return base;
    case Regime::Over: return {base.lo, kOmega};
    case Regime::Under: return {kPsi, base.hi};
    case Regime::Off: return {kPsi, kOmega};
  }
  return base;
}

Universe gen_universe(std::size_t size) {
  Universe u;
  for (std::size_t i = 1; i <= std::max<std::size_t>(size, 1); ++i)
    u.add("x" + std::to_string(i));
  return u;
}

std::vector<double> gen_components(Rng& rng, GradeKind kind,
                                   const std::vector<GradeRange>& ranges) {
  // Rejection sampling against validate_grade keeps every kind's constraint.
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<double> comps;
    for (const auto& r : ranges) {
      if (kind == GradeKind::Crisp)
        comps.push_back(rng.coin() ? r.hi : r.lo);
      else
        comps.push_back(rng.uniform(r.lo, r.hi));
    }
    GradeTuple t = GradeTuple::make(kind, comps, ranges);
    if (validate_grade(t).ok()) return comps;
  }
  // Safe fallback: the lower bound of each range, or 0 when inside.
  std::vector<double> comps;
  for (const auto& r : ranges)
    comps.push_back(kind == GradeKind::Crisp ? r.lo : std::max(r.lo, 0.0));
  return comps;
}

GradedSet gen_graded(Rng& rng, std::size_t size, GradeKind kind, Regime regime) {
  GradedSet s;
  s.kind = kind;
  s.universe = gen_universe(size);
  for (const auto& base : standard_ranges(kind))
    s.ranges.push_back(range_for(regime, base));
  for (const auto& e : s.universe)
    s.grades[e] = gen_components(rng, kind, s.ranges);
  return s;
}

CrispGraph gen_crisp_graph(Rng& rng, std::size_t size) {
  CrispGraph g;
  g.vertices = gen_universe(std::max<std::size_t>(size, 2));
  const auto& vs = g.vertices.elements();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (rng.coin()) g.edges.insert(Edge(vs[i], vs[j]));
  return g;
}

// Edge rule directions, mirrored from the graph validator.
std::vector<int> graph_rules(GradeKind kind) {
  switch (kind) {
    case GradeKind::Fuzzy: return {+1};
    case GradeKind::Quadripartitioned: return {+1, +1, +2, +2};
    case GradeKind::Pentapartitioned: return {+1, +1, -1, -1, -1};
    case GradeKind::Heptapartitioned: return {+1, +1, +1, -1, -1, -1, -1};
    default: return std::vector<int>(arity(kind), 0);
  }
}

GradedGraph gen_graded_graph(Rng& rng, std::size_t size, GradeKind kind,
                             Regime regime) {
  GradedGraph g;
  g.kind = kind;
  g.base = gen_crisp_graph(rng, size);
  for (const auto& base : standard_ranges(kind))
    g.ranges.push_back(range_for(regime, base));
  for (const auto& v : g.base.vertices)
    g.vertex_grades[v] = gen_components(rng, kind, g.ranges);
  const auto rules = graph_rules(kind);
  for (const auto& e : g.base.edges) {
    if (regime != Regime::Standard) {
      g.edge_grades[e] = gen_components(rng, kind, g.ranges);
      continue;
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
      std::vector<double> comps(arity(kind));
      const auto& gu = g.vertex_grades[e.u];
      const auto& gv = g.vertex_grades[e.v];
      for (std::size_t i = 0; i < comps.size(); ++i) {
        double lo = std::min(gu[i], gv[i]);
        double hi = std::max(gu[i], gv[i]);
        switch (rules[i]) {
          case +1: comps[i] = rng.uniform(g.ranges[i].lo, lo); break;
          case +2: comps[i] = rng.uniform(g.ranges[i].lo, hi); break;
          case -1: comps[i] = rng.uniform(hi, g.ranges[i].hi); break;
          default: comps[i] = rng.uniform(g.ranges[i].lo, g.ranges[i].hi); break;
        }
      }
      GradeTuple t = GradeTuple::make(kind, comps, g.ranges);
      if (validate_grade(t).ok()) {
        g.edge_grades[e] = std::move(comps);
        break;
      }
    }
    if (!g.edge_grades.count(e)) {
      // Mirror the smaller endpoint; always legal for every rule direction.
      std::vector<double> comps(arity(kind));
      const auto& gu = g.vertex_grades[e.u];
      const auto& gv = g.vertex_grades[e.v];
      for (std::size_t i = 0; i < comps.size(); ++i)
        comps[i] = rules[i] == -1 ? std::max(gu[i], gv[i])
                                  : std::min(gu[i], gv[i]);
      g.edge_grades[e] = std::move(comps);
    }
  }
  return g;
}

ElementSet gen_subset(Rng& rng, const Universe& u) {
  ElementSet out;
  for (const auto& e : u)
    if (rng.coin()) out.insert(e);
  return out;
}

// --- payload helpers ---------------------------------------------------------

template <typename T>
const T& payload_as(const Instance& inst) {
  const T* ptr = std::get_if<T>(&inst.payload);
  if (!ptr)
    throw DomainError("WrongPayload",
                      "instance " + inst.kind + " carries an unexpected payload");
  return *ptr;
}

Instance make_instance(std::string kind, Payload payload) {
  return Instance{std::move(kind), std::move(payload)};
}

ValidationReport kind_mismatch(const std::string& kind, const std::string& why) {
  ValidationReport r;
  r.add("KindMismatch", kind, why);
  return r;
}

}  // namespace

// ----------------------------------------------------------------------------

const KindRegistry& default_registry() {
  static const KindRegistry registry = [] {
    KindRegistry reg;

    // ---- graded set kinds ----------------------------------------------------
    struct GradedKindSpec {
      GradeKind kind;
      std::vector<Regime> regimes;
    };
    const std::vector<GradedKindSpec> graded_specs = {
        {GradeKind::Crisp, {Regime::Standard, Regime::Off}},
        {GradeKind::Fuzzy,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::Vague,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::IntuitionisticFuzzy,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::Neutrosophic,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::Quadripartitioned,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::Pentapartitioned,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::Heptapartitioned, {Regime::Standard}},
        {GradeKind::HyperBinary, {Regime::Standard}},
        {GradeKind::DoubleValued, {Regime::Standard}},
    };
    for (const auto& spec : graded_specs) {
      for (Regime regime : spec.regimes) {
        std::string id = kind_name(spec.kind) + regime_suffix(regime);
        GradeKind kind = spec.kind;
        reg.add_kind(
            id,
            [id, kind, regime](const Instance& inst) {
              const auto& s = payload_as<GradedSet>(inst);
              if (s.kind != kind)
                return kind_mismatch(id, "payload grade kind differs");
              if (regime_of(s.ranges, standard_ranges(kind)) != regime)
                return kind_mismatch(id, "declared ranges do not match the regime");
              return validate_graded_set(s);
            },
            [kind, regime](Rng& rng, std::size_t size) {
              return make_instance(kind_name(kind) + regime_suffix(regime),
                                   gen_graded(rng, size, kind, regime));
            });
      }
    }

    // ---- multi-valued sets ----------------------------------------------------
    reg.add_kind(
        "multineutrosophic",
        [](const Instance& inst) {
          return validate_multigraded_set(payload_as<MultiGradedSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          MultiGradedSet s;
          s.universe = gen_universe(size);
          for (const auto& e : s.universe) {
            MultiGrade m;
            std::size_t p = 1 + rng.index(2), r = 1 + rng.index(2),
                        q = 1 + rng.index(2);
            if (p + r + q < 2) p = 2;
            for (std::size_t i = 0; i < p; ++i) m.truths.push_back(rng.uniform());
            for (std::size_t i = 0; i < r; ++i)
              m.indeterminacies.push_back(rng.uniform());
            for (std::size_t i = 0; i < q; ++i) m.falsities.push_back(rng.uniform());
            s.grades[e] = std::move(m);
          }
          return make_instance("multineutrosophic", std::move(s));
        });

    reg.add_kind(
        "multicrisp",
        [](const Instance& inst) {
          return validate_multicrisp_set(payload_as<MultiCrispSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          MultiCrispSet s;
          s.universe = gen_universe(size);
          for (const auto& e : s.universe) {
            MultiCrispGrade g;
            std::size_t k = 2 + rng.index(2);
            for (std::size_t i = 0; i < k; ++i) g.evaluations.push_back(rng.coin());
            s.grades[e] = std::move(g);
          }
          return make_instance("multicrisp", std::move(s));
        });

    // ---- plithogenic kinds ------------------------------------------------------
    for (Regime regime :
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}) {
      std::string id = "plithogenic" + regime_suffix(regime);
      reg.add_kind(
          id,
          [id, regime](const Instance& inst) {
            const auto& ps = payload_as<PlithogenicSet>(inst);
            std::vector<GradeRange> baseline(ps.daf.ranges.size(),
                                             GradeRange::standard());
            if (regime_of(ps.daf.ranges, baseline) != regime)
              return kind_mismatch(id, "DAF ranges do not match the regime");
            return validate_plithogenic(ps);
          },
          [regime](Rng& rng, std::size_t size) {
            PlithogenicSet ps;
            ps.carrier = gen_universe(size);
            ps.spec.name = "v";
            std::size_t value_count = 1 + rng.index(2);
            for (std::size_t i = 1; i <= value_count; ++i)
              ps.spec.values.push_back("a" + std::to_string(i));
            std::size_t s = 1 + rng.index(3);
            ps.daf.dims = s;
            ps.daf.ranges.assign(s, range_for(regime));
            for (const auto& x : ps.carrier) {
              for (const auto& a : ps.spec.values) {
                std::vector<double> degrees;
                for (std::size_t i = 0; i < s; ++i)
                  degrees.push_back(
                      rng.uniform(ps.daf.ranges[i].lo, ps.daf.ranges[i].hi));
                ps.daf.entries[{x, a}] = std::move(degrees);
              }
            }
            ps.dcf.dims = 1;
            for (std::size_t i = 0; i < ps.spec.values.size(); ++i)
              for (std::size_t j = i; j < ps.spec.values.size(); ++j)
                ps.dcf.entries[{ps.spec.values[i], ps.spec.values[j]}] = {
                    i == j ? 0.0 : rng.uniform()};
            return make_instance("plithogenic" + regime_suffix(regime),
                                 std::move(ps));
          });
    }

    reg.add_kind(
        "multiplithogenic",
        [](const Instance& inst) {
          return validate_multiplithogenic(payload_as<MultiPlithogenicSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          MultiPlithogenicSet mps;
          mps.carrier = gen_universe(size);
          std::size_t s = 1 + rng.index(3);
          std::vector<AttributeValue> all;
          for (std::size_t ai = 1; ai <= 2; ++ai) {
            AttributeSpec spec;
            spec.name = "v" + std::to_string(ai);
            std::size_t value_count = 1 + rng.index(2);
            for (std::size_t vi = 1; vi <= value_count; ++vi)
              spec.values.push_back(spec.name + "a" + std::to_string(vi));
            DAFTable daf = DAFTable::standard(s);
            for (const auto& x : mps.carrier)
              for (const auto& a : spec.values) {
                std::vector<double> degrees;
                for (std::size_t i = 0; i < s; ++i) degrees.push_back(rng.uniform());
                daf.entries[{x, a}] = std::move(degrees);
              }
            for (const auto& a : spec.values) all.push_back(a);
            mps.attributes.push_back(std::move(spec));
            mps.dafs.push_back(std::move(daf));
          }
          mps.dcf.dims = 1;
          for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j)
              mps.dcf.entries[{all[i], all[j]}] = {i == j ? 0.0 : rng.uniform()};
          return make_instance("multiplithogenic", std::move(mps));
        });

    reg.add_kind("treeplithogenic", [](const Instance& inst) {
      return validate_treeplithogenic(payload_as<TreePlithogenicSet>(inst));
    });

    reg.add_kind("hyperplithogenic", [](const Instance& inst) {
      return validate_hyperplithogenic(payload_as<HyperPlithogenicSet>(inst));
    });

    // ---- hyper / superhyper sets -------------------------------------------------
    struct HyperSpec {
      HyperKind kind;
      std::vector<Regime> regimes;
    };
    const std::vector<HyperSpec> hyper_specs = {
        {HyperKind::HyperCrisp, {Regime::Standard}},
        {HyperKind::HyperFuzzy, {Regime::Standard}},
        {HyperKind::HyperVague,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {HyperKind::HyperNeutrosophic, {Regime::Standard}},
        {HyperKind::SubsetValuedNeutrosophic, {Regime::Standard}},
    };
    for (const auto& spec : hyper_specs) {
      for (Regime regime : spec.regimes) {
        std::string id = hyper_kind_name(spec.kind) + regime_suffix(regime);
        HyperKind kind = spec.kind;
        Generator gen = nullptr;
        if (kind != HyperKind::SubsetValuedNeutrosophic) {
          gen = [kind, regime](Rng& rng, std::size_t size) {
            HyperGradedSet h;
            h.universe = gen_universe(size);
            h.kind = kind;
            h.range = range_for(regime);
            std::size_t dim = hyper_arity(kind);
            for (const auto& e : h.universe) {
              GradePointSet points;
              std::size_t count = 1 + rng.index(3);
              for (std::size_t i = 0; i < count; ++i) {
                for (int attempt = 0; attempt < 64; ++attempt) {
                  std::vector<double> point;
                  for (std::size_t c = 0; c < dim; ++c) {
                    if (kind == HyperKind::HyperCrisp)
                      point.push_back(rng.coin() ? 1.0 : 0.0);
                    else
                      point.push_back(rng.uniform(h.range.lo, h.range.hi));
                  }
                  if (kind == HyperKind::HyperVague) {
                    double sum = point[0] + point[1];
                    if (sum > std::max(h.range.hi, 1.0) ||
                        sum < std::min(h.range.lo, 0.0))
                      continue;
                  }
                  points.push_back(std::move(point));
                  break;
                }
              }
              if (points.empty()) points.push_back(std::vector<double>(dim, 0.0));
              std::sort(points.begin(), points.end());
              points.erase(std::unique(points.begin(), points.end()), points.end());
              h.values[e] = std::move(points);
            }
            return make_instance(hyper_kind_name(kind) + regime_suffix(regime),
                                 std::move(h));
          };
        }
        reg.add_kind(
            id,
            [id, kind, regime](const Instance& inst) {
              const auto& h = payload_as<HyperGradedSet>(inst);
              if (h.kind != kind)
                return kind_mismatch(id, "payload hyper kind differs");
              if (regime_of({h.range}, {GradeRange::standard()}) != regime)
                return kind_mismatch(id, "declared range does not match the regime");
              return validate_hyper(h);
            },
            gen);
      }
    }

    for (SuperHyperKind kind :
         {SuperHyperKind::SuperHyperCrisp, SuperHyperKind::SuperHyperFuzzy,
          SuperHyperKind::SuperHyperVague, SuperHyperKind::SuperHyperNeutrosophic}) {
      std::string id = hyper_kind_name(kind);
      reg.add_kind(id, [id, kind](const Instance& inst) {
        const auto& s = payload_as<SuperHyperGradedSet>(inst);
        if (s.kind != kind) return kind_mismatch(id, "payload super kind differs");
        return validate_hyper(s);
      });
    }

    // ---- soft family ----------------------------------------------------------
    reg.add_kind(
        "soft",
        [](const Instance& inst) {
          return validate_soft(payload_as<SoftSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          SoftSet s;
          s.universe = gen_universe(size);
          std::size_t params = 1 + rng.index(3);
          for (std::size_t i = 1; i <= params; ++i)
            s.mapping["e" + std::to_string(i)] = gen_subset(rng, s.universe);
          return make_instance("soft", std::move(s));
        });

    reg.add_kind(
        "bijective_soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          ValidationReport report = validate_soft(s);
          report.merge(bijective_validate(s));
          return report;
        },
        [](Rng& rng, std::size_t size) {
          SoftSet s;
          s.universe = gen_universe(size);
          std::size_t params = 2 + rng.index(2);
          for (std::size_t i = 1; i <= params; ++i)
            s.mapping["e" + std::to_string(i)] = {};
          for (const auto& e : s.universe)
            s.mapping["e" + std::to_string(1 + rng.index(params))].insert(e);
          return make_instance("bijective_soft", std::move(s));
        });

    reg.add_kind(
        "softexpert",
        [](const Instance& inst) {
          return soft_expert_validate(payload_as<SoftExpertSet>(inst));
        });

    reg.add_kind(
        "multisoft",
        [](const Instance& inst) {
          return validate_multisoft(payload_as<MultiSoftSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          MultiSoftSet m;
          m.universe = gen_universe(size);
          m.families.emplace_back("E1", ParameterSet{"p1", "p2"});
          m.families.emplace_back("E2", ParameterSet{"q1"});
          std::vector<Parameter> pool = {"p1", "p2", "q1"};
          std::size_t keys = 1 + rng.index(3);
          for (std::size_t i = 0; i < keys; ++i) {
            ParameterSet key;
            for (const auto& p : pool)
              if (rng.coin()) key.insert(p);
            if (key.empty()) key.insert(pool[rng.index(pool.size())]);
            m.mapping[key] = gen_subset(rng, m.universe);
          }
          return make_instance("multisoft", std::move(m));
        });

    reg.add_kind(
        "hypersoft",
        [](const Instance& inst) {
          return hypersoft_validate(payload_as<HyperSoftSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          HyperSoftSet h;
          h.universe = gen_universe(size);
          h.domains.push_back({"T1", {"a1", "a2"}});
          h.domains.push_back({"T2", {"b1"}});
          for (const auto& a : h.domains[0].values)
            for (const auto& b : h.domains[1].values)
              if (rng.coin()) h.mapping[{a, b}] = gen_subset(rng, h.universe);
          if (h.mapping.empty()) h.mapping[{"a1", "b1"}] = gen_subset(rng, h.universe);
          return make_instance("hypersoft", std::move(h));
        });

    reg.add_kind("superhypersoft", [](const Instance& inst) {
      return superhypersoft_validate(payload_as<SuperHyperSoftSet>(inst));
    });

    reg.add_kind(
        "treesoft",
        [](const Instance& inst) {
          return treesoft_validate(payload_as<TreeSoftSet>(inst));
        },
        [](Rng& rng, std::size_t size) {
          TreeSoftSet t;
          t.universe = gen_universe(size);
          t.tree.add_root_child("A1");
          t.tree.add_child("A1", "a");
          t.tree.add_child("A1", "b");
          t.tree.add_root_child("A2");
          t.tree.add_child("A2", "c");
          auto nodes = t.tree.all_nodes();
          std::size_t keys = 1 + rng.index(3);
          for (std::size_t i = 0; i < keys; ++i) {
            NodeKey key;
            for (const auto& n : nodes)
              if (rng.coin()) key.insert(n);
            if (key.empty()) key.insert(nodes[rng.index(nodes.size())]);
            t.mapping[key] = gen_subset(rng, t.universe);
          }
          return make_instance("treesoft", std::move(t));
        });

    reg.add_kind(
        "bijective_treesoft",
        [](const Instance& inst) {
          const auto& t = payload_as<TreeSoftSet>(inst);
          ValidationReport report = treesoft_validate(t);
          report.merge(bijective_validate(t));
          return report;
        },
        [](Rng& rng, std::size_t size) {
          TreeSoftSet t;
          t.universe = gen_universe(size);
          t.tree.add_root_child("A1");
          t.tree.add_child("A1", "a");
          t.tree.add_child("A1", "b");
          auto nodes = t.tree.all_nodes();
          for (const auto& n : nodes) t.mapping[NodeKey{n}] = {};
          for (const auto& e : t.universe)
            t.mapping[NodeKey{nodes[rng.index(nodes.size())]}].insert(e);
          return make_instance("bijective_treesoft", std::move(t));
        });

    reg.add_kind("ranked_soft", [](const Instance& inst) {
      return ranked_validate(payload_as<RankedSoftSet>(inst));
    });
    reg.add_kind("ranked_hypersoft", [](const Instance& inst) {
      return ranked_validate(payload_as<RankedHyperSoftSet>(inst));
    });
    reg.add_kind("neutrosophic_multisoft", [](const Instance& inst) {
      return graded_soft_validate(payload_as<NeutroMultiSoftSet>(inst),
                                  set_key_name);
    });
    reg.add_kind("neutrosophic_treesoft", [](const Instance& inst) {
      return graded_soft_validate(payload_as<NeutroTreeSoftSet>(inst),
                                  set_key_name);
    });

    // ---- graph kinds -----------------------------------------------------------
    reg.add_kind(
        "crisp_graph",
        [](const Instance& inst) {
          return validate_crisp_graph(payload_as<CrispGraph>(inst));
        },
        [](Rng& rng, std::size_t size) {
          return make_instance("crisp_graph", gen_crisp_graph(rng, size));
        });

    struct GraphKindSpec {
      GradeKind kind;
      std::vector<Regime> regimes;
    };
    const std::vector<GraphKindSpec> graph_specs = {
        {GradeKind::Fuzzy,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::IntuitionisticFuzzy, {Regime::Standard}},
        {GradeKind::Neutrosophic,
         {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}},
        {GradeKind::Quadripartitioned, {Regime::Standard, Regime::Off}},
        {GradeKind::Pentapartitioned, {Regime::Standard, Regime::Off}},
        {GradeKind::Heptapartitioned, {Regime::Standard}},
        {GradeKind::DoubleValued, {Regime::Standard}},
    };
    for (const auto& spec : graph_specs) {
      for (Regime regime : spec.regimes) {
        std::string id = kind_name(spec.kind) + "_graph" + regime_suffix(regime);
        GradeKind kind = spec.kind;
        reg.add_kind(
            id,
            [id, kind, regime](const Instance& inst) {
              const auto& g = payload_as<GradedGraph>(inst);
              if (g.kind != kind)
                return kind_mismatch(id, "payload grade kind differs");
              if (regime_of(g.ranges, standard_ranges(kind)) != regime)
                return kind_mismatch(id, "declared ranges do not match the regime");
              return validate_graded_graph(g);
            },
            [kind, regime](Rng& rng, std::size_t size) {
              return make_instance(
                  kind_name(kind) + "_graph" + regime_suffix(regime),
                  gen_graded_graph(rng, size, kind, regime));
            });
      }
    }

    reg.add_kind("hyperfuzzy_graph", [](const Instance& inst) {
      return validate_hyperfuzzy_graph(payload_as<HyperFuzzyGraph>(inst));
    });

    for (bool general : {false, true}) {
      std::string id = general ? "general_plithogenic_graph" : "plithogenic_graph";
      reg.add_kind(id, [id, general](const Instance& inst) {
        const auto& pg = payload_as<PlithogenicGraph>(inst);
        if (pg.general_flag != general)
          return kind_mismatch(id, "general flag does not match the kind");
        return validate_plithogenic_graph(pg);
      });
    }

    for (MultiGraphKind kind :
         {MultiGraphKind::MultiNeutrosophic, MultiGraphKind::MultiQuadripartitioned,
          MultiGraphKind::MultiPentapartitioned}) {
      std::string id = kind == MultiGraphKind::MultiNeutrosophic
                           ? "multineutrosophic_graph"
                       : kind == MultiGraphKind::MultiQuadripartitioned
                           ? "multiquadripartitioned_graph"
                           : "multipentapartitioned_graph";
      reg.add_kind(id, [id, kind](const Instance& inst) {
        const auto& mg = payload_as<MultiGradedGraph>(inst);
        if (mg.kind != kind) return kind_mismatch(id, "payload multi kind differs");
        return validate_multigraded_graph(mg);
      });
    }

    reg.add_kind(
        "hypergraph",
        [](const Instance& inst) {
          return validate_hypergraph(payload_as<Hypergraph>(inst));
        },
        [](Rng& rng, std::size_t size) {
          Hypergraph h;
          h.vertices = gen_universe(std::max<std::size_t>(size, 2));
          std::size_t count = 1 + rng.index(3);
          for (std::size_t i = 0; i < count; ++i) {
            ElementSet he = gen_subset(rng, h.vertices);
            if (he.empty()) he.insert(h.vertices.elements()[0]);
            h.hyperedges.push_back(std::move(he));
          }
          return make_instance("hypergraph", std::move(h));
        });

    for (Regime regime : {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}) {
      std::string id = "neutrosophic_hypergraph" + regime_suffix(regime);
      reg.add_kind(id, [id, regime](const Instance& inst) {
        const auto& h = payload_as<NeutroHypergraph>(inst);
        if (regime_of({h.range}, {GradeRange::standard()}) != regime)
          return kind_mismatch(id, "declared range does not match the regime");
        return validate_neutro_hypergraph(h);
      });
    }

    reg.add_kind("superhypergraph", [](const Instance& inst) {
      return validate_superhypergraph(payload_as<SuperHyperGraph>(inst));
    });

    reg.add_kind(
        "soft_graph",
        [](const Instance& inst) {
          const auto& sg = payload_as<SoftGraph>(inst);
          ValidationReport report = soft_graph_validate(sg);
          for (const auto& [key, _] : sg.mapping)
            if (key.size() != 1)
              report.add("NonSingletonKey", set_key_name(key),
                         "plain soft graphs key single parameters");
          return report;
        },
        [](Rng& rng, std::size_t size) {
          SoftGraph sg;
          sg.base = gen_crisp_graph(rng, size);
          std::size_t params = 1 + rng.index(3);
          for (std::size_t i = 1; i <= params; ++i) {
            ElementSet fv = gen_subset(rng, sg.base.vertices);
            EdgeSet ke;
            for (const auto& e : sg.base.edges)
              if (fv.count(e.u) && fv.count(e.v) && rng.coin()) ke.insert(e);
            sg.mapping[ParameterSet{"e" + std::to_string(i)}] = {std::move(fv),
                                                                 std::move(ke)};
          }
          return make_instance("soft_graph", std::move(sg));
        });

    reg.add_kind("multisoft_graph", [](const Instance& inst) {
      return soft_graph_validate(payload_as<SoftGraph>(inst));
    });

    for (Regime regime : {Regime::Standard, Regime::Over, Regime::Under, Regime::Off}) {
      std::string id = "neutrosophic_soft_graph" + regime_suffix(regime);
      Generator gen = nullptr;
      if (regime == Regime::Standard || regime == Regime::Over) {
        gen = [regime](Rng& rng, std::size_t size) {
          NeutroSoftGraph g;
          g.base = gen_crisp_graph(rng, size);
          g.range = range_for(regime);
          std::size_t params = 1 + rng.index(2);
          for (std::size_t i = 1; i <= params; ++i) {
            NeutroSoftGraph::Layer layer;
            layer.vertices = gen_subset(rng, g.base.vertices);
            for (const auto& v : layer.vertices)
              layer.vertex_grades[v] = {rng.uniform(g.range.lo, g.range.hi),
                                        rng.uniform(g.range.lo, g.range.hi),
                                        rng.uniform(g.range.lo, g.range.hi)};
            for (const auto& e : g.base.edges)
              if (layer.vertices.count(e.u) && layer.vertices.count(e.v) &&
                  rng.coin()) {
                layer.edges.insert(e);
                layer.edge_grades[e] = {rng.uniform(g.range.lo, g.range.hi),
                                        rng.uniform(g.range.lo, g.range.hi),
                                        rng.uniform(g.range.lo, g.range.hi)};
              }
            g.mapping["e" + std::to_string(i)] = std::move(layer);
          }
          return make_instance("neutrosophic_soft_graph" + regime_suffix(regime),
                               std::move(g));
        };
      }
      reg.add_kind(
          id,
          [id, regime](const Instance& inst) {
            const auto& g = payload_as<NeutroSoftGraph>(inst);
            if (regime_of({g.range}, {GradeRange::standard()}) != regime)
              return kind_mismatch(id, "declared range does not match the regime");
            return validate_neutro_soft_graph(g);
          },
          gen);
    }

    reg.add_kind("hypersoft_graph", [](const Instance& inst) {
      try {
        return hypersoft_graph_validate(payload_as<HyperSoftGraph>(inst));
      } catch (const DisconnectedBaseError& ex) {
        ValidationReport r;
        r.add("DisconnectedBase", "", ex.what());
        return r;
      }
    });

    reg.add_kind(
        "weighted_graph",
        [](const Instance& inst) {
          const auto& g = payload_as<WeightedGraph>(inst);
          ValidationReport report = validate_crisp_graph(g.base);
          for (const auto& e : g.base.edges)
            if (!g.weights.count(e))
              report.add("MissingAnnotation", e.name(), "edge has no weight");
          return report;
        },
        [](Rng& rng, std::size_t size) {
          WeightedGraph g;
          g.base = gen_crisp_graph(rng, size);
          for (const auto& e : g.base.edges)
            g.weights[e] = std::floor(rng.uniform(0.0, 10.0));
          return make_instance("weighted_graph", std::move(g));
        });

    reg.add_kind(
        "hyperweighted_graph",
        [](const Instance& inst) {
          return validate_annotated(payload_as<HyperWeightedGraph>(inst));
        },
        [](Rng& rng, std::size_t size) {
          HyperWeightedGraph g;
          g.base = gen_crisp_graph(rng, size);
          for (const auto& e : g.base.edges) {
            std::vector<double> ws;
            std::size_t count = 1 + rng.index(3);
            for (std::size_t i = 0; i < count; ++i)
              ws.push_back(std::floor(rng.uniform(0.0, 10.0)));
            std::sort(ws.begin(), ws.end());
            ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
            g.weights[e] = std::move(ws);
          }
          return make_instance("hyperweighted_graph", std::move(g));
        });

    reg.add_kind("superhyperweighted_graph", [](const Instance& inst) {
      return validate_annotated(payload_as<SuperHyperWeightedGraph>(inst));
    });

    reg.add_kind(
        "labeled_graph",
        [](const Instance& inst) {
          const auto& g = payload_as<LabeledGraph>(inst);
          ValidationReport report = validate_crisp_graph(g.base);
          for (const auto& v : g.base.vertices)
            if (!g.vertex_labels.count(v))
              report.add("MissingAnnotation", v, "vertex has no label");
          for (const auto& e : g.base.edges)
            if (!g.edge_labels.count(e))
              report.add("MissingAnnotation", e.name(), "edge has no label");
          return report;
        },
        [](Rng& rng, std::size_t size) {
          static const std::vector<std::string> vlabels = {"red", "blue", "green"};
          static const std::vector<std::string> elabels = {"solid", "dashed"};
          LabeledGraph g;
          g.base = gen_crisp_graph(rng, size);
          for (const auto& v : g.base.vertices)
            g.vertex_labels[v] = vlabels[rng.index(vlabels.size())];
          for (const auto& e : g.base.edges)
            g.edge_labels[e] = elabels[rng.index(elabels.size())];
          return make_instance("labeled_graph", std::move(g));
        });

    reg.add_kind(
        "hyperlabeled_graph",
        [](const Instance& inst) {
          return validate_annotated(payload_as<HyperLabeledGraph>(inst));
        },
        [](Rng& rng, std::size_t size) {
          static const std::vector<std::string> vlabels = {"red", "blue", "green"};
          static const std::vector<std::string> elabels = {"solid", "dashed"};
          HyperLabeledGraph g;
          g.base = gen_crisp_graph(rng, size);
          for (const auto& v : g.base.vertices) {
            std::vector<std::string> ls{vlabels[rng.index(vlabels.size())]};
            if (rng.coin()) ls.push_back(vlabels[rng.index(vlabels.size())]);
            std::sort(ls.begin(), ls.end());
            ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
            g.vertex_labels[v] = std::move(ls);
          }
          for (const auto& e : g.base.edges)
            g.edge_labels[e] = {elabels[rng.index(elabels.size())]};
          return make_instance("hyperlabeled_graph", std::move(g));
        });

    reg.add_kind("superhyperlabeled_graph", [](const Instance& inst) {
      return validate_annotated(payload_as<SuperHyperLabeledGraph>(inst));
    });

    // =========================================================================
    // Registered generalization edges (special -> general).
    // =========================================================================

    auto add = [&reg](const std::string& from, const std::string& to,
                      const std::string& witness, const std::string& law,
                      std::function<Instance(const Instance&)> apply) {
      reg.add_edge(RegistryEdge{from + "->" + to, from, to, witness, law,
                                std::move(apply)});
    };

    // Grade chain on sets.
    auto graded_embed = [](GradeKind target, const std::string& target_id) {
      return [target, target_id](const Instance& inst) {
        return make_instance(target_id,
                             embed_graded_set(payload_as<GradedSet>(inst), target));
      };
    };
    add("crisp", "fuzzy", "chi_as_mu", "fuzzy-generalizes-crisp",
        graded_embed(GradeKind::Fuzzy, "fuzzy"));
    add("fuzzy", "vague", "t=mu,f=1-mu", "vague-generalizes-fuzzy",
        graded_embed(GradeKind::Vague, "vague"));
    add("fuzzy", "intuitionistic", "nu=0", "intuitionistic-generalizes-fuzzy",
        graded_embed(GradeKind::IntuitionisticFuzzy, "intuitionistic"));
    add("fuzzy", "neutrosophic", "T=mu,I=0,F=1-mu", "neutrosophic-generalizes-fuzzy",
        graded_embed(GradeKind::Neutrosophic, "neutrosophic"));
    add("vague", "neutrosophic", "T=t,I=1-t-f,F=f", "neutrosophic-generalizes-vague",
        graded_embed(GradeKind::Neutrosophic, "neutrosophic"));
    add("intuitionistic", "neutrosophic", "T=mu,I=1-mu-nu,F=nu", "neutrosophic-generalizes-intuitionistic",
        graded_embed(GradeKind::Neutrosophic, "neutrosophic"));
    add("neutrosophic", "quadripartitioned", "C=0,U=I", "quadripartitioned-refines-neutrosophic",
        graded_embed(GradeKind::Quadripartitioned, "quadripartitioned"));
    add("quadripartitioned", "pentapartitioned", "R=0", "pentapartitioned-refines-quadripartitioned",
        graded_embed(GradeKind::Pentapartitioned, "pentapartitioned"));
    add("pentapartitioned", "heptapartitioned", "M=K=0,I=R", "heptapartitioned-refines-pentapartitioned",
        graded_embed(GradeKind::Heptapartitioned, "heptapartitioned"));

    add("crisp", "hyperbinary", "chi_in_[0,2]", "hyperbinary-generalizes-binary",
        [](const Instance& inst) {
          const auto& s = payload_as<GradedSet>(inst);
          GradedSet out;
          out.universe = s.universe;
          out.kind = GradeKind::HyperBinary;
          out.ranges = standard_ranges(GradeKind::HyperBinary);
          for (const auto& [e, comps] : s.grades) out.grades[e] = comps;
          return make_instance("hyperbinary", std::move(out));
        });

    // Regime widening on sets.
    auto widen_set = [](Regime regime, const std::string& target_id) {
      return [regime, target_id](const Instance& inst) {
        GradedSet s = payload_as<GradedSet>(inst);
        for (auto& r : s.ranges) {
          if (regime == Regime::Over || regime == Regime::Off) r.hi = kOmega;
          if (regime == Regime::Under || regime == Regime::Off) r.lo = kPsi;
        }
        return make_instance(target_id, std::move(s));
      };
    };
    for (const char* kind : {"fuzzy", "intuitionistic", "vague", "neutrosophic",
                             "quadripartitioned", "pentapartitioned"}) {
      std::string k = kind;
      add(k, k + "_over", "widen(omega=2)", k + "-overset-extension",
          widen_set(Regime::Over, k + "_over"));
      add(k, k + "_under", "widen(psi=-1)", k + "-underset-extension",
          widen_set(Regime::Under, k + "_under"));
      add(k + "_over", k + "_off", "widen(psi=-1)", k + "-offset-extension",
          widen_set(Regime::Off, k + "_off"));
      add(k + "_under", k + "_off", "widen(omega=2)", k + "-offset-extension",
          widen_set(Regime::Off, k + "_off"));
    }

    add("crisp", "crisp_off", "chi_to_{psi,omega}", "crisp-offset-extension",
        [](const Instance& inst) {
          GradedSet s = payload_as<GradedSet>(inst);
          for (auto& [e, comps] : s.grades)
            comps[0] = comps[0] > 0.5 ? kOmega : kPsi;
          s.ranges = {GradeRange{kPsi, kOmega}};
          return make_instance("crisp_off", std::move(s));
        });
    add("crisp_off", "fuzzy_off", "chi_as_mu", "fuzzy-offset-generalizes-crisp-offset",
        [](const Instance& inst) {
          GradedSet s = payload_as<GradedSet>(inst);
          s.kind = GradeKind::Fuzzy;
          return make_instance("fuzzy_off", std::move(s));
        });

    // Multi-valued sets.
    add("neutrosophic", "multineutrosophic", "singleton_lists", "multineutrosophic-generalizes-neutrosophic",
        [](const Instance& inst) {
          const auto& s = payload_as<GradedSet>(inst);
          MultiGradedSet out;
          out.universe = s.universe;
          for (const auto& [e, comps] : s.grades) {
            MultiGrade m;
            m.truths = {comps[0]};
            m.indeterminacies = {comps[1]};
            m.falsities = {comps[2]};
            out.grades[e] = std::move(m);
          }
          return make_instance("multineutrosophic", std::move(out));
        });
    add("multicrisp", "multineutrosophic", "T_i={mu_i}", "multineutrosophic-generalizes-multicrisp",
        [](const Instance& inst) {
          const auto& s = payload_as<MultiCrispSet>(inst);
          MultiGradedSet out;
          out.universe = s.universe;
          for (const auto& [e, g] : s.grades)
            out.grades[e] = multicrisp_to_multineutro(g);
          return make_instance("multineutrosophic", std::move(out));
        });

    // Plithogenic embeddings.
    auto graded_to_plithogenic = [](const Instance& inst) {
      const auto& s = payload_as<GradedSet>(inst);
      PlithogenicSet ps;
      ps.carrier = s.universe;
      ps.spec.name = "membership";
      ps.spec.values = {"m"};
      ps.daf.dims = arity(s.kind);
      ps.daf.ranges = s.ranges;
      for (const auto& [e, comps] : s.grades) ps.daf.entries[{e, "m"}] = comps;
      ps.dcf = DCFMatrix::zero(ps.spec.values);
      Regime regime = regime_of(s.ranges, std::vector<GradeRange>(
                                              s.ranges.size(), GradeRange::standard()));
      return make_instance("plithogenic" + regime_suffix(regime), std::move(ps));
    };
    add("fuzzy", "plithogenic", "s=1_positional", "plithogenic-subsumes-fuzzy", graded_to_plithogenic);
    add("vague", "plithogenic", "s=2_positional", "plithogenic-subsumes-vague", graded_to_plithogenic);
    add("neutrosophic", "plithogenic", "s=3_positional", "plithogenic-subsumes-neutrosophic",
        graded_to_plithogenic);
    add("quadripartitioned", "plithogenic", "s=4_positional", "plithogenic-subsumes-quadripartitioned",
        graded_to_plithogenic);
    add("pentapartitioned", "plithogenic", "s=5_positional", "plithogenic-subsumes-pentapartitioned",
        graded_to_plithogenic);
    add("heptapartitioned", "plithogenic", "s=7_positional", "plithogenic-subsumes-heptapartitioned",
        graded_to_plithogenic);

    add("plithogenic", "multiplithogenic", "n=1", "multiplithogenic-generalizes-plithogenic",
        [](const Instance& inst) {
          const auto& ps = payload_as<PlithogenicSet>(inst);
          MultiPlithogenicSet out;
          out.carrier = ps.carrier;
          out.attributes = {ps.spec};
          out.dafs = {ps.daf};
          out.dcf = ps.dcf;
          return make_instance("multiplithogenic", std::move(out));
        });

    add("multiplithogenic", "treeplithogenic", "depth2_tree", "treeplithogenic-generalizes-multiplithogenic",
        [](const Instance& inst) {
          const auto& mps = payload_as<MultiPlithogenicSet>(inst);
          TreePlithogenicSet out;
          out.carrier = mps.carrier;
          out.dcf = mps.dcf;
          for (std::size_t i = 0; i < mps.attributes.size(); ++i) {
            const auto& attr = mps.attributes[i];
            out.tree.add_root_child(attr.name);
            out.node_values[attr.name] = attr.values;
            out.node_dafs[attr.name] = mps.dafs[i];
            for (const auto& v : attr.values) {
              out.tree.add_child(attr.name, v);
              out.node_values[v] = {v};
              DAFTable leaf;
              leaf.dims = mps.dafs[i].dims;
              leaf.ranges = mps.dafs[i].ranges;
              for (const auto& x : mps.carrier) {
                const auto* degrees = mps.dafs[i].find(x, v);
                if (degrees) leaf.entries[{x, v}] = *degrees;
              }
              out.node_dafs[v] = std::move(leaf);
            }
          }
          return make_instance("treeplithogenic", std::move(out));
        });

    add("plithogenic", "hyperplithogenic", "singleton_hdaf", "hyperplithogenic-generalizes-plithogenic",
        [](const Instance& inst) {
          const auto& ps = payload_as<PlithogenicSet>(inst);
          HyperPlithogenicSet out;
          out.carrier = ps.carrier;
          out.spec = ps.spec;
          out.dims = ps.daf.dims;
          out.range = ps.range();
          for (const auto& [key, degrees] : ps.daf.entries)
            out.hdaf[key] = {degrees};
          out.dcf = ps.dcf;
          return make_instance("hyperplithogenic", std::move(out));
        });

    auto widen_plithogenic = [](Regime regime, const std::string& target_id) {
      return [regime, target_id](const Instance& inst) {
        PlithogenicSet ps = payload_as<PlithogenicSet>(inst);
        for (auto& r : ps.daf.ranges) {
          if (regime == Regime::Over || regime == Regime::Off) r.hi = kOmega;
          if (regime == Regime::Under || regime == Regime::Off) r.lo = kPsi;
        }
        return make_instance(target_id, std::move(ps));
      };
    };
    add("plithogenic", "plithogenic_over", "widen(omega=2)", "plithogenic-overset-extension",
        widen_plithogenic(Regime::Over, "plithogenic_over"));
    add("plithogenic", "plithogenic_under", "widen(psi=-1)", "plithogenic-underset-extension",
        widen_plithogenic(Regime::Under, "plithogenic_under"));
    add("plithogenic_over", "plithogenic_off", "widen(psi=-1)", "plithogenic-offset-extension",
        widen_plithogenic(Regime::Off, "plithogenic_off"));
    add("plithogenic_under", "plithogenic_off", "widen(omega=2)", "plithogenic-offset-extension",
        widen_plithogenic(Regime::Off, "plithogenic_off"));

    // Hyper lifts of the single-valued kinds.
    auto single_to_hyper = [](const std::string& target_id) {
      return [target_id](const Instance& inst) {
        return make_instance(target_id,
                             graded_to_hyper(payload_as<GradedSet>(inst)));
      };
    };
    add("crisp", "hypercrisp", "singleton_subset", "hypercrisp-generalizes-crisp",
        single_to_hyper("hypercrisp"));
    add("fuzzy", "hyperfuzzy", "singleton_subset", "hyperfuzzy-generalizes-fuzzy",
        single_to_hyper("hyperfuzzy"));
    add("vague", "hypervague", "singleton_subset", "hypervague-generalizes-vague",
        single_to_hyper("hypervague"));
    add("neutrosophic", "hyperneutrosophic", "singleton_subset", "hyperneutrosophic-generalizes-neutrosophic",
        single_to_hyper("hyperneutrosophic"));

    add("hypercrisp", "hyperfuzzy", "values_in_[0,1]", "hyperfuzzy-generalizes-hypercrisp",
        [](const Instance& inst) {
          HyperGradedSet h = payload_as<HyperGradedSet>(inst);
          h.kind = HyperKind::HyperFuzzy;
          return make_instance("hyperfuzzy", std::move(h));
        });
    add("hyperfuzzy", "hypervague", "pairs(t,0)", "hypervague-generalizes-hyperfuzzy",
        [](const Instance& inst) {
          const auto& h = payload_as<HyperGradedSet>(inst);
          HyperGradedSet out;
          out.universe = h.universe;
          out.kind = HyperKind::HyperVague;
          out.range = h.range;
          for (const auto& [e, points] : h.values) {
            GradePointSet pairs;
            for (const auto& p : points) pairs.push_back({p[0], 0.0});
            out.values[e] = std::move(pairs);
          }
          return make_instance("hypervague", std::move(out));
        });
    add("hyperfuzzy", "subsetvaluedneutrosophic", "I={0},F={0}", "subsetvalued-neutrosophic-generalizes-subsetvalued-fuzzy",
        [](const Instance& inst) {
          const auto& h = payload_as<HyperGradedSet>(inst);
          HyperGradedSet out;
          out.universe = h.universe;
          out.kind = HyperKind::SubsetValuedNeutrosophic;
          out.range = GradeRange::standard();
          for (const auto& [e, points] : h.values) {
            std::vector<double> truths;
            for (const auto& p : points) truths.push_back(p[0]);
            out.values[e] = {truths, {0.0}, {0.0}};
          }
          return make_instance("subsetvaluedneutrosophic", std::move(out));
        });

    auto hyper_to_super = [](const std::string& target_id) {
      return [target_id](const Instance& inst) {
        return make_instance(target_id,
                             lift_pointwise(payload_as<HyperGradedSet>(inst)));
      };
    };
    add("hypercrisp", "superhypercrisp", "lift_pointwise", "superhypercrisp-generalizes-hypercrisp",
        hyper_to_super("superhypercrisp"));
    add("hyperfuzzy", "superhyperfuzzy", "lift_pointwise", "superhyperfuzzy-generalizes-hyperfuzzy",
        hyper_to_super("superhyperfuzzy"));
    add("hypervague", "superhypervague", "lift_pointwise", "superhypervague-generalizes-hypervague",
        hyper_to_super("superhypervague"));
    add("hyperneutrosophic", "superhyperneutrosophic", "lift_pointwise", "superhyperneutrosophic-generalizes-hyperneutrosophic", hyper_to_super("superhyperneutrosophic"));

    auto widen_hyper = [](Regime regime, const std::string& target_id) {
      return [regime, target_id](const Instance& inst) {
        HyperGradedSet h = payload_as<HyperGradedSet>(inst);
        if (regime == Regime::Over || regime == Regime::Off) h.range.hi = kOmega;
        if (regime == Regime::Under || regime == Regime::Off) h.range.lo = kPsi;
        return make_instance(target_id, std::move(h));
      };
    };
    add("hypervague", "hypervague_over", "widen(omega=2)", "hypervague-overset-extension",
        widen_hyper(Regime::Over, "hypervague_over"));
    add("hypervague", "hypervague_under", "widen(psi=-1)", "hypervague-underset-extension",
        widen_hyper(Regime::Under, "hypervague_under"));
    add("hypervague_over", "hypervague_off", "widen(psi=-1)", "hypervague-offset-extension",
        widen_hyper(Regime::Off, "hypervague_off"));
    add("hypervague_under", "hypervague_off", "widen(omega=2)", "hypervague-offset-extension",
        widen_hyper(Regime::Off, "hypervague_off"));

    // Soft family.
    add("crisp", "soft", "single_parameter", "soft-generalizes-crisp",
        [](const Instance& inst) {
          const auto& s = payload_as<GradedSet>(inst);
          SoftSet out;
          out.universe = s.universe;
          ElementSet members;
          for (const auto& [e, comps] : s.grades)
            if (comps[0] > 0.5) members.insert(e);
          out.mapping["e"] = std::move(members);
          return make_instance("soft", std::move(out));
        });
    add("soft", "hypersoft", "n=1,J1=A", "hypersoft-generalizes-soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          HyperSoftSet out;
          out.universe = s.universe;
          AttrDomain domain{"T1", {}};
          for (const auto& [key, _] : s.mapping) domain.values.push_back(key);
          out.domains = {std::move(domain)};
          for (const auto& [key, value] : s.mapping) out.mapping[{key}] = value;
          return make_instance("hypersoft", std::move(out));
        });
    add("soft", "multisoft", "singleton_keys", "multisoft-generalizes-soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          MultiSoftSet out;
          out.universe = s.universe;
          ParameterSet family;
          for (const auto& [key, _] : s.mapping) family.insert(key);
          out.families.emplace_back("E1", std::move(family));
          for (const auto& [key, value] : s.mapping)
            out.mapping[ParameterSet{key}] = value;
          return make_instance("multisoft", std::move(out));
        });
    add("soft", "softexpert", "fixed_expert_opinion", "softexpert-generalizes-soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          SoftExpertSet out;
          out.universe = s.universe;
          out.experts = {"expert1"};
          out.opinions = {"agree"};
          for (const auto& [key, value] : s.mapping) {
            out.parameters.push_back(key);
            out.mapping[{key, "expert1", "agree"}] = value;
          }
          return make_instance("softexpert", std::move(out));
        });
    add("hypersoft", "superhypersoft", "singleton_wrap", "superhypersoft-generalizes-hypersoft",
        [](const Instance& inst) {
          return make_instance(
              "superhypersoft",
              superhypersoft_from_hypersoft(payload_as<HyperSoftSet>(inst)));
        });
    add("soft", "treesoft", "depth1_tree", "treesoft-generalizes-soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          TreeSoftSet out;
          out.universe = s.universe;
          for (const auto& [key, _] : s.mapping) out.tree.add_root_child(key);
          for (const auto& [key, value] : s.mapping)
            out.mapping[NodeKey{key}] = value;
          return make_instance("treesoft", std::move(out));
        });
    add("multisoft", "treesoft", "depth2_tree", "depth2-treesoft-equals-multisoft",
        [](const Instance& inst) {
          return make_instance("treesoft",
                               multisoft_to_treesoft(payload_as<MultiSoftSet>(inst)));
        });
    add("soft", "ranked_soft", "V0=complement,V1=F", "ranked-soft-generalizes-soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          RankedSoftSet out;
          out.universe = s.universe;
          for (const auto& [key, value] : s.mapping)
            out.mapping[key] = {set_difference(s.universe.as_set(), value), value};
          return make_instance("ranked_soft", std::move(out));
        });
    add("hypersoft", "ranked_hypersoft", "V0=complement,V1=F", "ranked-hypersoft-generalizes-hypersoft",
        [](const Instance& inst) {
          const auto& h = payload_as<HyperSoftSet>(inst);
          RankedHyperSoftSet out;
          out.universe = h.universe;
          out.domains = h.domains;
          for (const auto& [key, value] : h.mapping)
            out.mapping[key] = {set_difference(h.universe.as_set(), value), value};
          return make_instance("ranked_hypersoft", std::move(out));
        });
    add("multisoft", "neutrosophic_multisoft", "grades(1,0,0)", "neutrosophic-multisoft-generalizes-multisoft",
        [](const Instance& inst) {
          const auto& m = payload_as<MultiSoftSet>(inst);
          NeutroMultiSoftSet out;
          out.universe = m.universe;
          for (const auto& [key, value] : m.mapping) {
            GradedSoftValue gv;
            gv.members = value;
            for (const auto& e : value) gv.grades[e] = {1.0, 0.0, 0.0};
            out.mapping[key] = std::move(gv);
          }
          return make_instance("neutrosophic_multisoft", std::move(out));
        });
    add("treesoft", "neutrosophic_treesoft", "grades(1,0,0)", "neutrosophic-treesoft-generalizes-treesoft",
        [](const Instance& inst) {
          const auto& t = payload_as<TreeSoftSet>(inst);
          NeutroTreeSoftSet out;
          out.universe = t.universe;
          for (const auto& [key, value] : t.mapping) {
            GradedSoftValue gv;
            gv.members = value;
            for (const auto& e : value) gv.grades[e] = {1.0, 0.0, 0.0};
            out.mapping[key] = std::move(gv);
          }
          return make_instance("neutrosophic_treesoft", std::move(out));
        });
    add("bijective_soft", "soft", "forget_bijectivity", "soft-relaxes-bijective-soft",
        [](const Instance& inst) {
          return make_instance("soft", payload_as<SoftSet>(inst));
        });
    add("bijective_soft", "bijective_treesoft", "depth1_tree", "bijective-treesoft-generalizes-bijective-soft",
        [](const Instance& inst) {
          const auto& s = payload_as<SoftSet>(inst);
          TreeSoftSet out;
          out.universe = s.universe;
          for (const auto& [key, _] : s.mapping) out.tree.add_root_child(key);
          for (const auto& [key, value] : s.mapping)
            out.mapping[NodeKey{key}] = value;
          return make_instance("bijective_treesoft", std::move(out));
        });
    add("bijective_treesoft", "treesoft", "relax_disjointness", "treesoft-relaxes-bijective-treesoft",
        [](const Instance& inst) {
          return make_instance("treesoft",
                               bijective_relax(payload_as<TreeSoftSet>(inst)));
        });

    // Graph chain.
    auto graph_embed = [](GradeKind target, const std::string& target_id) {
      return [target, target_id](const Instance& inst) {
        return make_instance(target_id,
                             embed_graph(payload_as<GradedGraph>(inst), target));
      };
    };
    add("crisp_graph", "fuzzy_graph", "grades=1", "fuzzy-graph-generalizes-crisp-graph",
        [](const Instance& inst) {
          const auto& g = payload_as<CrispGraph>(inst);
          GradedGraph out;
          out.base = g;
          out.kind = GradeKind::Fuzzy;
          out.ranges = standard_ranges(GradeKind::Fuzzy);
          for (const auto& v : g.vertices) out.vertex_grades[v] = {1.0};
          for (const auto& e : g.edges) out.edge_grades[e] = {1.0};
          return make_instance("fuzzy_graph", std::move(out));
        });
    add("fuzzy_graph", "intuitionistic_graph", "nu=0", "intuitionistic-graph-generalizes-fuzzy-graph",
        graph_embed(GradeKind::IntuitionisticFuzzy, "intuitionistic_graph"));
    add("intuitionistic_graph", "neutrosophic_graph", "I=1-mu-nu", "neutrosophic-graph-generalizes-intuitionistic-graph",
        graph_embed(GradeKind::Neutrosophic, "neutrosophic_graph"));
    add("pentapartitioned_graph", "heptapartitioned_graph", "M=K=0,I=R", "heptapartitioned-graph-refines-pentapartitioned-graph", graph_embed(GradeKind::Heptapartitioned,
                                "heptapartitioned_graph"));
    add("fuzzy_graph", "hyperfuzzy_graph", "singleton_subsets", "hyperfuzzy-graph-generalizes-fuzzy-graph",
        [](const Instance& inst) {
          const auto& g = payload_as<GradedGraph>(inst);
          HyperFuzzyGraph out;
          out.base = g.base;
          out.range = g.ranges.front();
          for (const auto& [v, comps] : g.vertex_grades)
            out.vertex_sets[v] = {comps[0]};
          for (const auto& [e, comps] : g.edge_grades)
            out.edge_sets[e] = {comps[0]};
          return make_instance("hyperfuzzy_graph", std::move(out));
        });

    // Graded graph -> plithogenic graph (dims = arity, positional).
    auto graph_to_plithogenic = [](bool general, const std::string& target_id,
                                   GradeKind expected) {
      return [general, target_id, expected](const Instance& inst) {
        const auto& g = payload_as<GradedGraph>(inst);
        if (g.kind != expected)
          throw DomainError("WrongKind", "unexpected source grade kind");
        PlithogenicGraph out;
        out.base = g.base;
        out.general_flag = general;
        out.dims = arity(g.kind);
        out.cdims = 1;
        out.range = g.ranges.front();
        out.vertex_attr = "membership";
        out.vertex_values = {"m"};
        out.edge_attr = "membership";
        out.edge_values = {{"m", "m"}};
        for (const auto& [v, comps] : g.vertex_grades) out.adf[{v, "m"}] = comps;
        for (const auto& [e, comps] : g.edge_grades)
          out.bdf[{e, {"m", "m"}}] = comps;
        out.acf = DCFMatrix::zero({"m"});
        out.bcf[{{"m", "m"}, {"m", "m"}}] = {0.0};
        return make_instance(target_id, std::move(out));
      };
    };
    add("fuzzy_graph", "plithogenic_graph", "s=1_positional", "plithogenic-graph-subsumes-fuzzy-graph",
        graph_to_plithogenic(false, "plithogenic_graph", GradeKind::Fuzzy));
    add("neutrosophic_graph", "general_plithogenic_graph", "s=3_positional", "general-plithogenic-graph-subsumes-neutrosophic-graph",
        graph_to_plithogenic(true, "general_plithogenic_graph",
                             GradeKind::Neutrosophic));
    add("quadripartitioned_graph", "general_plithogenic_graph", "s=4_positional", "general-plithogenic-graph-subsumes-quadripartitioned-graph",
        graph_to_plithogenic(true, "general_plithogenic_graph",
                             GradeKind::Quadripartitioned));
    add("pentapartitioned_graph", "general_plithogenic_graph", "s=5_positional", "general-plithogenic-graph-subsumes-pentapartitioned-graph",
        graph_to_plithogenic(true, "general_plithogenic_graph",
                             GradeKind::Pentapartitioned));
    add("heptapartitioned_graph", "general_plithogenic_graph", "s=7_positional", "general-plithogenic-graph-subsumes-heptapartitioned-graph",
        graph_to_plithogenic(true, "general_plithogenic_graph",
                             GradeKind::Heptapartitioned));
    add("doublevalued_graph", "general_plithogenic_graph", "s=4_dvns", "general-plithogenic-graph-subsumes-doublevalued-graph",
        graph_to_plithogenic(true, "general_plithogenic_graph",
                             GradeKind::DoubleValued));

    // Single -> multi graphs.
    add("neutrosophic_graph", "multineutrosophic_graph", "singleton_lists", "multineutrosophic-graph-generalizes-neutrosophic-graph", [](const Instance& inst) {
          const auto& g = payload_as<GradedGraph>(inst);
          MultiGradedGraph out;
          out.base = g.base;
          out.kind = MultiGraphKind::MultiNeutrosophic;
          for (const auto& [v, comps] : g.vertex_grades) {
            MultiGrade m;
            m.truths = {comps[0]};
            m.indeterminacies = {comps[1]};
            m.falsities = {comps[2]};
            out.vertex_multi[v] = std::move(m);
          }
          for (const auto& [e, comps] : g.edge_grades) {
            MultiGrade m;
            m.truths = {comps[0]};
            m.indeterminacies = {comps[1]};
            m.falsities = {comps[2]};
            out.edge_multi[e] = std::move(m);
          }
          return make_instance("multineutrosophic_graph", std::move(out));
        });
    auto graph_to_multituple = [](MultiGraphKind kind, const std::string& target_id) {
      return [kind, target_id](const Instance& inst) {
        const auto& g = payload_as<GradedGraph>(inst);
        MultiGradedGraph out;
        out.base = g.base;
        out.kind = kind;
        for (const auto& [v, comps] : g.vertex_grades)
          out.vertex_tuples[v] = {comps};
        for (const auto& [e, comps] : g.edge_grades) out.edge_tuples[e] = {comps};
        return make_instance(target_id, std::move(out));
      };
    };
    add("quadripartitioned_graph", "multiquadripartitioned_graph", "singleton_lists", "multiquadripartitioned-graph-generalizes-quadripartitioned-graph",
        graph_to_multituple(MultiGraphKind::MultiQuadripartitioned,
                            "multiquadripartitioned_graph"));
    add("pentapartitioned_graph", "multipentapartitioned_graph", "singleton_lists", "multipentapartitioned-graph-generalizes-pentapartitioned-graph",
        graph_to_multituple(MultiGraphKind::MultiPentapartitioned,
                            "multipentapartitioned_graph"));

    // Graph regime widenings.
    auto widen_graph = [](Regime regime, const std::string& target_id) {
      return [regime, target_id](const Instance& inst) {
        GradedGraph g = payload_as<GradedGraph>(inst);
        for (auto& r : g.ranges) {
          if (regime == Regime::Over || regime == Regime::Off) r.hi = kOmega;
          if (regime == Regime::Under || regime == Regime::Off) r.lo = kPsi;
        }
        return make_instance(target_id, std::move(g));
      };
    };
    add("neutrosophic_graph", "neutrosophic_graph_over", "widen(omega=2)", "neutrosophic-overgraph-extension", widen_graph(Regime::Over, "neutrosophic_graph_over"));
    add("neutrosophic_graph", "neutrosophic_graph_under", "widen(psi=-1)", "neutrosophic-undergraph-extension", widen_graph(Regime::Under, "neutrosophic_graph_under"));
    add("neutrosophic_graph_over", "neutrosophic_graph_off", "widen(psi=-1)", "neutrosophic-offgraph-extension", widen_graph(Regime::Off, "neutrosophic_graph_off"));
    add("neutrosophic_graph_under", "neutrosophic_graph_off", "widen(omega=2)", "neutrosophic-offgraph-extension", widen_graph(Regime::Off, "neutrosophic_graph_off"));
    add("fuzzy_graph", "fuzzy_graph_over", "widen(omega=2)", "fuzzy-overgraph-extension",
        widen_graph(Regime::Over, "fuzzy_graph_over"));
    add("fuzzy_graph", "fuzzy_graph_under", "widen(psi=-1)", "fuzzy-undergraph-extension",
        widen_graph(Regime::Under, "fuzzy_graph_under"));
    add("fuzzy_graph_over", "fuzzy_graph_off", "widen(psi=-1)", "fuzzy-offgraph-extension",
        widen_graph(Regime::Off, "fuzzy_graph_off"));
    add("fuzzy_graph_under", "fuzzy_graph_off", "widen(omega=2)", "fuzzy-offgraph-extension",
        widen_graph(Regime::Off, "fuzzy_graph_off"));
    add("quadripartitioned_graph", "quadripartitioned_graph_off", "widen(psi=-1,omega=2)", "quadripartitioned-offgraph-extension",
        widen_graph(Regime::Off, "quadripartitioned_graph_off"));
    add("pentapartitioned_graph", "pentapartitioned_graph_off", "widen(psi=-1,omega=2)", "pentapartitioned-offgraph-extension",
        widen_graph(Regime::Off, "pentapartitioned_graph_off"));

    // Soft graphs.
    add("crisp_graph", "soft_graph", "single_parameter", "soft-graph-generalizes-crisp-graph",
        [](const Instance& inst) {
          const auto& g = payload_as<CrispGraph>(inst);
          SoftGraph out;
          out.base = g;
          out.mapping[ParameterSet{"e"}] = {g.vertices.as_set(), g.edges};
          return make_instance("soft_graph", std::move(out));
        });
    add("soft_graph", "multisoft_graph", "keys_as_sets", "multisoft-graph-generalizes-soft-graph",
        [](const Instance& inst) {
          return make_instance("multisoft_graph", payload_as<SoftGraph>(inst));
        });
    add("soft_graph", "neutrosophic_soft_graph", "grades(1,0,0)", "neutrosophic-soft-graph-generalizes-soft-graph",
        [](const Instance& inst) {
          const auto& sg = payload_as<SoftGraph>(inst);
          NeutroSoftGraph out;
          out.base = sg.base;
          for (const auto& [key, value] : sg.mapping) {
            NeutroSoftGraph::Layer layer;
            layer.vertices = value.first;
            layer.edges = value.second;
            for (const auto& v : layer.vertices)
              layer.vertex_grades[v] = {1.0, 0.0, 0.0};
            for (const auto& e : layer.edges)
              layer.edge_grades[e] = {1.0, 0.0, 0.0};
            out.mapping[join(key, "+")] = std::move(layer);
          }
          return make_instance("neutrosophic_soft_graph", std::move(out));
        });
    auto widen_nsg = [](Regime regime, const std::string& target_id) {
      return [regime, target_id](const Instance& inst) {
        NeutroSoftGraph g = payload_as<NeutroSoftGraph>(inst);
        if (regime == Regime::Over || regime == Regime::Off) g.range.hi = kOmega;
        if (regime == Regime::Under || regime == Regime::Off) g.range.lo = kPsi;
        return make_instance(target_id, std::move(g));
      };
    };
    add("neutrosophic_soft_graph", "neutrosophic_soft_graph_over", "widen(omega=2)", "neutrosophic-soft-overgraph-extension",
        widen_nsg(Regime::Over, "neutrosophic_soft_graph_over"));
    add("neutrosophic_soft_graph", "neutrosophic_soft_graph_under", "widen(psi=-1)", "neutrosophic-soft-undergraph-extension",
        widen_nsg(Regime::Under, "neutrosophic_soft_graph_under"));
    add("neutrosophic_soft_graph_over", "neutrosophic_soft_graph_off", "widen(psi=-1)", "neutrosophic-soft-offgraph-extension",
        widen_nsg(Regime::Off, "neutrosophic_soft_graph_off"));

    // Hypergraphs.
    add("crisp_graph", "hypergraph", "edges_as_pairs", "hypergraph-generalizes-graph",
        [](const Instance& inst) {
          return make_instance("hypergraph",
                               graph_to_hypergraph(payload_as<CrispGraph>(inst)));
        });
    add("hypergraph", "superhypergraph", "singleton_supervertices", "superhypergraph-generalizes-hypergraph",
        [](const Instance& inst) {
          return make_instance(
              "superhypergraph",
              hypergraph_to_superhypergraph(payload_as<Hypergraph>(inst)));
        });
    auto neutro_graph_to_hyper = [](Regime regime, const std::string& target_id) {
      return [regime, target_id](const Instance& inst) {
        const auto& g = payload_as<GradedGraph>(inst);
        NeutroHypergraph out;
        out.shape.vertices = g.base.vertices;
        out.range = range_for(regime);
        for (const auto& [v, comps] : g.vertex_grades)
          out.vertex_grades[v] = {comps[0], comps[1], comps[2]};
        for (const auto& e : g.base.edges) {
          out.shape.hyperedges.push_back({e.u, e.v});
          const auto& comps = g.edge_grades.at(e);
          out.edge_grades.push_back({comps[0], comps[1], comps[2]});
        }
        return make_instance(target_id, std::move(out));
      };
    };
    add("neutrosophic_graph_over", "neutrosophic_hypergraph_over", "edges_as_pairs", "neutrosophic-overhypergraph-generalizes-overgraph",
        neutro_graph_to_hyper(Regime::Over, "neutrosophic_hypergraph_over"));
    add("neutrosophic_graph_under", "neutrosophic_hypergraph_under", "edges_as_pairs", "neutrosophic-underhypergraph-generalizes-undergraph",
        neutro_graph_to_hyper(Regime::Under, "neutrosophic_hypergraph_under"));
    add("neutrosophic_graph_off", "neutrosophic_hypergraph_off", "edges_as_pairs", "neutrosophic-offhypergraph-generalizes-offgraph",
        neutro_graph_to_hyper(Regime::Off, "neutrosophic_hypergraph_off"));

    // Annotated graphs.
    add("weighted_graph", "hyperweighted_graph", "singleton_weights", "hyperweighted-graph-generalizes-weighted-graph",
        [](const Instance& inst) {
          return make_instance("hyperweighted_graph",
                               annotated_lift(payload_as<WeightedGraph>(inst)));
        });
    add("hyperweighted_graph", "superhyperweighted_graph", "singleton_hyperweights", "superhyperweighted-graph-generalizes-hyperweighted-graph", [](const Instance& inst) {
          return make_instance(
              "superhyperweighted_graph",
              annotated_lift(payload_as<HyperWeightedGraph>(inst)));
        });
    add("labeled_graph", "hyperlabeled_graph", "singleton_labels", "hyperlabeled-graph-generalizes-labeled-graph",
        [](const Instance& inst) {
          return make_instance("hyperlabeled_graph",
                               annotated_lift(payload_as<LabeledGraph>(inst)));
        });
    add("hyperlabeled_graph", "superhyperlabeled_graph", "singleton_hyperlabels", "superhyperlabeled-graph-generalizes-hyperlabeled-graph", [](const Instance& inst) {
          return make_instance(
              "superhyperlabeled_graph",
              annotated_lift(payload_as<HyperLabeledGraph>(inst)));
        });

    return reg;
  }();
  return registry;
}

}  // namespace uncertain
