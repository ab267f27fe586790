#include "euler/verify.hpp"

#include <algorithm>
#include <sstream>

#include "euler/deciders.hpp"

namespace euler {

namespace {

constexpr std::size_t kMaxReproducers = 8;

}  // namespace

void PropertyReport::fail(std::string reproducer) {
  if (failures.size() < kMaxReproducers) {
    failures.push_back({std::move(reproducer)});
  } else {
    failures.push_back({"(reproducer omitted)"});
  }
}

std::string PropertyReport::summary_line() const {
  std::ostringstream out;
  out << "PROP " << name << " " << (passed() ? "PASS" : "FAIL")
      << " checked=" << checked << " failures=" << failures.size();
  return out.str();
}

std::string PropertyReport::render() const {
  std::ostringstream out;
  out << summary_line() << "\n";
  for (std::size_t i = 0; i < failures.size() && i < kMaxReproducers; ++i) {
    out << "  failure: " << failures[i].reproducer << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Corpus.

namespace {

std::string graph_repr(const FiniteMultigraph& H) {
  std::ostringstream out;
  out << "V={";
  bool first = true;
  for (VertexId v : H.vertices()) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << "} E={";
  first = true;
  for (const auto& [id, inc] : H.edges()) {
    out << (first ? "" : ",") << id << ":(" << inc.u << "," << inc.v << ")";
    first = false;
  }
  out << "}";
  return out.str();
}

void extend_corpus(std::uint64_t k,
                   const std::vector<std::pair<VertexId, VertexId>>& pairs,
                   std::vector<std::size_t>& chosen, std::size_t next_pair,
                   std::size_t more, std::vector<FiniteMultigraph>& out) {
  if (more == 0) {
    FiniteMultigraph g;
    for (VertexId v = 0; v < k; ++v) g.add_vertex(v);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      auto [u, v] = pairs[chosen[i]];
      g.add_edge(Incidence::make(static_cast<EdgeId>(i), u, v));
    }
    if (components(g).size() == 1) out.push_back(std::move(g));
    return;
  }
  for (std::size_t p = next_pair; p < pairs.size(); ++p) {
    chosen.push_back(p);
    extend_corpus(k, pairs, chosen, p, more - 1, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<FiniteMultigraph> finite_corpus() {
  std::vector<FiniteMultigraph> out;
  for (std::uint64_t k = 1; k <= 4; ++k) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < k; ++u) {
      for (VertexId v = u; v < k; ++v) pairs.emplace_back(u, v);
    }
    for (std::size_t m = 0; m <= 5; ++m) {
      std::vector<std::size_t> chosen;
      extend_corpus(k, pairs, chosen, 0, m, out);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prefix checks.

PropertyReport check_prefix(const GraphDescription& g,
                            const FinitePath& prefix, StreamMode mode) {
  PropertyReport report;
  report.name = "check_prefix";
  ++report.checked;
  if (auto why = path_violation(g.oracle(), prefix)) {
    report.fail(*why + " in " + to_string(prefix));
    return report;
  }
  ++report.checked;
  StepBudgetOutcome outcome =
      mode == StreamMode::OneWay ? is_right_extensible(g, prefix)
                                 : is_bi_extensible(g, prefix);
  if (outcome.is_exhausted()) {
    report.fail("decider exhausted on " + to_string(prefix));
  } else if (!outcome.answer()) {
    report.fail("decider rejected " + to_string(prefix));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Finite Euler crosschecks.

namespace {

std::vector<VertexId> odd_list(const FiniteMultigraph& H) {
  std::vector<VertexId> odd;
  for (VertexId v : H.vertices()) {
    if (H.degree(v) % 2 == 1) odd.push_back(v);
  }
  return odd;
}

bool valid_euler_path(const FiniteMultigraph& H, const FinitePath& p,
                      std::optional<VertexId> from,
                      std::optional<VertexId> to) {
  if (p.length() != H.edge_count()) return false;
  if (from && p.initial_vertex() != *from) return false;
  if (to && p.final_vertex() != *to) return false;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (!H.has_edge(p.edges()[i])) return false;
    const Incidence& inc = H.incidence(p.edges()[i]);
    VertexId a = p.vertices()[i], b = p.vertices()[i + 1];
    if (!inc.touches(a) || inc.other(a) != b) return false;
  }
  return true;
}

void crosscheck_query(const FiniteMultigraph& H, bool parity_predicts,
                      std::optional<VertexId> from, std::optional<VertexId> to,
                      const std::string& label, PropertyReport& report) {
  ++report.checked;
  EulerOutcome built = eulerian_finite(H, from, to);
  bool brute = !brute_force_euler(H, from, to).empty();
  if (built.feasible() != parity_predicts || brute != parity_predicts) {
    std::ostringstream why;
    why << graph_repr(H) << " query " << label
        << ": parity=" << parity_predicts << " built=" << built.feasible()
        << " brute=" << brute;
    report.fail(why.str());
    return;
  }
  if (built.feasible() && !valid_euler_path(H, *built.path, from, to)) {
    report.fail(graph_repr(H) + " query " + label +
                ": constructed path invalid: " + to_string(*built.path));
  }
}

}  // namespace

PropertyReport crosscheck_euler(const FiniteMultigraph& H) {
  if (H.edge_count() > 5) {
    throw DomainError("crosscheck_euler: more than 5 edges");
  }
  PropertyReport report;
  report.name = "euler_equivalence";
  bool connected = is_connected(H);
  bool nonempty = H.edge_count() > 0;
  std::vector<VertexId> odd = odd_list(H);

  bool circuit_ok = connected && nonempty && odd.empty();
  for (VertexId v : H.vertices()) {
    crosscheck_query(H, circuit_ok, v, v,
                     "circuit@" + std::to_string(v), report);
  }
  for (VertexId u : H.vertices()) {
    for (VertexId w : H.vertices()) {
      if (u == w) continue;
      bool ok = connected && nonempty && odd.size() == 2 &&
                ((odd[0] == u && odd[1] == w) || (odd[0] == w && odd[1] == u));
      crosscheck_query(H, ok, u, w,
                       std::to_string(u) + "->" + std::to_string(w), report);
    }
  }
  bool any_ok = connected && nonempty && (odd.empty() || odd.size() == 2);
  crosscheck_query(H, any_ok, {}, {}, "any", report);
  return report;
}

PropertyReport euler_equivalence_suite() {
  PropertyReport report;
  report.name = "euler_equivalence";
  for (const FiniteMultigraph& H : finite_corpus()) {
    PropertyReport one = crosscheck_euler(H);
    report.checked += one.checked;
    for (auto& f : one.failures) report.fail(f.reproducer);
  }
  return report;
}

PropertyReport handshake_suite() {
  PropertyReport report;
  report.name = "handshake";
  auto check = [&report](const FiniteMultigraph& H, const char* label) {
    ++report.checked;
    if (!handshake_check(H)) {
      report.fail(std::string(label) + ": " + graph_repr(H));
    }
  };
  for (const FiniteMultigraph& H : finite_corpus()) {
    check(H, "corpus graph");
    EdgeSet all = H.edge_ids();
    check(induced(all, H), "induced full");
    std::vector<EdgeId> ids(all.begin(), all.end());
    // All removal subsets (at most 2^5 per graph).
    for (std::uint64_t mask = 0; mask < (1ull << ids.size()); ++mask) {
      EdgeSet subset;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (mask & (1ull << i)) subset.insert(ids[i]);
      }
      check(remove_edges(H, subset), "removed subset");
      check(induced(subset, H), "induced subset");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Stream/decider consistency.

PropertyReport stream_consistency_suite(std::uint64_t stages) {
  PropertyReport report;
  report.name = "stream_consistency";
  struct Combo {
    GraphDescription graph;
    StreamMode mode;
  };
  std::vector<Combo> combos;
  combos.push_back({family_ray(), StreamMode::OneWay});
  combos.push_back({family_loop_star(), StreamMode::OneWay});
  combos.push_back({family_loop_star(), StreamMode::TwoWay});
  combos.push_back({family_line(), StreamMode::TwoWay});
  combos.push_back({family_fat_ray(), StreamMode::TwoWay});

  for (auto& combo : combos) {
    const std::string tag = combo.graph.metadata().name +
                            (combo.mode == StreamMode::OneWay ? "/one-way"
                                                              : "/two-way");
    EulerStream stream = combo.mode == StreamMode::OneWay
                             ? EulerStream::one_way(combo.graph)
                             : EulerStream::two_way(combo.graph);
    for (std::uint64_t n = 0; n < stages; ++n) {
      stream.advance_stage();
      PropertyReport prefix_report =
          check_prefix(combo.graph, stream.prefix(), combo.mode);
      report.checked += prefix_report.checked;
      for (auto& f : prefix_report.failures) {
        report.fail(tag + " stage " + std::to_string(n) + ": " + f.reproducer);
      }
      ++report.checked;
      for (std::uint64_t j = 0; j <= n; ++j) {
        if (!stream.prefix().visits_edge(stream.edge_by_rank(j))) {
          report.fail(tag + " stage " + std::to_string(n) +
                      ": target edge rank " + std::to_string(j) +
                      " not covered");
          break;
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hand-derived decider cases.

namespace {

class SpurRayOracle final : public GraphOracle {
 public:
  // Edge ids: 2k is the ray edge {k, k+1}; id 1 is the extra parallel edge
  // between 0 and 1; other odd ids are not edges.
  bool is_vertex(std::uint64_t) const override { return true; }
  bool is_edge(std::uint64_t n) const override {
    return n % 2 == 0 || n == 1;
  }
  Incidence incidence(EdgeId e) const override {
    if (e == 1) return Incidence::make(e, 0, 1);
    VertexId k = e / 2;
    return Incidence::make(e, k, k + 1);
  }
  Degree degree(VertexId v) const override {
    if (v == 0) return Degree::finite(2);
    if (v == 1) return Degree::finite(3);
    return Degree::finite(2);
  }
};

}  // namespace

GraphDescription spur_ray() {
  return {std::make_shared<SpurRayOracle>(),
          GraphMetadata{"spur_ray", true, true, false}};
}

PropertyReport decider_ground_truth_suite() {
  PropertyReport report;
  report.name = "decider_ground_truth";
  auto expect = [&report](bool condition, const std::string& what) {
    ++report.checked;
    if (!condition) report.fail(what);
  };

  GraphDescription ray = family_ray();
  GraphDescription line = family_line();
  GraphDescription loop_star = family_loop_star();
  GraphDescription fat_ray = family_fat_ray();
  GraphDescription spur = spur_ray();

  // Survivor listings.
  expect(incident_survivors(ray.oracle(), {1}) ==
             std::set<VertexId>{1, 2},
         "survivors(ray, {e1}) != {1,2}");
  expect(incident_survivors(ray.oracle(), {0}) == std::set<VertexId>{1},
         "survivors(ray, {e0}) != {1}");
  expect(incident_survivors(loop_star.oracle(), {0}) ==
             std::set<VertexId>{0},
         "survivors(loop_star, {e0}) != {0}");

  // Finite-component semidecision.
  {
    FiniteComponentSemidecider sd(ray, {1});
    while (sd.status() == SemideciderStatus::Running &&
           sd.steps_taken() < 100000) {
      sd.step();
    }
    expect(sd.status() == SemideciderStatus::Halted,
           "finite-component semidecider did not halt on (ray, {e1})");
    if (sd.witness()) {
      expect(sd.witness()->vertices() == std::set<VertexId>{0, 1} &&
                 sd.witness()->edge_ids() == EdgeSet{0},
             "(ray, {e1}) witness is not the component {0,1} with edge 0");
    }
  }
  {
    FiniteComponentSemidecider sd(ray, {0});
    for (int i = 0; i < 10000; ++i) sd.step();
    expect(sd.status() == SemideciderStatus::Running,
           "finite-component semidecider halted on (ray, {e0})");
  }
  {
    FiniteComponentSemidecider sd(fat_ray, {4, 5});
    while (sd.status() == SemideciderStatus::Running &&
           sd.steps_taken() < 100000) {
      sd.step();
    }
    expect(sd.status() == SemideciderStatus::Halted,
           "finite-component semidecider did not halt on (fat_ray, {A2,B2})");
    if (sd.witness()) {
      expect(sd.witness()->vertices() == std::set<VertexId>{0, 1, 2} &&
                 sd.witness()->edge_ids() == EdgeSet{0, 1, 2, 3},
             "(fat_ray, {A2,B2}) witness is not {0,1,2}");
    }
  }

  // One-end connectivity decisions.
  expect(connectivity_decider_one_end(ray, {0}, 100000) ==
             StepBudgetOutcome::decided(true),
         "connectivity(ray, {e0}) != true");
  expect(connectivity_decider_one_end(ray, {1}, 100000) ==
             StepBudgetOutcome::decided(false),
         "connectivity(ray, {e1}) != false");
  expect(connectivity_decider_one_end(loop_star, {0, 5}, 100000) ==
             StepBudgetOutcome::decided(true),
         "connectivity(loop_star, {e0,e5}) != true");

  // Distinguished vertices.
  expect(is_distinguished(ray, 0), "ray vertex 0 not distinguished");
  expect(!is_distinguished(ray, 1), "ray vertex 1 distinguished");
  expect(is_distinguished(loop_star, 0),
         "loop_star vertex 0 not distinguished");

  // Right extensibility.
  expect(is_right_extensible(ray, FinitePath(0, {0, 1, 2}, {0, 1})) ==
             StepBudgetOutcome::decided(true),
         "ray [0-e0-1-e1-2] not right-extensible");
  expect(is_right_extensible(ray, FinitePath(0, {1, 2}, {1})) ==
             StepBudgetOutcome::decided(false),
         "ray [1-e1-2] right-extensible");
  expect(is_right_extensible(spur, FinitePath(0, {1, 2}, {2})) ==
             StepBudgetOutcome::decided(false),
         "spur-ray [1-2] right-extensible despite disconnection");
  // In the spur-ray case the two endpoint conditions do hold.
  expect(is_distinguished(spur, 1), "spur-ray vertex 1 not distinguished");
  expect(incident_survivors(spur.oracle(), {2}).count(2) == 1,
         "spur-ray final vertex not a survivor");

  // Bi extensibility.
  expect(is_bi_extensible(line, FinitePath(0, {0, 2}, {0})) ==
             StepBudgetOutcome::decided(true),
         "line [0-f0-2] not bi-extensible");
  expect(is_bi_extensible(loop_star, FinitePath(0, {0, 0}, {0})) ==
             StepBudgetOutcome::decided(true),
         "loop_star loop circuit not bi-extensible");
  expect(is_bi_extensible(fat_ray, FinitePath(0, {1, 2, 1}, {2, 3})) ==
             StepBudgetOutcome::decided(false),
         "fat_ray circuit [1-A1-2-B1-1] bi-extensible");

  // Line coding spot checks.
  expect(line.oracle().incidence(1) == Incidence::make(1, 0, 1),
         "line incidence(f_{-1}) != {0,1}");
  expect(line.oracle().degree(0) == Degree::finite(2),
         "line degree(zeta(0)) != 2");

  return report;
}

std::vector<PropertyReport> run_all_suites(std::uint64_t stream_stages) {
  std::vector<PropertyReport> reports;
  reports.push_back(euler_equivalence_suite());
  reports.push_back(handshake_suite());
  reports.push_back(stream_consistency_suite(stream_stages));
  reports.push_back(decider_ground_truth_suite());
  return reports;
}

}  // namespace euler
