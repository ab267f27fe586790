#include "euler/deciders.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <vector>

#include "euler/detail/walk_enum.hpp"

namespace euler {

namespace {

std::atomic<std::uint64_t> g_exclusivity_violations{0};

[[noreturn]] void report_exclusivity_violation() {
  g_exclusivity_violations.fetch_add(1);
  throw std::logic_error(
      "dovetail exclusivity violated: both semideciders halted");
}

void require_edges_exist(const GraphOracle& g, const EdgeSet& E) {
  for (EdgeId e : E) {
    if (!g.is_edge(e)) {
      throw DomainError("edge " + std::to_string(e) + " is not in the graph");
    }
  }
}

}  // namespace

std::uint64_t exclusivity_violation_count() {
  return g_exclusivity_violations.load();
}

std::set<VertexId> incident_survivors(const GraphOracle& g, const EdgeSet& E) {
  require_edges_exist(g, E);
  std::set<VertexId> endpoints;
  for (EdgeId e : E) {
    Incidence inc = g.incidence(e);
    endpoints.insert(inc.u);
    endpoints.insert(inc.v);
  }
  std::set<VertexId> survivors;
  for (VertexId v : endpoints) {
    Degree d = g.degree(v);
    if (d.is_infinite()) {
      survivors.insert(v);
      continue;
    }
    for (EdgeId e : incident_edges(g, v)) {
      if (!E.count(e)) {
        survivors.insert(v);
        break;
      }
    }
  }
  return survivors;
}

bool is_distinguished(const GraphOracle& g, bool has_odd_vertex, VertexId v) {
  if (!g.is_vertex(v)) {
    throw DomainError("is_distinguished: " + std::to_string(v) +
                      " is not a vertex");
  }
  Degree d = g.degree(v);
  if (has_odd_vertex) return d.is_finite() && d.finite_value() % 2 == 1;
  return d.is_infinite();
}

bool is_distinguished(const GraphDescription& g, VertexId v) {
  return is_distinguished(g.oracle(), g.metadata().has_odd_vertex, v);
}

// ---------------------------------------------------------------------------
// Finite-component semidecider.

struct FiniteComponentSemidecider::Impl {
  Impl(GraphDescription g, EdgeSet E, VertexId v)
      : graph(std::move(g)), removed(std::move(E)), base_vertex(v) {}

  GraphDescription graph;
  EdgeSet removed;
  VertexId base_vertex;
  std::uint64_t diagonal = 0;
  std::uint64_t radius = 0;  // current r; s = diagonal - radius
  std::uint64_t steps = 0;
  std::optional<FiniteMultigraph> witness;
  std::uint64_t halt_r = 0, halt_s = 0;
};

FiniteComponentSemidecider::FiniteComponentSemidecider(GraphDescription graph,
                                                       EdgeSet E) {
  if (E.empty()) {
    throw DomainError("finite-component semidecider needs a nonempty edge set");
  }
  require_edges_exist(graph.oracle(), E);
  VertexId least = UINT64_MAX;
  for (EdgeId e : E) {
    Incidence inc = graph.oracle().incidence(e);
    least = std::min({least, inc.u, inc.v});
  }
  impl_ = std::make_unique<Impl>(std::move(graph), std::move(E), least);
}

FiniteComponentSemidecider::~FiniteComponentSemidecider() = default;
FiniteComponentSemidecider::FiniteComponentSemidecider(
    FiniteComponentSemidecider&&) noexcept = default;
FiniteComponentSemidecider& FiniteComponentSemidecider::operator=(
    FiniteComponentSemidecider&&) noexcept = default;

SemideciderStatus FiniteComponentSemidecider::status() const {
  return impl_->witness ? SemideciderStatus::Halted
                        : SemideciderStatus::Running;
}

std::uint64_t FiniteComponentSemidecider::steps_taken() const {
  return impl_->steps;
}

const std::optional<FiniteMultigraph>& FiniteComponentSemidecider::witness()
    const {
  return impl_->witness;
}

std::pair<std::uint64_t, std::uint64_t> FiniteComponentSemidecider::
    halt_params() const {
  if (!impl_->witness) throw DomainError("halt_params() while running");
  return {impl_->halt_r, impl_->halt_s};
}

SemideciderStatus FiniteComponentSemidecider::step() {
  Impl& im = *impl_;
  if (im.witness) return SemideciderStatus::Halted;
  ++im.steps;
  std::uint64_t r = im.radius;
  std::uint64_t s = im.diagonal - im.radius;
  if (im.radius == im.diagonal) {
    ++im.diagonal;
    im.radius = 0;
  } else {
    ++im.radius;
  }

  const GraphOracle& g = im.graph.oracle();
  FiniteMultigraph b = ball(g, im.base_vertex, r, s);
  FiniteMultigraph cut = remove_edges(b, im.removed);
  for (const FiniteMultigraph& comp : components(cut)) {
    bool qualifies = true;
    for (VertexId v : comp.vertices()) {
      Degree d = g.degree(v);
      // The component is a true component of G - E once every vertex has
      // finite degree and the ball already holds all of its incident edges.
      if (!d.is_finite() || b.degree(v) != d.finite_value()) {
        qualifies = false;
        break;
      }
    }
    if (qualifies) {
      im.witness = comp;
      im.halt_r = r;
      im.halt_s = s;
      return SemideciderStatus::Halted;
    }
  }
  return SemideciderStatus::Running;
}

// ---------------------------------------------------------------------------
// Exhaustive path search joining survivors, as a resumable step machine.

namespace {

// Work quantum for one search step: at most one candidate walk is examined;
// bookkeeping between candidates is bounded so a dovetailing caller always
// regains control.
constexpr std::uint64_t kSearchQuantum = 256;

class JoinSearchSemidecider {
 public:
  enum class Goal {
    AllJoined,        // every survivor pair connected avoiding E
    JoinedToAnchors,  // every middle survivor connected to an anchor
  };

  JoinSearchSemidecider(const GraphDescription& graph, EdgeSet forbidden,
                        std::vector<VertexId> survivors, Goal goal,
                        std::vector<VertexId> anchors)
      : graph_(graph),
        forbidden_(std::move(forbidden)),
        survivors_(std::move(survivors)),
        goal_(goal),
        anchors_(std::move(anchors)) {
    for (std::size_t i = 0; i < survivors_.size(); ++i) {
      index_[survivors_[i]] = i;
      parent_.push_back(i);
    }
    halted_ = goal_reached();
  }

  SemideciderStatus status() const {
    return halted_ ? SemideciderStatus::Halted : SemideciderStatus::Running;
  }

  SemideciderStatus step() {
    if (halted_) return SemideciderStatus::Halted;
    std::uint64_t work = 0;
    while (work < kSearchQuantum) {
      if (!generator_) {
        ++work;
        if (!advance_position()) continue;
      }
      std::uint64_t used = 0;
      auto walk = generator_->next(kSearchQuantum - work, used);
      work += used;
      if (walk) {
        examine(*walk);
        return status();  // one candidate per step
      }
      if (generator_->exhausted()) generator_.reset();
      // otherwise the quantum ran out mid-search; resume next step
    }
    return status();
  }

 private:
  // Candidate order: max edge id, then length, then start vertex, then
  // lexicographic edge sequence.
  bool advance_position() {
    if (generator_) return true;
    while (true) {
      if (start_index_ < survivors_.size() && length_ >= 1 &&
          length_ <= pool_.size()) {
        detail::WalkGenerator::Config cfg;
        cfg.start = survivors_[start_index_++];
        cfg.exact_length = length_;
        cfg.required = {current_max_};
        generator_.emplace(pool_, std::move(cfg));
        return true;
      }
      if (length_ < pool_.size() && length_ >= 1) {
        ++length_;
        start_index_ = 0;
        continue;
      }
      // Move to the next admitted max edge id.
      EdgeId m = next_max_candidate_++;
      if (forbidden_.count(m) || !graph_.oracle().is_edge(m)) return false;
      current_max_ = m;
      pool_.extend(graph_.oracle(), forbidden_, m);
      length_ = 1;
      start_index_ = 0;
    }
  }

  void examine(const detail::Walk& walk) {
    auto it = index_.find(walk.end());
    if (it == index_.end()) return;
    unite(index_.at(walk.start()), it->second);
    if (goal_reached()) halted_ = true;
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  bool goal_reached() {
    if (survivors_.size() <= 1) return true;
    if (goal_ == Goal::AllJoined) {
      std::size_t root = find(0);
      for (std::size_t i = 1; i < survivors_.size(); ++i) {
        if (find(i) != root) return false;
      }
      return true;
    }
    for (std::size_t i = 0; i < survivors_.size(); ++i) {
      if (is_anchor(survivors_[i])) continue;
      bool joined = false;
      for (VertexId a : anchors_) {
        if (find(i) == find(index_.at(a))) {
          joined = true;
          break;
        }
      }
      if (!joined) return false;
    }
    return true;
  }

  bool is_anchor(VertexId v) const {
    return std::find(anchors_.begin(), anchors_.end(), v) != anchors_.end();
  }

  const GraphDescription& graph_;
  EdgeSet forbidden_;
  std::vector<VertexId> survivors_;
  Goal goal_;
  std::vector<VertexId> anchors_;

  std::map<VertexId, std::size_t> index_;
  std::vector<std::size_t> parent_;

  detail::EdgePool pool_;
  EdgeId next_max_candidate_ = 0;
  EdgeId current_max_ = 0;
  std::size_t length_ = 0;
  std::size_t start_index_ = 0;
  std::optional<detail::WalkGenerator> generator_;
  bool halted_ = false;
};

std::uint64_t resolve_budget(std::optional<std::uint64_t> budget,
                             bool declared) {
  if (budget) return *budget;
  return declared ? UINT64_MAX : kDefaultUndeclaredBudget;
}

// Exclusivity assertion: when one semidecider halts, the complementary one
// must stay running. Stepping it as far as the winner went makes the claim
// observable instead of vacuous.
template <typename Machine>
void assert_still_running(Machine& machine, std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (machine.step() == SemideciderStatus::Halted) break;
  }
  if (machine.status() == SemideciderStatus::Halted) {
    report_exclusivity_violation();
  }
}

// Strict alternation, one step each, starting with the finite-component
// side; that side halting means the answer is false.
StepBudgetOutcome dovetail(FiniteComponentSemidecider& finite_side,
                           JoinSearchSemidecider& join_side,
                           std::uint64_t budget) {
  std::uint64_t iterations = 0;
  if (join_side.status() == SemideciderStatus::Halted) {
    return StepBudgetOutcome::decided(true);
  }
  std::uint64_t steps = 0;
  while (true) {
    if (steps >= budget) return StepBudgetOutcome::exhausted(steps);
    ++steps;
    if (finite_side.step() == SemideciderStatus::Halted) {
      assert_still_running(join_side, iterations + 1);
      return StepBudgetOutcome::decided(false);
    }
    if (steps >= budget) return StepBudgetOutcome::exhausted(steps);
    ++steps;
    ++iterations;
    if (join_side.step() == SemideciderStatus::Halted) {
      assert_still_running(finite_side, iterations);
      return StepBudgetOutcome::decided(true);
    }
  }
}

}  // namespace

StepBudgetOutcome connectivity_decider_one_end(
    const GraphDescription& g, const EdgeSet& E,
    std::optional<std::uint64_t> budget) {
  require_edges_exist(g.oracle(), E);
  std::set<VertexId> survivors = incident_survivors(g.oracle(), E);
  if (survivors.size() <= 1) return StepBudgetOutcome::decided(true);

  FiniteComponentSemidecider finite_side(g, E);
  JoinSearchSemidecider join_side(
      g, E, {survivors.begin(), survivors.end()},
      JoinSearchSemidecider::Goal::AllJoined, {});
  return dovetail(finite_side, join_side,
                  resolve_budget(budget, g.metadata().one_way));
}

namespace {

// Unvisited edges incident to w, or nullopt when w has infinite degree (and
// therefore infinitely many unvisited incident edges).
std::optional<std::vector<EdgeId>> unvisited_incident(const GraphOracle& g,
                                                      VertexId w,
                                                      const EdgeSet& visited) {
  if (g.degree(w).is_infinite()) return std::nullopt;
  std::vector<EdgeId> out;
  for (EdgeId e : incident_edges(g, w)) {
    if (!visited.count(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

StepBudgetOutcome is_right_extensible(const GraphDescription& g,
                                      const FinitePath& t,
                                      std::optional<std::uint64_t> budget) {
  validate_path(g.oracle(), t);
  if (!is_distinguished(g, t.initial_vertex())) {
    return StepBudgetOutcome::decided(false);
  }
  EdgeSet visited = t.edge_set();
  if (t.is_empty()) {
    Degree d = g.oracle().degree(t.final_vertex());
    if (d.is_finite() && d.finite_value() == 0) {
      return StepBudgetOutcome::decided(false);
    }
  } else {
    std::set<VertexId> survivors = incident_survivors(g.oracle(), visited);
    if (!survivors.count(t.final_vertex())) {
      return StepBudgetOutcome::decided(false);
    }
  }
  return connectivity_decider_one_end(g, visited, budget);
}

StepBudgetOutcome is_bi_extensible(const GraphDescription& g,
                                   const FinitePath& t,
                                   std::optional<std::uint64_t> budget) {
  validate_path(g.oracle(), t);
  const GraphOracle& oracle = g.oracle();
  EdgeSet visited = t.edge_set();

  VertexId initial = t.initial_vertex();
  VertexId final = t.final_vertex();
  if (initial == final) {
    // Shared endpoint: two distinct unvisited edge-ends are needed, and a
    // single unvisited loop supplies both.
    auto at = unvisited_incident(oracle, final, visited);
    if (at) {
      std::uint64_t ends = 0;
      for (EdgeId e : *at) ends += oracle.incidence(e).ends_at(final);
      if (ends < 2) return StepBudgetOutcome::decided(false);
    }
  } else {
    auto at_final = unvisited_incident(oracle, final, visited);
    auto at_initial = unvisited_incident(oracle, initial, visited);
    if (at_final && at_final->empty()) {
      return StepBudgetOutcome::decided(false);
    }
    if (at_initial && at_initial->empty()) {
      return StepBudgetOutcome::decided(false);
    }
    if (at_final && at_initial && at_final->size() == 1 &&
        at_initial->size() == 1 && at_final->front() == at_initial->front()) {
      return StepBudgetOutcome::decided(false);
    }
  }

  if (t.is_empty()) return StepBudgetOutcome::decided(true);

  std::set<VertexId> survivors = incident_survivors(oracle, visited);
  FiniteComponentSemidecider finite_side(g, visited);
  JoinSearchSemidecider join_side(
      g, visited, {survivors.begin(), survivors.end()},
      JoinSearchSemidecider::Goal::JoinedToAnchors, {initial, final});
  return dovetail(finite_side, join_side,
                  resolve_budget(budget, g.metadata().two_way));
}

}  // namespace euler
