#pragma once

#include <memory>
#include <optional>
#include <set>

#include "euler/core.hpp"
#include "euler/finite.hpp"
#include "euler/oracle.hpp"

namespace euler {

enum class SemideciderStatus { Running, Halted };

/// Outcome of a budgeted decision: either a definite answer or the news that
/// a finite step budget ran out first.
class StepBudgetOutcome {
 public:
  static StepBudgetOutcome decided(bool answer) {
    return StepBudgetOutcome(true, answer, 0);
  }
  static StepBudgetOutcome exhausted(std::uint64_t steps) {
    return StepBudgetOutcome(false, false, steps);
  }

  bool is_decided() const { return decided_; }
  bool is_exhausted() const { return !decided_; }

  bool answer() const {
    if (!decided_) throw DomainError("answer() on exhausted outcome");
    return answer_;
  }

  /// Steps consumed before the budget ran out.
  std::uint64_t steps() const { return steps_; }

  friend bool operator==(const StepBudgetOutcome&,
                         const StepBudgetOutcome&) = default;

 private:
  StepBudgetOutcome(bool decided, bool answer, std::uint64_t steps)
      : decided_(decided), answer_(answer), steps_(steps) {}

  bool decided_;
  bool answer_;
  std::uint64_t steps_;
};

/// Step budget applied when a decider runs on a description that does not
/// declare the condition guaranteeing termination.
constexpr std::uint64_t kDefaultUndeclaredBudget = 1'000'000;

/// Vertices incident to an edge of E that keep at least one incident edge
/// outside E, i.e. the E-endpoints still present in G - E. Infinite-degree
/// endpoints always survive; finite-degree endpoints are settled by an
/// incident-edge scan.
std::set<VertexId> incident_survivors(const GraphOracle& g, const EdgeSet& E);

/// Distinguished vertices are the only legal starts of one-way infinite
/// Eulerian paths. has_odd_vertex is declared metadata, never computed here.
bool is_distinguished(const GraphOracle& g, bool has_odd_vertex, VertexId v);
bool is_distinguished(const GraphDescription& g, VertexId v);

/// Step machine that halts exactly when G - E has a finite connected
/// component. Each step checks one (r, s) ball, with the pairs enumerated in
/// diagonal order so both parameters grow without bound. Once halted,
/// further steps are no-ops.
class FiniteComponentSemidecider {
 public:
  /// Requires nonempty E consisting of edges of the graph.
  FiniteComponentSemidecider(GraphDescription graph, EdgeSet E);
  ~FiniteComponentSemidecider();
  FiniteComponentSemidecider(FiniteComponentSemidecider&&) noexcept;
  FiniteComponentSemidecider& operator=(FiniteComponentSemidecider&&) noexcept;

  SemideciderStatus step();
  SemideciderStatus status() const;
  std::uint64_t steps_taken() const;

  /// The finite component found, once halted.
  const std::optional<FiniteMultigraph>& witness() const;
  /// The (r, s) pair at which the witness appeared.
  std::pair<std::uint64_t, std::uint64_t> halt_params() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Decides whether G - E is connected, for a connected one-ended graph
/// (declared via the E1 condition). Dovetails the finite-component
/// semidecider against an exhaustive search for E-avoiding paths joining the
/// surviving endpoints; with zero or one survivor the answer is immediate.
StepBudgetOutcome connectivity_decider_one_end(
    const GraphDescription& g, const EdgeSet& E,
    std::optional<std::uint64_t> budget = {});

/// Decides whether t extends to a one-way infinite Eulerian path: G - t
/// connected, initial vertex distinguished, final vertex still incident to
/// an unvisited edge. The two endpoint conditions are checked first; only
/// the connectivity condition consumes budget.
StepBudgetOutcome is_right_extensible(const GraphDescription& g,
                                      const FinitePath& t,
                                      std::optional<std::uint64_t> budget = {});

/// Decides whether t extends to a two-way infinite Eulerian path. Endpoint
/// conditions need two distinct unvisited edge-ends overall (at a circuit's
/// shared endpoint a single unvisited loop provides both); the remaining
/// condition dovetails the finite-component semidecider against a search
/// joining every middle survivor to one of t's endpoints.
StepBudgetOutcome is_bi_extensible(const GraphDescription& g,
                                   const FinitePath& t,
                                   std::optional<std::uint64_t> budget = {});

/// Number of times a dovetailed pair of complementary semideciders was
/// observed halting on both sides. Stays zero unless the theory's
/// exclusivity guarantee is broken.
std::uint64_t exclusivity_violation_count();

}  // namespace euler
