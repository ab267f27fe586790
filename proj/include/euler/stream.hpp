#pragma once

#include <optional>
#include <vector>

#include "euler/core.hpp"
#include "euler/oracle.hpp"

namespace euler {

/// Raised when a configured stage safety budget runs out before a stage
/// finds its extension.
class ExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StreamMode { OneWay, TwoWay };
enum class Side { Right, Left };

struct EmittedEdge {
  EdgeId edge;
  VertexId vertex;        // vertex arrived at
  std::int64_t position;  // its position in the path's domain
};

/// Stateful generator of a computable infinite Eulerian path. The current
/// prefix is always extensible (the matching decider answers true); stage n
/// guarantees the n-th smallest edge index is visited; two-way stages
/// strictly extend the domain in both directions. A stream is a single-owner
/// mutable object: transfer it between threads, never share it.
class EulerStream {
 public:
  /// One-way stream; the graph must declare condition E1. The start vertex,
  /// when given, must be distinguished; by default the least-index
  /// distinguished vertex is used.
  static EulerStream one_way(GraphDescription graph,
                             std::optional<VertexId> start = {},
                             std::optional<std::uint64_t> stage_budget = {});

  /// Two-way stream; the graph must declare condition E2.
  static EulerStream two_way(GraphDescription graph,
                             std::optional<std::uint64_t> stage_budget = {});

  StreamMode mode() const { return mode_; }
  const GraphDescription& description() const { return graph_; }
  const FinitePath& prefix() const { return prefix_; }
  std::uint64_t stage() const { return stage_; }

  /// n-th smallest edge index of the graph (the stage targets).
  EdgeId edge_by_rank(std::uint64_t n);

  /// Runs one stage: the fair candidate search for the first extension that
  /// the matching decider accepts and that visits the next target edge.
  void advance_stage();

  /// Next unconsumed (edge, arrived-at vertex) on the given side, advancing
  /// stages as needed. One-way streams only serve the right side.
  EmittedEdge next_edge(Side side = Side::Right);

 private:
  EulerStream(GraphDescription graph, StreamMode mode, FinitePath seed,
              std::optional<std::uint64_t> stage_budget);

  void stage_one_way(EdgeId target);
  void stage_two_way(EdgeId target);
  void count_candidate(std::uint64_t& candidates) const;

  GraphDescription graph_;
  StreamMode mode_;
  FinitePath prefix_;
  std::uint64_t stage_ = 0;
  std::uint64_t right_served_ = 0;
  std::uint64_t left_served_ = 0;
  std::vector<EdgeId> edge_ranks_;
  EdgeId edge_scan_next_ = 0;
  std::optional<std::uint64_t> stage_budget_;
};

}  // namespace euler
