#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "euler/core.hpp"

namespace euler {

/// Concrete finite multigraph with loops and parallel edges. Vertices and
/// edges are kept in ordered containers so every traversal is deterministic.
class FiniteMultigraph {
 public:
  void add_vertex(VertexId v) { vertices_.insert(v); }

  /// Inserts the edge and both endpoints.
  void add_edge(const Incidence& inc);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  const Incidence& incidence(EdgeId e) const;

  /// Degree of v; loops count twice. Zero for vertices not present.
  std::uint64_t degree(VertexId v) const;

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, Incidence>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  EdgeSet edge_ids() const;

  friend bool operator==(const FiniteMultigraph&,
                         const FiniteMultigraph&) = default;

 private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, Incidence> edges_;
};

using IncidenceFn = std::function<Incidence(EdgeId)>;

/// Subgraph induced by the edge set E: edges exactly E, vertices all their
/// endpoints. The incidence source must know every edge of E.
FiniteMultigraph induced(const EdgeSet& E, const IncidenceFn& incidence_of);
FiniteMultigraph induced(const EdgeSet& E, const FiniteMultigraph& host);

/// Removes the edges in E, then drops every vertex left with no incident
/// edge.
FiniteMultigraph remove_edges(const FiniteMultigraph& H, const EdgeSet& E);

/// Connected components, ordered by least vertex id. Isolated vertices form
/// singleton components.
std::vector<FiniteMultigraph> components(const FiniteMultigraph& H);

bool is_connected(const FiniteMultigraph& H);

/// Sum of degrees equals twice the edge count.
bool handshake_check(const FiniteMultigraph& H);

struct EulerOutcome {
  std::optional<FinitePath> path;
  std::string reason;  // nonempty exactly when infeasible

  bool feasible() const { return path.has_value(); }
};

/// Eulerian path/circuit construction (Hierholzer, smallest unused edge id
/// first). Endpoint requests: from==to asks for a circuit at that vertex;
/// from alone anchors the initial vertex; neither given means any Eulerian
/// path. Infeasibility is a value carrying the violated condition.
EulerOutcome eulerian_finite(const FiniteMultigraph& H,
                             std::optional<VertexId> from = {},
                             std::optional<VertexId> to = {});

/// Exhaustive backtracking enumeration of every Eulerian path matching the
/// endpoint request. Independent of eulerian_finite; guarded to at most 10
/// edges.
std::vector<FinitePath> brute_force_euler(const FiniteMultigraph& H,
                                          std::optional<VertexId> from = {},
                                          std::optional<VertexId> to = {});

/// Undirected DOT text; parallel edges repeat the "--" statement, loops are
/// self-edges, labels are edge ids.
std::string to_dot(const FiniteMultigraph& H, const std::string& name = "G");

}  // namespace euler
