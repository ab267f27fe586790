#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "euler/core.hpp"
#include "euler/finite.hpp"

namespace euler {

/// Oracle presentation of an infinite multigraph: decidable vertex/edge
/// index sets, incidence lookup, and a total degree function into the
/// naturals extended by infinity. Implementations must be pure: identical
/// queries always return identical answers, so concurrent reads are safe.
class GraphOracle {
 public:
  virtual ~GraphOracle() = default;

  virtual bool is_vertex(std::uint64_t n) const = 0;
  virtual bool is_edge(std::uint64_t n) const = 0;

  /// Defined exactly when is_edge(e).
  virtual Incidence incidence(EdgeId e) const = 0;

  /// Defined exactly when is_vertex(v).
  virtual Degree degree(VertexId v) const = 0;
};

/// The incident edges of a finite-degree vertex, found by scanning edge
/// indices upward until the accumulated edge-ends match degree(v). Total for
/// any consistent oracle; an internal scan cap turns an inconsistent oracle
/// into a DomainError instead of a hang.
std::vector<EdgeId> incident_edges(const GraphOracle& g, VertexId v);

/// Declared, never computed: whether the graph has an odd-degree vertex and
/// which Eulerian-path conditions it satisfies. Odd-vertex detection is not
/// uniformly computable, so this stays caller-supplied input.
struct GraphMetadata {
  std::string name;
  bool has_odd_vertex = false;
  bool one_way = false;  // admits a one-way infinite Eulerian path
  bool two_way = false;  // admits a two-way infinite Eulerian path

  std::string conditions_label() const;
};

/// An oracle together with its declared metadata.
class GraphDescription {
 public:
  GraphDescription(std::shared_ptr<const GraphOracle> oracle,
                   GraphMetadata metadata)
      : oracle_(std::move(oracle)), metadata_(std::move(metadata)) {}

  const GraphOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const GraphOracle> oracle_ptr() const { return oracle_; }
  const GraphMetadata& metadata() const { return metadata_; }

 private:
  std::shared_ptr<const GraphOracle> oracle_;
  GraphMetadata metadata_;
};

// Built-in families.

/// Vertices 0,1,2,...; edge i joins i and i+1. One end, one odd vertex.
GraphDescription family_ray();

/// The two-way infinite line coded into the naturals by zeta: k >= 0 maps to
/// 2k, k < 0 maps to -2k-1. Edge f_k joins zeta(k) and zeta(k+1) and has
/// index zeta(k). All degrees 2, two ends.
GraphDescription family_line();

/// A single vertex carrying a loop for every natural number.
GraphDescription family_loop_star();

/// Vertices 0,1,2,...; parallel edges 2i and 2i+1 both join i and i+1.
GraphDescription family_fat_ray();

/// Built-in family by name ("ray", "line", "loop_star", "fat_ray").
GraphDescription family_by_name(const std::string& name);
std::vector<GraphDescription> builtin_families();

/// Integer-to-natural coding used by the line family and two-way periodic
/// presentations.
std::uint64_t zeta(std::int64_t k);
std::int64_t zeta_inverse(std::uint64_t n);

/// Parses a presentation file (see README for the format): either an alias
/// of a built-in family or a periodic graph built from a repeated cell.
/// Throws ParseError with a line number on malformed input and DomainError
/// on metadata inconsistent with the declared structure.
GraphDescription parse_presentation(std::string_view text);
GraphDescription load_presentation(const std::filesystem::path& file);

/// The finite subgraph induced by the edges of all paths that visit v, have
/// length at most r, and use only edges with index at most s. Vertex and
/// edge sets come out sorted by index.
FiniteMultigraph ball(const GraphOracle& g, VertexId v, std::uint64_t r,
                      std::uint64_t s);

/// First violated path invariant against the oracle (unknown vertex/edge or
/// incidence mismatch), or nullopt for a valid path.
std::optional<std::string> path_violation(const GraphOracle& g,
                                          const FinitePath& t);

/// Throws DomainError when the path is invalid in g.
void validate_path(const GraphOracle& g, const FinitePath& t);

}  // namespace euler
