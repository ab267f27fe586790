#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace euler {

// Vertices and edges are indexed by natural numbers; the index sets of a
// particular graph are decided by its oracle.
using VertexId = std::uint64_t;
using EdgeId = std::uint64_t;

using EdgeSet = std::set<EdgeId>;

/// Thrown when an operation is applied outside its domain: mismatched
/// endpoints, unknown edges, invalid paths, malformed inputs.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure in a graph presentation file; carries the 1-based line.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, int line)
      : DomainError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Vertex degree with value in the naturals extended by infinity.
class Degree {
 public:
  static constexpr Degree finite(std::uint64_t n) { return Degree(true, n); }
  static constexpr Degree infinite() { return Degree(false, 0); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  std::uint64_t finite_value() const {
    if (!finite_) throw DomainError("finite_value() on infinite degree");
    return value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;

 private:
  constexpr Degree(bool finite, std::uint64_t value)
      : finite_(finite), value_(value) {}

  bool finite_;
  std::uint64_t value_;
};

std::string to_string(const Degree& d);

/// An edge together with its unordered endpoint pair. Loops are stored with
/// both endpoints equal; the pair is canonicalized as (min, max) so lookups
/// are order-independent.
struct Incidence {
  EdgeId edge{};
  VertexId u{};
  VertexId v{};

  static Incidence make(EdgeId e, VertexId a, VertexId b) {
    return a <= b ? Incidence{e, a, b} : Incidence{e, b, a};
  }

  bool is_loop() const { return u == v; }
  bool touches(VertexId w) const { return u == w || v == w; }

  /// Endpoint opposite w; w itself for loops. Requires touches(w).
  VertexId other(VertexId w) const {
    if (!touches(w)) throw DomainError("other(): vertex not an endpoint");
    return w == u ? v : u;
  }

  /// Number of edge-ends at w: 2 for a loop at w, 1 for a plain incidence.
  std::uint64_t ends_at(VertexId w) const {
    if (!touches(w)) return 0;
    return is_loop() ? 2 : 1;
  }

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// A finite path: an alternating vertex/edge sequence over an integer domain
/// [base, base+length]. Edges never repeat; consecutive entries must be
/// incident in the host graph (checked against an oracle by validate_path,
/// not by this container).
class FinitePath {
 public:
  FinitePath(std::int64_t base, std::vector<VertexId> vertices,
             std::vector<EdgeId> edges);

  /// The empty path sitting at a single vertex.
  static FinitePath at_vertex(VertexId v, std::int64_t base = 0);

  std::int64_t base() const { return base_; }
  std::int64_t end_position() const {
    return base_ + static_cast<std::int64_t>(edges_.size());
  }
  std::size_t length() const { return edges_.size(); }
  bool is_empty() const { return edges_.empty(); }

  VertexId initial_vertex() const { return vertices_.front(); }
  VertexId final_vertex() const { return vertices_.back(); }
  bool is_circuit() const {
    return !edges_.empty() && initial_vertex() == final_vertex();
  }

  /// Vertex at domain position pos in [base, base+length].
  VertexId vertex_at(std::int64_t pos) const;
  /// Edge between positions pos and pos+1, pos in [base, base+length).
  EdgeId edge_at(std::int64_t pos) const;

  bool visits_edge(EdgeId e) const;
  bool visits_vertex(VertexId v) const;

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  EdgeSet edge_set() const { return EdgeSet(edges_.begin(), edges_.end()); }

  FinitePath rebased(std::int64_t new_base) const;
  /// Restriction to [from, to] (inclusive positions).
  FinitePath subpath(std::int64_t from, std::int64_t to) const;

  friend bool operator==(const FinitePath&, const FinitePath&) = default;

 private:
  std::int64_t base_;
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
};

/// Concatenation of s at the right of t. Requires edge-disjointness and
/// final(t) == initial(s). Result domain is [a, b + (d - c)].
FinitePath concat_right(const FinitePath& t, const FinitePath& s);

/// Concatenation of s at the left of t. Requires edge-disjointness and
/// final(s) == initial(t). Result domain is [a - (d - c), b].
FinitePath concat_left(const FinitePath& t, const FinitePath& s);

/// Inverse path: same vertices and edges in reverse order, domain [-b, -a].
FinitePath invert(const FinitePath& t);

/// Degree of v in the subgraph induced by the edges visited by t; loops
/// count twice.
std::uint64_t degree_in_path(const FinitePath& t, VertexId v);

std::string to_string(const FinitePath& t);

}  // namespace euler
