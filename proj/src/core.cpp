#include "euler/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace euler {

std::string to_string(const Degree& d) {
  return d.is_infinite() ? "inf" : std::to_string(d.finite_value());
}

FinitePath::FinitePath(std::int64_t base, std::vector<VertexId> vertices,
                       std::vector<EdgeId> edges)
    : base_(base), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty() || vertices_.size() != edges_.size() + 1) {
    throw DomainError("path: need exactly length+1 vertices");
  }
  std::unordered_set<EdgeId> seen;
  for (EdgeId e : edges_) {
    if (!seen.insert(e).second) {
      throw DomainError("path: edge " + std::to_string(e) + " repeats");
    }
  }
}

FinitePath FinitePath::at_vertex(VertexId v, std::int64_t base) {
  return FinitePath(base, {v}, {});
}

VertexId FinitePath::vertex_at(std::int64_t pos) const {
  if (pos < base_ || pos > end_position()) {
    throw DomainError("vertex_at: position outside domain");
  }
  return vertices_[static_cast<std::size_t>(pos - base_)];
}

EdgeId FinitePath::edge_at(std::int64_t pos) const {
  if (pos < base_ || pos >= end_position()) {
    throw DomainError("edge_at: position outside domain");
  }
  return edges_[static_cast<std::size_t>(pos - base_)];
}

bool FinitePath::visits_edge(EdgeId e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

bool FinitePath::visits_vertex(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

FinitePath FinitePath::rebased(std::int64_t new_base) const {
  return FinitePath(new_base, vertices_, edges_);
}

FinitePath FinitePath::subpath(std::int64_t from, std::int64_t to) const {
  if (from < base_ || to > end_position() || from > to) {
    throw DomainError("subpath: range outside domain");
  }
  auto lo = static_cast<std::size_t>(from - base_);
  auto hi = static_cast<std::size_t>(to - base_);
  std::vector<VertexId> vs(vertices_.begin() + lo, vertices_.begin() + hi + 1);
  std::vector<EdgeId> es(edges_.begin() + lo, edges_.begin() + hi);
  return FinitePath(from, std::move(vs), std::move(es));
}

namespace {

void require_edge_disjoint(const FinitePath& t, const FinitePath& s) {
  for (EdgeId e : s.edges()) {
    if (t.visits_edge(e)) {
      throw DomainError("concat: shared edge " + std::to_string(e));
    }
  }
}

}  // namespace

FinitePath concat_right(const FinitePath& t, const FinitePath& s) {
  if (t.final_vertex() != s.initial_vertex()) {
    throw DomainError("concat_right: endpoint mismatch");
  }
  require_edge_disjoint(t, s);
  std::vector<VertexId> vs = t.vertices();
  vs.insert(vs.end(), s.vertices().begin() + 1, s.vertices().end());
  std::vector<EdgeId> es = t.edges();
  es.insert(es.end(), s.edges().begin(), s.edges().end());
  return FinitePath(t.base(), std::move(vs), std::move(es));
}

FinitePath concat_left(const FinitePath& t, const FinitePath& s) {
  if (s.final_vertex() != t.initial_vertex()) {
    throw DomainError("concat_left: endpoint mismatch");
  }
  require_edge_disjoint(t, s);
  std::vector<VertexId> vs = s.vertices();
  vs.insert(vs.end(), t.vertices().begin() + 1, t.vertices().end());
  std::vector<EdgeId> es = s.edges();
  es.insert(es.end(), t.edges().begin(), t.edges().end());
  return FinitePath(t.base() - static_cast<std::int64_t>(s.length()),
                    std::move(vs), std::move(es));
}

FinitePath invert(const FinitePath& t) {
  std::vector<VertexId> vs(t.vertices().rbegin(), t.vertices().rend());
  std::vector<EdgeId> es(t.edges().rbegin(), t.edges().rend());
  return FinitePath(-t.end_position(), std::move(vs), std::move(es));
}

std::uint64_t degree_in_path(const FinitePath& t, VertexId v) {
  // Edges of a path are pairwise distinct, so summing per-position
  // contributions gives the degree in the induced subgraph.
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < t.length(); ++i) {
    VertexId a = t.vertices()[i];
    VertexId b = t.vertices()[i + 1];
    if (a == v) ++deg;
    if (b == v) ++deg;
  }
  return deg;
}

std::string to_string(const FinitePath& t) {
  std::ostringstream out;
  out << "[" << t.base() << ".." << t.end_position() << "] " << t.vertices()[0];
  for (std::size_t i = 0; i < t.length(); ++i) {
    out << " -" << t.edges()[i] << "- " << t.vertices()[i + 1];
  }
  return out.str();
}

}  // namespace euler
