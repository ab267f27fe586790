#include "euler/finite.hpp"

#include <algorithm>
#include <sstream>

namespace euler {

void FiniteMultigraph::add_edge(const Incidence& inc) {
  edges_[inc.edge] = inc;
  vertices_.insert(inc.u);
  vertices_.insert(inc.v);
}

const Incidence& FiniteMultigraph::incidence(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    throw DomainError("unknown edge " + std::to_string(e));
  }
  return it->second;
}

std::uint64_t FiniteMultigraph::degree(VertexId v) const {
  std::uint64_t deg = 0;
  for (const auto& [id, inc] : edges_) deg += inc.ends_at(v);
  return deg;
}

EdgeSet FiniteMultigraph::edge_ids() const {
  EdgeSet ids;
  for (const auto& [id, inc] : edges_) ids.insert(id);
  return ids;
}

FiniteMultigraph induced(const EdgeSet& E, const IncidenceFn& incidence_of) {
  FiniteMultigraph g;
  for (EdgeId e : E) g.add_edge(incidence_of(e));
  return g;
}

FiniteMultigraph induced(const EdgeSet& E, const FiniteMultigraph& host) {
  return induced(E, [&host](EdgeId e) { return host.incidence(e); });
}

FiniteMultigraph remove_edges(const FiniteMultigraph& H, const EdgeSet& E) {
  FiniteMultigraph g;
  for (const auto& [id, inc] : H.edges()) {
    if (!E.count(id)) g.add_edge(inc);
  }
  return g;
}

namespace {

// Adjacency as vertex -> sorted (edge, other endpoint) pairs; loops appear
// once under their vertex.
std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adjacency(
    const FiniteMultigraph& H) {
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
  for (VertexId v : H.vertices()) adj[v];
  for (const auto& [id, inc] : H.edges()) {
    adj[inc.u].emplace_back(id, inc.v);
    if (!inc.is_loop()) adj[inc.v].emplace_back(id, inc.u);
  }
  return adj;
}

}  // namespace

std::vector<FiniteMultigraph> components(const FiniteMultigraph& H) {
  auto adj = adjacency(H);
  std::set<VertexId> unseen = H.vertices();
  std::vector<FiniteMultigraph> out;
  while (!unseen.empty()) {
    VertexId root = *unseen.begin();
    FiniteMultigraph comp;
    comp.add_vertex(root);
    std::vector<VertexId> stack{root};
    unseen.erase(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& [e, w] : adj[v]) {
        comp.add_edge(H.incidence(e));
        if (unseen.erase(w)) stack.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const FiniteMultigraph& H) {
  return components(H).size() == 1;
}

bool handshake_check(const FiniteMultigraph& H) {
  std::uint64_t total = 0;
  for (VertexId v : H.vertices()) total += H.degree(v);
  return total == 2 * H.edge_count();
}

namespace {

std::vector<VertexId> odd_vertices(const FiniteMultigraph& H) {
  std::vector<VertexId> odd;
  for (VertexId v : H.vertices()) {
    if (H.degree(v) % 2 == 1) odd.push_back(v);
  }
  return odd;
}

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << " ";
    out << vs[i];
  }
  return out.str();
}

// Hierholzer with a (vertex, incoming edge) stack; always follows the
// smallest unused edge id.
FinitePath hierholzer(const FiniteMultigraph& H, VertexId start) {
  auto adj = adjacency(H);
  std::map<VertexId, std::size_t> next_index;
  std::set<EdgeId> used;
  std::vector<std::pair<VertexId, std::optional<EdgeId>>> stack;
  stack.emplace_back(start, std::nullopt);
  std::vector<VertexId> rev_vertices;
  std::vector<EdgeId> rev_edges;
  while (!stack.empty()) {
    auto& [v, in_edge] = stack.back();
    auto& entries = adj[v];
    std::size_t& idx = next_index[v];
    while (idx < entries.size() && used.count(entries[idx].first)) ++idx;
    if (idx < entries.size()) {
      auto [e, w] = entries[idx];
      used.insert(e);
      stack.emplace_back(w, e);
    } else {
      rev_vertices.push_back(v);
      if (in_edge) rev_edges.push_back(*in_edge);
      stack.pop_back();
    }
  }
  std::reverse(rev_vertices.begin(), rev_vertices.end());
  std::reverse(rev_edges.begin(), rev_edges.end());
  return FinitePath(0, std::move(rev_vertices), std::move(rev_edges));
}

}  // namespace

EulerOutcome eulerian_finite(const FiniteMultigraph& H,
                             std::optional<VertexId> from,
                             std::optional<VertexId> to) {
  if (H.edge_count() == 0) return {{}, "empty"};
  if (!is_connected(H)) return {{}, "disconnected"};
  if (from && !H.has_vertex(*from)) return {{}, "from not a vertex"};
  if (to && !H.has_vertex(*to)) return {{}, "to not a vertex"};

  std::vector<VertexId> odd = odd_vertices(H);
  VertexId start = 0;
  if (from && to) {
    if (*from == *to) {
      if (!odd.empty()) {
        return {{}, "circuit needs all degrees even; odd: " + vertex_list(odd)};
      }
      start = *from;
    } else {
      if (odd != std::vector<VertexId>{std::min(*from, *to),
                                       std::max(*from, *to)}) {
        return {{}, "path endpoints must be exactly the odd vertices; odd: " +
                        vertex_list(odd)};
      }
      start = *from;
    }
  } else if (from) {
    if (odd.empty()) {
      start = *from;
    } else if (odd.size() == 2 &&
               (odd[0] == *from || odd[1] == *from)) {
      start = *from;
    } else {
      return {{}, "no Eulerian path starts at " + std::to_string(*from) +
                      "; odd: " + vertex_list(odd)};
    }
  } else {
    if (odd.empty()) {
      start = *H.vertices().begin();
    } else if (odd.size() == 2) {
      start = odd[0];
    } else {
      return {{}, std::to_string(odd.size()) + " odd-degree vertices: " +
                      vertex_list(odd)};
    }
  }

  FinitePath path = hierholzer(H, start);
  if (path.length() != H.edge_count()) {
    // Unreachable for connected inputs; kept as a hard failure.
    throw DomainError("hierholzer did not cover all edges");
  }
  if (to && path.final_vertex() != *to) {
    throw DomainError("hierholzer endpoint mismatch");
  }
  return {std::move(path), ""};
}

namespace {

void brute_extend(const FiniteMultigraph& H,
                  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>>&
                      adj,
                  std::set<EdgeId>& used, std::vector<VertexId>& vs,
                  std::vector<EdgeId>& es, std::optional<VertexId> to,
                  std::vector<FinitePath>& out) {
  if (es.size() == H.edge_count()) {
    if (!to || vs.back() == *to) {
      out.emplace_back(0, vs, es);
    }
    return;
  }
  for (const auto& [e, w] : adj[vs.back()]) {
    if (used.count(e)) continue;
    used.insert(e);
    vs.push_back(w);
    es.push_back(e);
    brute_extend(H, adj, used, vs, es, to, out);
    es.pop_back();
    vs.pop_back();
    used.erase(e);
  }
}

}  // namespace

std::vector<FinitePath> brute_force_euler(const FiniteMultigraph& H,
                                          std::optional<VertexId> from,
                                          std::optional<VertexId> to) {
  if (H.edge_count() > 10) {
    throw DomainError("brute_force_euler: more than 10 edges");
  }
  if (H.edge_count() == 0) return {};
  auto adj = adjacency(H);
  std::vector<VertexId> starts;
  if (from) {
    if (!H.has_vertex(*from)) return {};
    starts.push_back(*from);
  } else {
    starts.assign(H.vertices().begin(), H.vertices().end());
  }
  std::vector<FinitePath> out;
  for (VertexId s : starts) {
    std::set<EdgeId> used;
    std::vector<VertexId> vs{s};
    std::vector<EdgeId> es;
    brute_extend(H, adj, used, vs, es, to, out);
  }
  return out;
}

std::string to_dot(const FiniteMultigraph& H, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v : H.vertices()) out << "  " << v << ";\n";
  for (const auto& [id, inc] : H.edges()) {
    out << "  " << inc.u << " -- " << inc.v << " [label=" << id << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace euler
