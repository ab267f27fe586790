#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "euler/core.hpp"
#include "euler/finite.hpp"
#include "euler/oracle.hpp"

namespace euler::testing {

// Literal enumeration oracle for G(v, r, s): walk every non-edge-repeating
// path over the edges with index <= s (from every possible start), keep the
// ones that visit v and have length <= r, and induce on their edges. Kept
// deliberately independent of the library's ball computation.
inline FiniteMultigraph literal_ball(const GraphOracle& g, VertexId v,
                                     std::uint64_t r, std::uint64_t s) {
  std::vector<Incidence> pool;
  for (EdgeId e = 0; e <= s; ++e) {
    if (g.is_edge(e)) pool.push_back(g.incidence(e));
    if (e == s) break;
  }
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
  for (const Incidence& inc : pool) {
    adj[inc.u].emplace_back(inc.edge, inc.v);
    if (!inc.is_loop()) adj[inc.v].emplace_back(inc.edge, inc.u);
  }

  EdgeSet ball_edges;
  std::vector<VertexId> walk_vertices;
  std::set<EdgeId> walk_edges;
  std::vector<EdgeId> walk_order;

  auto visits_v = [&]() {
    for (VertexId w : walk_vertices) {
      if (w == v) return true;
    }
    return false;
  };

  std::function<void()> extend = [&]() {
    if (visits_v()) {
      for (EdgeId e : walk_order) ball_edges.insert(e);
    }
    if (walk_order.size() >= r) return;
    for (const auto& [e, next] : adj[walk_vertices.back()]) {
      if (walk_edges.count(e)) continue;
      walk_edges.insert(e);
      walk_order.push_back(e);
      walk_vertices.push_back(next);
      extend();
      walk_vertices.pop_back();
      walk_order.pop_back();
      walk_edges.erase(e);
    }
  };

  std::set<VertexId> starts;
  for (const Incidence& inc : pool) {
    starts.insert(inc.u);
    starts.insert(inc.v);
  }
  for (VertexId start : starts) {
    walk_vertices = {start};
    extend();
  }

  return induced(ball_edges, [&g](EdgeId e) { return g.incidence(e); });
}

inline bool is_subgraph(const FiniteMultigraph& small,
                        const FiniteMultigraph& big) {
  for (VertexId v : small.vertices()) {
    if (!big.has_vertex(v)) return false;
  }
  for (const auto& [id, inc] : small.edges()) {
    if (!big.has_edge(id) || !(big.incidence(id) == inc)) return false;
  }
  return true;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline CliResult run_cli(const std::string& cli_path,
                         const std::string& args) {
  std::string base =
      std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
      "/euler_cli_" + std::to_string(getpid());
  std::string out_file = base + "_out.txt";
  std::string err_file = base + "_err.txt";
  std::string command =
      cli_path + " " + args + " >" + out_file + " 2>" + err_file;
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_file);
  result.err = read_file(err_file);
  return result;
}

}  // namespace euler::testing
