#include "euler/oracle.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace euler {

namespace {

// Scan cap for incident-edge enumeration; hit only by oracles whose degree
// function disagrees with their incidence relation.
constexpr EdgeId kIncidentScanCap = 1ull << 24;

}  // namespace

std::vector<EdgeId> incident_edges(const GraphOracle& g, VertexId v) {
  if (!g.is_vertex(v)) {
    throw DomainError("incident_edges: " + std::to_string(v) +
                      " is not a vertex");
  }
  Degree d = g.degree(v);
  if (d.is_infinite()) {
    throw DomainError("incident_edges: vertex has infinite degree");
  }
  std::uint64_t target = d.finite_value();
  std::vector<EdgeId> found;
  std::uint64_t ends = 0;
  for (EdgeId e = 0; ends < target; ++e) {
    if (e > kIncidentScanCap) {
      throw DomainError("incident_edges: scan cap hit; inconsistent oracle");
    }
    if (!g.is_edge(e)) continue;
    std::uint64_t k = g.incidence(e).ends_at(v);
    if (k > 0) {
      found.push_back(e);
      ends += k;
    }
  }
  return found;
}

std::string GraphMetadata::conditions_label() const {
  if (one_way && two_way) return "E1E2";
  if (one_way) return "E1";
  if (two_way) return "E2";
  return "none";
}

std::uint64_t zeta(std::int64_t k) {
  return k >= 0 ? static_cast<std::uint64_t>(2 * k)
                : static_cast<std::uint64_t>(-2 * k - 1);
}

std::int64_t zeta_inverse(std::uint64_t n) {
  return n % 2 == 0 ? static_cast<std::int64_t>(n / 2)
                    : -static_cast<std::int64_t>((n + 1) / 2);
}

namespace {

class RayOracle final : public GraphOracle {
 public:
  bool is_vertex(std::uint64_t) const override { return true; }
  bool is_edge(std::uint64_t) const override { return true; }
  Incidence incidence(EdgeId e) const override {
    return Incidence::make(e, e, e + 1);
  }
  Degree degree(VertexId v) const override {
    return v == 0 ? Degree::finite(1) : Degree::finite(2);
  }
};

class LineOracle final : public GraphOracle {
 public:
  bool is_vertex(std::uint64_t) const override { return true; }
  bool is_edge(std::uint64_t) const override { return true; }
  Incidence incidence(EdgeId e) const override {
    std::int64_t k = zeta_inverse(e);
    return Incidence::make(e, zeta(k), zeta(k + 1));
  }
  Degree degree(VertexId) const override { return Degree::finite(2); }
};

class LoopStarOracle final : public GraphOracle {
 public:
  bool is_vertex(std::uint64_t n) const override { return n == 0; }
  bool is_edge(std::uint64_t) const override { return true; }
  Incidence incidence(EdgeId e) const override {
    return Incidence::make(e, 0, 0);
  }
  Degree degree(VertexId v) const override {
    if (v != 0) throw DomainError("loop_star: not a vertex");
    return Degree::infinite();
  }
};

class FatRayOracle final : public GraphOracle {
 public:
  bool is_vertex(std::uint64_t) const override { return true; }
  bool is_edge(std::uint64_t) const override { return true; }
  Incidence incidence(EdgeId e) const override {
    VertexId i = e / 2;
    return Incidence::make(e, i, i + 1);
  }
  Degree degree(VertexId v) const override {
    return v == 0 ? Degree::finite(2) : Degree::finite(4);
  }
};

}  // namespace

GraphDescription family_ray() {
  return {std::make_shared<RayOracle>(),
          GraphMetadata{"ray", true, true, false}};
}

GraphDescription family_line() {
  return {std::make_shared<LineOracle>(),
          GraphMetadata{"line", false, false, true}};
}

GraphDescription family_loop_star() {
  return {std::make_shared<LoopStarOracle>(),
          GraphMetadata{"loop_star", false, true, true}};
}

GraphDescription family_fat_ray() {
  return {std::make_shared<FatRayOracle>(),
          GraphMetadata{"fat_ray", false, false, true}};
}

std::vector<GraphDescription> builtin_families() {
  return {family_ray(), family_line(), family_loop_star(), family_fat_ray()};
}

GraphDescription family_by_name(const std::string& name) {
  for (auto& fam : builtin_families()) {
    if (fam.metadata().name == name) return fam;
  }
  throw DomainError("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Periodic presentations.

namespace {

enum class Orientation { OneWay, TwoWay };

struct PeriodicSpec {
  Orientation orientation = Orientation::OneWay;
  std::uint64_t cell_vertices = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cell_edges;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> link_edges;
  bool hub = false;

  std::uint64_t edges_per_cell() const {
    return cell_edges.size() + link_edges.size() + (hub ? 1 : 0);
  }
};

class PeriodicOracle final : public GraphOracle {
 public:
  explicit PeriodicOracle(PeriodicSpec spec) : spec_(std::move(spec)) {}

  bool is_vertex(std::uint64_t) const override { return true; }

  bool is_edge(std::uint64_t) const override {
    return spec_.edges_per_cell() > 0;
  }

  Incidence incidence(EdgeId e) const override {
    std::uint64_t m = spec_.edges_per_cell();
    if (m == 0) throw DomainError("periodic: graph has no edges");
    std::uint64_t cell = e / m;
    std::uint64_t j = e % m;
    if (j < spec_.cell_edges.size()) {
      auto [u, v] = spec_.cell_edges[j];
      return Incidence::make(e, vertex_id(cell, u), vertex_id(cell, v));
    }
    j -= spec_.cell_edges.size();
    if (j < spec_.link_edges.size()) {
      auto [u, v] = spec_.link_edges[j];
      return Incidence::make(e, vertex_id(cell, u),
                             vertex_id(next_cell(cell), v));
    }
    return Incidence::make(e, 0, vertex_id(cell, 0));  // hub edge
  }

  Degree degree(VertexId v) const override {
    if (spec_.hub && v == 0) return Degree::infinite();
    auto [cell, u] = locate(v);
    return Degree::finite(local_degree(u, has_prev_cell(cell)));
  }

  // Degree of cell-local vertex u given whether an incoming cell exists.
  std::uint64_t local_degree(std::uint64_t u, bool has_prev) const {
    std::uint64_t deg = 0;
    for (auto [a, b] : spec_.cell_edges) deg += (a == u) + (b == u);
    for (auto [a, b] : spec_.link_edges) {
      if (a == u) ++deg;
      if (has_prev && b == u) ++deg;
    }
    if (spec_.hub && u == 0) ++deg;
    return deg;
  }

  bool has_prev_cell(std::uint64_t cell) const {
    if (spec_.orientation == Orientation::TwoWay) return true;
    return cell > 0;
  }

  std::uint64_t vertex_id(std::uint64_t cell, std::uint64_t u) const {
    return cell * spec_.cell_vertices + u + (spec_.hub ? 1 : 0);
  }

  std::pair<std::uint64_t, std::uint64_t> locate(VertexId v) const {
    std::uint64_t y = v - (spec_.hub ? 1 : 0);
    return {y / spec_.cell_vertices, y % spec_.cell_vertices};
  }

  std::uint64_t next_cell(std::uint64_t cell) const {
    if (spec_.orientation == Orientation::OneWay) return cell + 1;
    return zeta(zeta_inverse(cell) + 1);
  }

  const PeriodicSpec& spec() const { return spec_; }

 private:
  PeriodicSpec spec_;
};

struct ParsedMetadata {
  bool have_odd = false;
  bool odd_vertex = false;
  bool have_conditions = false;
  bool one_way = false;
  bool two_way = false;
};

[[noreturn]] void validation_error(const std::string& rule) {
  throw DomainError("validation: " + rule);
}

void validate_periodic(const PeriodicOracle& oracle, const GraphMetadata& md) {
  const PeriodicSpec& spec = oracle.spec();
  bool conditions = md.one_way || md.two_way;
  if (spec.edges_per_cell() == 0 && conditions) {
    validation_error("declared conditions require an infinite edge set");
  }
  if (spec.hub && conditions) {
    validation_error(
        "hub forces an odd-degree vertex in every cell; conditions must be "
        "none");
  }
  if (md.two_way && md.has_odd_vertex) {
    validation_error("conditions E2 require every degree even or infinite");
  }

  // Degree classes: the interior profile repeats in every cell; one_way
  // layouts additionally have a boundary cell with no incoming links.
  bool layout_one_way = spec.orientation == Orientation::OneWay;
  std::vector<std::uint64_t> interior, boundary;
  for (std::uint64_t u = 0; u < spec.cell_vertices; ++u) {
    interior.push_back(oracle.local_degree(u, true));
    if (layout_one_way) boundary.push_back(oracle.local_degree(u, false));
  }
  bool odd_interior = std::any_of(interior.begin(), interior.end(),
                                  [](std::uint64_t d) { return d % 2 == 1; });
  std::uint64_t odd_boundary =
      static_cast<std::uint64_t>(std::count_if(
          boundary.begin(), boundary.end(),
          [](std::uint64_t d) { return d % 2 == 1; }));

  if (!md.has_odd_vertex && (odd_interior || odd_boundary > 0)) {
    validation_error("odd_vertex false but the cell structure has an "
                     "odd-degree vertex");
  }
  if (md.has_odd_vertex && !odd_interior && odd_boundary == 0) {
    validation_error("odd_vertex true but no vertex has odd degree");
  }
  if (md.one_way) {
    if (!md.has_odd_vertex) {
      validation_error(
          "periodic graphs declaring E1 must declare odd_vertex true");
    }
    if (odd_interior) {
      validation_error("E1 requires exactly one odd-degree vertex but the "
                       "cell structure repeats one infinitely");
    }
    if (odd_boundary != 1) {
      validation_error("E1 requires exactly one odd-degree vertex; the "
                       "boundary cell has " + std::to_string(odd_boundary));
    }
  }
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::uint64_t parse_nat(const std::string& tok, int line) {
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError("expected a natural number", line);
  }
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range", line);
  }
}

bool parse_bool(const std::string& tok, int line) {
  if (tok == "true") return true;
  if (tok == "false") return false;
  throw ParseError("expected true or false", line);
}

}  // namespace

GraphDescription parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  std::string family;
  bool is_periodic = false;
  PeriodicSpec spec;
  bool have_orientation = false, have_cell_vertices = false;
  ParsedMetadata md;

  auto need_args = [&](const std::vector<std::string>& t, std::size_t n) {
    if (t.size() != n + 1) {
      throw ParseError("directive '" + t[0] + "' takes " + std::to_string(n) +
                           " argument(s)",
                       line_no);
    }
  };
  auto periodic_only = [&](const std::string& directive) {
    if (!is_periodic) {
      throw ParseError("directive '" + directive +
                           "' is only valid for family periodic",
                       line_no);
    }
  };
  auto cell_local = [&](const std::string& tok) {
    std::uint64_t u = parse_nat(tok, line_no);
    if (!have_cell_vertices) {
      throw ParseError("cell_vertices must precede edge directives", line_no);
    }
    if (u >= spec.cell_vertices) {
      throw ParseError("cell-local vertex " + tok + " out of range", line_no);
    }
    return u;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (family.empty()) {
      if (directive != "family") {
        throw ParseError("expected 'family' directive first", line_no);
      }
      need_args(tokens, 1);
      family = tokens[1];
      if (family == "periodic") {
        is_periodic = true;
      } else if (family != "ray" && family != "line" &&
                 family != "loop_star" && family != "fat_ray") {
        throw ParseError("unknown family '" + family + "'", line_no);
      }
      continue;
    }

    if (directive == "family") {
      throw ParseError("duplicate 'family' directive", line_no);
    } else if (directive == "orientation") {
      periodic_only(directive);
      need_args(tokens, 1);
      if (have_orientation) throw ParseError("duplicate orientation", line_no);
      have_orientation = true;
      if (tokens[1] == "one_way") {
        spec.orientation = Orientation::OneWay;
      } else if (tokens[1] == "two_way") {
        spec.orientation = Orientation::TwoWay;
      } else {
        throw ParseError("orientation must be one_way or two_way", line_no);
      }
    } else if (directive == "cell_vertices") {
      periodic_only(directive);
      need_args(tokens, 1);
      if (have_cell_vertices) {
        throw ParseError("duplicate cell_vertices", line_no);
      }
      have_cell_vertices = true;
      spec.cell_vertices = parse_nat(tokens[1], line_no);
      if (spec.cell_vertices == 0) {
        throw ParseError("cell_vertices must be at least 1", line_no);
      }
    } else if (directive == "cell_edge") {
      periodic_only(directive);
      need_args(tokens, 2);
      spec.cell_edges.emplace_back(cell_local(tokens[1]),
                                   cell_local(tokens[2]));
    } else if (directive == "link_edge") {
      periodic_only(directive);
      need_args(tokens, 2);
      spec.link_edges.emplace_back(cell_local(tokens[1]),
                                   cell_local(tokens[2]));
    } else if (directive == "hub") {
      periodic_only(directive);
      need_args(tokens, 0);
      if (spec.hub) throw ParseError("duplicate hub", line_no);
      spec.hub = true;
    } else if (directive == "odd_vertex") {
      need_args(tokens, 1);
      if (md.have_odd) throw ParseError("duplicate odd_vertex", line_no);
      md.have_odd = true;
      md.odd_vertex = parse_bool(tokens[1], line_no);
    } else if (directive == "conditions") {
      need_args(tokens, 1);
      if (md.have_conditions) throw ParseError("duplicate conditions", line_no);
      md.have_conditions = true;
      if (tokens[1] == "E1") {
        md.one_way = true;
      } else if (tokens[1] == "E2") {
        md.two_way = true;
      } else if (tokens[1] == "E1E2") {
        md.one_way = md.two_way = true;
      } else if (tokens[1] != "none") {
        throw ParseError("conditions must be E1, E2, E1E2 or none", line_no);
      }
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no);
    }
  }

  if (family.empty()) throw ParseError("expected 'family' directive", line_no);
  if (!md.have_odd) throw ParseError("missing odd_vertex directive", line_no);
  if (!md.have_conditions) {
    throw ParseError("missing conditions directive", line_no);
  }

  if (!is_periodic) {
    GraphDescription builtin = family_by_name(family);
    const GraphMetadata& want = builtin.metadata();
    if (md.odd_vertex != want.has_odd_vertex || md.one_way != want.one_way ||
        md.two_way != want.two_way) {
      validation_error("metadata does not match built-in family '" + family +
                       "' (expected odd_vertex " +
                       (want.has_odd_vertex ? "true" : "false") +
                       ", conditions " + want.conditions_label() + ")");
    }
    return builtin;
  }

  if (!have_orientation) {
    throw ParseError("missing orientation directive", line_no);
  }
  if (!have_cell_vertices) {
    throw ParseError("missing cell_vertices directive", line_no);
  }
  auto oracle = std::make_shared<PeriodicOracle>(spec);
  GraphMetadata metadata{"periodic", md.odd_vertex, md.one_way, md.two_way};
  validate_periodic(*oracle, metadata);
  return {oracle, metadata};
}

GraphDescription load_presentation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

// ---------------------------------------------------------------------------
// Balls.

FiniteMultigraph ball(const GraphOracle& g, VertexId v, std::uint64_t r,
                      std::uint64_t s) {
  if (!g.is_vertex(v)) {
    throw DomainError("ball: " + std::to_string(v) + " is not a vertex");
  }
  FiniteMultigraph out;
  if (r == 0) return out;  // length-0 paths carry no edges

  std::vector<Incidence> pool;
  for (EdgeId e = 0; e <= s; ++e) {
    if (g.is_edge(e)) pool.push_back(g.incidence(e));
    if (e == s) break;
  }

  std::map<VertexId, std::vector<VertexId>> neighbors;
  for (const Incidence& inc : pool) {
    neighbors[inc.u].push_back(inc.v);
    neighbors[inc.v].push_back(inc.u);
  }

  // BFS over the admitted edges. An edge lies on a non-edge-repeating path
  // through v of length at most r exactly when the distance from v to one of
  // its endpoints is below r: the shortest walk to the nearer endpoint never
  // repeats an edge and never needs the edge itself.
  std::map<VertexId, std::uint64_t> dist;
  dist[v] = 0;
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : neighbors[x]) {
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }

  for (const Incidence& inc : pool) {
    auto du = dist.find(inc.u);
    auto dv = dist.find(inc.v);
    std::uint64_t best = UINT64_MAX;
    if (du != dist.end()) best = du->second;
    if (dv != dist.end()) best = std::min(best, dv->second);
    if (best < r) out.add_edge(inc);
  }
  return out;
}

std::optional<std::string> path_violation(const GraphOracle& g,
                                          const FinitePath& t) {
  for (VertexId v : t.vertices()) {
    if (!g.is_vertex(v)) {
      return "vertex " + std::to_string(v) + " is not in the graph";
    }
  }
  for (std::size_t i = 0; i < t.length(); ++i) {
    EdgeId e = t.edges()[i];
    if (!g.is_edge(e)) {
      return "edge " + std::to_string(e) + " is not in the graph";
    }
    Incidence inc = g.incidence(e);
    VertexId a = t.vertices()[i];
    VertexId b = t.vertices()[i + 1];
    if (!inc.touches(a) || inc.other(a) != b) {
      return "edge " + std::to_string(e) + " does not join " +
             std::to_string(a) + " and " + std::to_string(b);
    }
  }
  return std::nullopt;
}

void validate_path(const GraphOracle& g, const FinitePath& t) {
  if (auto why = path_violation(g, t)) throw DomainError("path: " + *why);
}

}  // namespace euler
