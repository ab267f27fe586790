#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "euler/deciders.hpp"
#include "euler/finite.hpp"
#include "euler/oracle.hpp"
#include "euler/stream.hpp"
#include "euler/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

euler::GraphDescription resolve_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return euler::load_presentation(spec);
  return euler::family_by_name(spec);
}

euler::StreamMode parse_mode(const std::string& mode) {
  return mode == "one-way" ? euler::StreamMode::OneWay
                           : euler::StreamMode::TwoWay;
}

// Path argument syntax: the flat token list "v0 e0 v1 e1 ... vk".
euler::FinitePath parse_path_tokens(const std::string& text,
                                    std::int64_t base) {
  std::istringstream in(text);
  std::vector<std::uint64_t> tokens;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      std::uint64_t value = std::stoull(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      tokens.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("--path: '" + tok + "' is not a natural number");
    }
  }
  if (tokens.size() % 2 == 0) {
    throw UsageError("--path: expected v0 e0 v1 e1 ... vk (odd token count)");
  }
  std::vector<euler::VertexId> vertices;
  std::vector<euler::EdgeId> edges;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    (i % 2 == 0 ? vertices : edges).push_back(tokens[i]);
  }
  return euler::FinitePath(base, std::move(vertices), std::move(edges));
}

void run_families(std::ostream& out) {
  for (const auto& fam : euler::builtin_families()) {
    const auto& md = fam.metadata();
    out << md.name << " odd_vertex=" << (md.has_odd_vertex ? "true" : "false")
        << " conditions=" << md.conditions_label() << "\n";
  }
}

void run_describe(std::ostream& out, const euler::GraphDescription& graph,
                  const std::vector<std::uint64_t>& vertices,
                  const std::vector<std::uint64_t>& edges) {
  const euler::GraphOracle& oracle = graph.oracle();
  for (std::uint64_t v : vertices) {
    if (oracle.is_vertex(v)) {
      out << "vertex " << v << " true degree "
          << euler::to_string(oracle.degree(v)) << "\n";
    } else {
      out << "vertex " << v << " false\n";
    }
  }
  for (std::uint64_t e : edges) {
    if (oracle.is_edge(e)) {
      euler::Incidence inc = oracle.incidence(e);
      out << "edge " << e << " true endpoints " << inc.u << " " << inc.v
          << "\n";
    } else {
      out << "edge " << e << " false\n";
    }
  }
}

void run_stream(std::ostream& out, euler::GraphDescription graph,
                euler::StreamMode mode, std::optional<euler::VertexId> start,
                std::uint64_t count) {
  if (mode == euler::StreamMode::TwoWay && start) {
    throw UsageError("--start only applies to one-way streams");
  }
  euler::EulerStream stream =
      mode == euler::StreamMode::OneWay
          ? euler::EulerStream::one_way(std::move(graph), start)
          : euler::EulerStream::two_way(std::move(graph));
  for (std::uint64_t i = 0; i < count; ++i) {
    euler::Side side = euler::Side::Right;
    if (mode == euler::StreamMode::TwoWay && i % 2 == 1) {
      side = euler::Side::Left;
    }
    euler::EmittedEdge emitted = stream.next_edge(side);
    out << "pos " << emitted.position << " edge " << emitted.edge
        << " vertex " << emitted.vertex << "\n";
  }
}

int run_extendable(std::ostream& out, const euler::GraphDescription& graph,
                   euler::StreamMode mode, const euler::FinitePath& path,
                   std::optional<std::uint64_t> budget) {
  euler::StepBudgetOutcome outcome =
      mode == euler::StreamMode::OneWay
          ? euler::is_right_extensible(graph, path, budget)
          : euler::is_bi_extensible(graph, path, budget);
  if (outcome.is_exhausted()) {
    out << "exhausted\n";
    return 4;
  }
  out << (outcome.answer() ? "true" : "false") << "\n";
  return 0;
}

void run_ball(std::ostream& out, const euler::GraphDescription& graph,
              euler::VertexId vertex, std::uint64_t radius,
              std::uint64_t bound, bool dot) {
  euler::FiniteMultigraph b = euler::ball(graph.oracle(), vertex, radius,
                                          bound);
  if (dot) {
    out << euler::to_dot(b);
    return;
  }
  out << "vertices";
  for (euler::VertexId v : b.vertices()) out << " " << v;
  out << "\nedges";
  for (const auto& [id, inc] : b.edges()) out << " " << id;
  out << "\n";
}

int run_verify(std::ostream& out, std::uint64_t stages) {
  bool all_passed = true;
  for (const auto& report : euler::run_all_suites(stages)) {
    out << report.render();
    all_passed = all_passed && report.passed();
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinite Eulerian paths on oracle-presented multigraphs"};
  app.require_subcommand(1);

  CLI::App* cmd_families =
      app.add_subcommand("families", "List built-in graph families");

  std::string graph_spec;
  std::vector<std::uint64_t> q_vertices, q_edges;
  CLI::App* cmd_describe =
      app.add_subcommand("describe", "Query vertex/edge/degree answers");
  cmd_describe->add_option("--graph", graph_spec, "Family name or file")
      ->required();
  cmd_describe->add_option("--vertex", q_vertices, "Vertex ids to query");
  cmd_describe->add_option("--edge", q_edges, "Edge ids to query");

  std::string mode_name;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> start;
  CLI::App* cmd_stream =
      app.add_subcommand("stream", "Emit an infinite Eulerian path prefix");
  cmd_stream->add_option("--graph", graph_spec, "Family name or file")
      ->required();
  cmd_stream->add_option("--mode", mode_name, "one-way or two-way")
      ->required()
      ->check(CLI::IsMember({"one-way", "two-way"}));
  cmd_stream->add_option("--start", start, "Start vertex (one-way only)");
  cmd_stream->add_option("--count", count, "Number of edges to emit")
      ->required();

  std::string path_tokens;
  std::int64_t path_base = 0;
  std::optional<std::uint64_t> budget;
  CLI::App* cmd_extendable = app.add_subcommand(
      "extendable", "Decide whether a finite path extends to an infinite "
                    "Eulerian path");
  cmd_extendable->add_option("--graph", graph_spec, "Family name or file")
      ->required();
  cmd_extendable->add_option("--mode", mode_name, "one-way or two-way")
      ->required()
      ->check(CLI::IsMember({"one-way", "two-way"}));
  cmd_extendable
      ->add_option("--path", path_tokens, "Flat token list: v0 e0 v1 ... vk")
      ->required();
  cmd_extendable->add_option("--base", path_base, "Domain base offset");
  cmd_extendable->add_option("--budget", budget, "Step budget");

  std::uint64_t ball_vertex = 0, ball_radius = 0, ball_bound = 0;
  bool ball_dot = false;
  CLI::App* cmd_ball =
      app.add_subcommand("ball", "Compute the ball G(v, r, s)");
  cmd_ball->add_option("--graph", graph_spec, "Family name or file")
      ->required();
  cmd_ball->add_option("--vertex", ball_vertex, "Center vertex")->required();
  cmd_ball->add_option("--radius", ball_radius, "Maximum path length")
      ->required();
  cmd_ball->add_option("--bound", ball_bound, "Maximum edge index")
      ->required();
  cmd_ball->add_flag("--dot", ball_dot, "Emit DOT instead of lists");

  std::uint64_t verify_stages = 40;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run the property suites");
  cmd_verify->add_option("--stages", verify_stages,
                         "Stream stages per family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_families)) {
      run_families(std::cout);
    } else if (app.got_subcommand(cmd_describe)) {
      run_describe(std::cout, resolve_graph(graph_spec), q_vertices, q_edges);
    } else if (app.got_subcommand(cmd_stream)) {
      run_stream(std::cout, resolve_graph(graph_spec), parse_mode(mode_name),
                 start, count);
    } else if (app.got_subcommand(cmd_extendable)) {
      euler::GraphDescription graph = resolve_graph(graph_spec);
      euler::FinitePath path = parse_path_tokens(path_tokens, path_base);
      euler::validate_path(graph.oracle(), path);
      return run_extendable(std::cout, graph, parse_mode(mode_name), path,
                            budget);
    } else if (app.got_subcommand(cmd_ball)) {
      run_ball(std::cout, resolve_graph(graph_spec), ball_vertex, ball_radius,
               ball_bound, ball_dot);
    } else if (app.got_subcommand(cmd_verify)) {
      return run_verify(std::cout, verify_stages);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const euler::ExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const euler::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
