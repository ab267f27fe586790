#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <functional>

#include "doctest.h"
#include "euler/oracle.hpp"
#include "support/helpers.hpp"

using namespace euler;
using euler::testing::is_subgraph;
using euler::testing::literal_ball;

TEST_CASE("ray family") {
  GraphDescription ray = family_ray();
  CHECK(ray.metadata().has_odd_vertex);
  CHECK(ray.metadata().conditions_label() == "E1");
  CHECK(ray.oracle().degree(0) == Degree::finite(1));
  CHECK(ray.oracle().degree(7) == Degree::finite(2));
  CHECK(ray.oracle().incidence(5) == Incidence::make(5, 5, 6));
  for (std::uint64_t n = 0; n < 50; ++n) {
    CHECK(ray.oracle().is_vertex(n));
    CHECK(ray.oracle().is_edge(n));
  }
}

TEST_CASE("zeta codes the integers onto the naturals") {
  CHECK(zeta(0) == 0);
  CHECK(zeta(1) == 2);
  CHECK(zeta(-1) == 1);
  CHECK(zeta(-2) == 3);
  for (std::int64_t k = -30; k <= 30; ++k) CHECK(zeta_inverse(zeta(k)) == k);
}

TEST_CASE("line family") {
  GraphDescription line = family_line();
  CHECK(line.metadata().conditions_label() == "E2");
  CHECK(line.oracle().degree(0) == Degree::finite(2));
  // f_{-1} has index zeta(-1) = 1 and joins zeta(-1)=1 to zeta(0)=0.
  CHECK(line.oracle().incidence(1) == Incidence::make(1, 0, 1));
  CHECK(line.oracle().incidence(0) == Incidence::make(0, 0, 2));
  for (std::uint64_t v = 0; v < 40; ++v) {
    Degree d = line.oracle().degree(v);
    CHECK(d.is_finite());
    CHECK(d.finite_value() % 2 == 0);
  }
}

TEST_CASE("loop_star family") {
  GraphDescription g = family_loop_star();
  CHECK(g.oracle().degree(0) == Degree::infinite());
  CHECK(!g.oracle().is_vertex(1));
  for (EdgeId k = 0; k < 20; ++k) {
    CHECK(g.oracle().incidence(k) == Incidence::make(k, 0, 0));
  }
  CHECK(g.metadata().conditions_label() == "E1E2");
  CHECK(!g.metadata().has_odd_vertex);
}

TEST_CASE("fat_ray family") {
  GraphDescription g = family_fat_ray();
  CHECK(g.oracle().incidence(7) == Incidence::make(7, 3, 4));
  CHECK(g.oracle().degree(1) == Degree::finite(4));
  CHECK(g.oracle().degree(0) == Degree::finite(2));
  // {A_2, B_2} = ids {4, 5} induces an even subgraph.
  FiniteMultigraph cut = induced(
      {4, 5}, [&](EdgeId e) { return g.oracle().incidence(e); });
  for (VertexId v : cut.vertices()) CHECK(cut.degree(v) % 2 == 0);
}

TEST_CASE("incident_edges terminates via the degree count") {
  GraphDescription ray = family_ray();
  CHECK(incident_edges(ray.oracle(), 0) == std::vector<EdgeId>{0});
  CHECK(incident_edges(ray.oracle(), 5) == std::vector<EdgeId>{4, 5});
  GraphDescription line = family_line();
  CHECK(incident_edges(line.oracle(), 0) == std::vector<EdgeId>{0, 1});
  GraphDescription fat = family_fat_ray();
  CHECK(incident_edges(fat.oracle(), 2) == std::vector<EdgeId>{2, 3, 4, 5});
  CHECK_THROWS_AS(incident_edges(family_loop_star().oracle(), 0), DomainError);
}

TEST_CASE("family degree certification by bounded scan") {
  struct Family {
    GraphDescription graph;
    std::function<EdgeId(VertexId)> bound;  // no incident edge past this id
  };
  std::vector<Family> families;
  families.push_back({family_ray(), [](VertexId v) { return v + 1; }});
  families.push_back({family_line(), [](VertexId v) {
                        auto mag =
                            std::uint64_t(std::abs(zeta_inverse(v)));
                        return 2 * (mag + 2);
                      }});
  families.push_back({family_fat_ray(), [](VertexId v) { return 2 * v + 2; }});
  for (auto& fam : families) {
    const GraphOracle& oracle = fam.graph.oracle();
    for (VertexId v = 0; v < 12; ++v) {
      EdgeId bound = fam.bound(v);
      std::uint64_t ends = 0;
      for (EdgeId e = 0; e <= bound; ++e) {
        if (oracle.is_edge(e)) ends += oracle.incidence(e).ends_at(v);
      }
      CHECK(Degree::finite(ends) == oracle.degree(v));
      for (EdgeId e = bound + 1; e <= bound + 20; ++e) {
        if (oracle.is_edge(e)) CHECK(oracle.incidence(e).ends_at(v) == 0);
      }
    }
  }
}

TEST_CASE("oracle purity: repeated queries agree") {
  for (auto& fam : builtin_families()) {
    for (std::uint64_t n = 0; n < 20; ++n) {
      CHECK(fam.oracle().is_vertex(n) == fam.oracle().is_vertex(n));
      CHECK(fam.oracle().is_edge(n) == fam.oracle().is_edge(n));
      if (fam.oracle().is_edge(n)) {
        CHECK(fam.oracle().incidence(n) == fam.oracle().incidence(n));
      }
      if (fam.oracle().is_vertex(n)) {
        CHECK(fam.oracle().degree(n) == fam.oracle().degree(n));
      }
    }
  }
}

TEST_CASE("incidence endpoints are vertices") {
  for (auto& fam : builtin_families()) {
    for (EdgeId e = 0; e < 30; ++e) {
      if (!fam.oracle().is_edge(e)) continue;
      Incidence inc = fam.oracle().incidence(e);
      CHECK(fam.oracle().is_vertex(inc.u));
      CHECK(fam.oracle().is_vertex(inc.v));
    }
  }
}

TEST_CASE("infinite degree means incident edges beyond every bound") {
  GraphDescription hub = parse_presentation(
      "family periodic\norientation one_way\ncell_vertices 1\n"
      "link_edge 0 0\nhub\nodd_vertex true\nconditions none\n");
  for (auto& g : {family_loop_star(), hub}) {
    VertexId v = 0;
    REQUIRE(g.oracle().degree(v).is_infinite());
    for (EdgeId bound : {EdgeId{10}, EdgeId{100}, EdgeId{1000}}) {
      bool found = false;
      for (EdgeId e = bound + 1; e <= bound + 64 && !found; ++e) {
        found = g.oracle().is_edge(e) && g.oracle().incidence(e).touches(v);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("presentation: family alias behaves like the built-in") {
  GraphDescription g = parse_presentation(
      "# alias\nfamily ray\nodd_vertex true\nconditions E1\n");
  CHECK(g.metadata().name == "ray");
  CHECK(g.oracle().degree(0) == Degree::finite(1));
  CHECK(g.oracle().incidence(5) == Incidence::make(5, 5, 6));

  CHECK_THROWS_AS(parse_presentation(
                      "family ray\nodd_vertex false\nconditions E1\n"),
                  DomainError);
}

TEST_CASE("presentation: periodic one-way cell unfolds to the ray") {
  GraphDescription g = parse_presentation(
      "family periodic\norientation one_way\ncell_vertices 1\n"
      "link_edge 0 0\nodd_vertex true\nconditions E1\n");
  GraphDescription ray = family_ray();
  for (std::uint64_t n = 0; n < 25; ++n) {
    CHECK(g.oracle().is_vertex(n) == ray.oracle().is_vertex(n));
    CHECK(g.oracle().is_edge(n) == ray.oracle().is_edge(n));
    CHECK(g.oracle().incidence(n) == ray.oracle().incidence(n));
    CHECK(g.oracle().degree(n) == ray.oracle().degree(n));
  }
}

TEST_CASE("presentation: periodic two-way cell unfolds to the line") {
  GraphDescription g = parse_presentation(
      "family periodic\norientation two_way\ncell_vertices 1\n"
      "link_edge 0 0\nodd_vertex false\nconditions E2\n");
  GraphDescription line = family_line();
  for (std::uint64_t n = 0; n < 25; ++n) {
    CHECK(g.oracle().incidence(n) == line.oracle().incidence(n));
    CHECK(g.oracle().degree(n) == line.oracle().degree(n));
  }
}

TEST_CASE("presentation: hub gives an infinite-degree vertex") {
  GraphDescription g = parse_presentation(
      "family periodic\norientation one_way\ncell_vertices 1\n"
      "link_edge 0 0\nhub\nodd_vertex true\nconditions none\n");
  CHECK(g.oracle().degree(0) == Degree::infinite());
  // Cell c vertex sits at id c+1; the hub edge is the last of each cell.
  CHECK(g.oracle().incidence(1) == Incidence::make(1, 0, 1));
  CHECK(g.oracle().incidence(0) == Incidence::make(0, 1, 2));
  Degree d1 = g.oracle().degree(1);
  CHECK(d1 == Degree::finite(2));  // boundary cell: link out + hub
  CHECK(g.oracle().degree(2) == Degree::finite(3));
}

TEST_CASE("presentation: two-way hub layout") {
  GraphDescription g = parse_presentation(
      "family periodic\norientation two_way\ncell_vertices 1\n"
      "link_edge 0 0\nhub\nodd_vertex true\nconditions none\n");
  CHECK(g.oracle().degree(0) == Degree::infinite());
  // Every cell has both neighbors, so each cell vertex sees link in, link
  // out, and its hub edge.
  CHECK(g.oracle().degree(1) == Degree::finite(3));
  CHECK(g.oracle().degree(4) == Degree::finite(3));
  // Cell zeta(0)=0 links to cell zeta(1)=2: vertices 1 and 3.
  CHECK(g.oracle().incidence(0) == Incidence::make(0, 1, 3));
  CHECK(g.oracle().incidence(1) == Incidence::make(1, 0, 1));
}

TEST_CASE("presentation: parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_presentation("family ray\nbogus 1\n"
                                          "odd_vertex true\nconditions E1\n"),
                       "line 2: unknown directive 'bogus'", ParseError);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("family unknown\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("family ray\nodd_vertex true\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_presentation("family periodic\norientation sideways\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse_presentation("family periodic\ncell_edge 0 0\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse_presentation("family periodic\norientation one_way\n"
                         "cell_vertices 1\ncell_edge 0 3\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse_presentation("family ray\nfamily ray\n"),
      ParseError);
}

TEST_CASE("presentation: metadata validation names the violated rule") {
  // Hub forces odd vertices, so conditions must be none.
  CHECK_THROWS_AS(parse_presentation(
                      "family periodic\norientation one_way\ncell_vertices 1\n"
                      "link_edge 0 0\nhub\nodd_vertex true\nconditions E1\n"),
                  DomainError);
  // odd_vertex false but interior degree is odd (3 = link in/out + hub).
  CHECK_THROWS_AS(parse_presentation(
                      "family periodic\norientation one_way\ncell_vertices 1\n"
                      "link_edge 0 0\nhub\nodd_vertex false\nconditions none\n"),
                  DomainError);
  // odd_vertex true but every degree is even.
  CHECK_THROWS_AS(parse_presentation(
                      "family periodic\norientation two_way\ncell_vertices 1\n"
                      "link_edge 0 0\nodd_vertex true\nconditions none\n"),
                  DomainError);
  // E2 with an odd vertex declared.
  CHECK_THROWS_AS(parse_presentation(
                      "family periodic\norientation one_way\ncell_vertices 1\n"
                      "link_edge 0 0\nodd_vertex true\nconditions E2\n"),
                  DomainError);
  // E1 on a two-way layout cannot have exactly one odd vertex.
  CHECK_THROWS_AS(parse_presentation(
                      "family periodic\norientation two_way\ncell_vertices 2\n"
                      "cell_edge 0 1\nlink_edge 0 0\n"
                      "odd_vertex true\nconditions E1\n"),
                  DomainError);
}

TEST_CASE("ball matches the hand-derived examples") {
  GraphDescription ray = family_ray();
  FiniteMultigraph b1 = ball(ray.oracle(), 0, 2, 5);
  CHECK(b1.vertices() == std::set<VertexId>{0, 1, 2});
  CHECK(b1.edge_ids() == EdgeSet{0, 1});

  FiniteMultigraph b2 = ball(ray.oracle(), 3, 1, 10);
  CHECK(b2.vertices() == std::set<VertexId>{2, 3, 4});
  CHECK(b2.edge_ids() == EdgeSet{2, 3});

  FiniteMultigraph b3 = ball(family_loop_star().oracle(), 0, 1, 2);
  CHECK(b3.vertices() == std::set<VertexId>{0});
  CHECK(b3.edge_ids() == EdgeSet{0, 1, 2});

  CHECK_THROWS_AS(ball(family_loop_star().oracle(), 1, 1, 1), DomainError);
}

TEST_CASE("ball agrees with the literal path-enumeration oracle") {
  std::vector<GraphDescription> graphs = {family_ray(), family_line(),
                                          family_fat_ray(),
                                          family_loop_star()};
  for (auto& g : graphs) {
    VertexId v = g.oracle().is_vertex(2) ? 2 : 0;
    for (std::uint64_t r = 0; r <= 4; ++r) {
      for (std::uint64_t s = 0; s <= 6; ++s) {
        CHECK(ball(g.oracle(), v, r, s) == literal_ball(g.oracle(), v, r, s));
      }
    }
  }
}

TEST_CASE("ball monotonicity over the (r, s) grid") {
  for (auto& g : {family_ray(), family_line(), family_fat_ray()}) {
    VertexId v = 1;
    for (std::uint64_t r = 0; r <= 4; ++r) {
      for (std::uint64_t s = 0; s <= 4; ++s) {
        FiniteMultigraph small = ball(g.oracle(), v, r, s);
        CHECK(handshake_check(small));
        for (std::uint64_t r2 = r; r2 <= 4; ++r2) {
          for (std::uint64_t s2 = s; s2 <= 4; ++s2) {
            CHECK(is_subgraph(small, ball(g.oracle(), v, r2, s2)));
          }
        }
      }
    }
  }
}

TEST_CASE("ball stabilizes in s at finite-degree vertices") {
  for (auto& g : {family_ray(), family_line(), family_fat_ray()}) {
    for (std::uint64_t r = 0; r <= 4; ++r) {
      FiniteMultigraph at_s0 = ball(g.oracle(), 1, r, 24);
      CHECK(ball(g.oracle(), 1, r, 30) == at_s0);
      CHECK(ball(g.oracle(), 1, r, 45) == at_s0);
    }
  }
}

TEST_CASE("path validation against an oracle") {
  GraphDescription ray = family_ray();
  FinitePath good(0, {0, 1, 2}, {0, 1});
  CHECK(!path_violation(ray.oracle(), good));
  FinitePath bad_chain(0, {0, 2}, {0});
  CHECK(path_violation(ray.oracle(), bad_chain).has_value());
  CHECK_THROWS_AS(validate_path(ray.oracle(), bad_chain), DomainError);
  FinitePath bad_vertex(0, {0, 1}, {0});
  CHECK(path_violation(family_loop_star().oracle(), bad_vertex).has_value());
}
