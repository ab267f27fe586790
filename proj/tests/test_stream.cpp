#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "doctest.h"
#include "euler/deciders.hpp"
#include "euler/stream.hpp"
#include "euler/verify.hpp"

using namespace euler;

TEST_CASE("ray one-way stream is the forced path") {
  EulerStream stream = EulerStream::one_way(family_ray());
  for (std::uint64_t k = 0; k < 3; ++k) {
    EmittedEdge e = stream.next_edge();
    CHECK(e.edge == k);
    CHECK(e.vertex == k + 1);
    CHECK(e.position == static_cast<std::int64_t>(k + 1));
  }
  for (std::uint64_t k = 3; k < 200; ++k) {
    CHECK(stream.next_edge().edge == k);
  }
}

TEST_CASE("one-way stream start handling") {
  CHECK_THROWS_AS(EulerStream::one_way(family_ray(), 1), DomainError);
  EulerStream explicit_start = EulerStream::one_way(family_ray(), 0);
  CHECK(explicit_start.next_edge().edge == 0);
  // Default start is the least distinguished vertex.
  EulerStream dflt = EulerStream::one_way(family_loop_star());
  CHECK(dflt.prefix().initial_vertex() == 0);
  CHECK_THROWS_AS(EulerStream::one_way(family_line()), DomainError);
  CHECK_THROWS_AS(EulerStream::two_way(family_ray()), DomainError);
}

TEST_CASE("loop_star one-way covers loops in stage order") {
  EulerStream stream = EulerStream::one_way(family_loop_star());
  stream.advance_stage();
  CHECK(stream.prefix() == FinitePath(0, {0, 0}, {0}));
  for (int i = 0; i < 9; ++i) stream.advance_stage();
  for (EdgeId e = 0; e < 10; ++e) CHECK(stream.prefix().visits_edge(e));
}

TEST_CASE("stage advance extends the ray prefix minimally") {
  EulerStream stream = EulerStream::one_way(family_ray());
  stream.advance_stage();
  CHECK(stream.prefix() == FinitePath(0, {0, 1}, {0}));
  stream.advance_stage();
  CHECK(stream.prefix() == FinitePath(0, {0, 1, 2}, {0, 1}));
  CHECK(stream.stage() == 2);
}

TEST_CASE("two-way stages strictly extend both directions") {
  EulerStream stream = EulerStream::two_way(family_line());
  stream.advance_stage();
  std::int64_t base = stream.prefix().base();
  std::int64_t end = stream.prefix().end_position();
  CHECK(base == 0);  // stage-0 prefix is rebased to [0, l]
  CHECK(end >= 1);
  for (int i = 0; i < 10; ++i) {
    stream.advance_stage();
    CHECK(stream.prefix().base() < base);
    CHECK(stream.prefix().end_position() > end);
    base = stream.prefix().base();
    end = stream.prefix().end_position();
  }
}

TEST_CASE("line two-way cursors decode monotonically") {
  EulerStream stream = EulerStream::two_way(family_line());
  std::vector<std::int64_t> right, left;
  for (int i = 0; i < 200; ++i) {
    if (i % 2 == 0) {
      right.push_back(zeta_inverse(stream.next_edge(Side::Right).vertex));
    } else {
      left.push_back(zeta_inverse(stream.next_edge(Side::Left).vertex));
    }
  }
  for (std::size_t i = 3; i + 1 < right.size(); ++i) {
    CHECK(right[i] < right[i + 1]);
  }
  for (std::size_t i = 3; i + 1 < left.size(); ++i) {
    CHECK(left[i] > left[i + 1]);
  }
}

TEST_CASE("interleaving order does not change the per-side sequences") {
  EulerStream a = EulerStream::two_way(family_fat_ray());
  EulerStream b = EulerStream::two_way(family_fat_ray());
  std::vector<EdgeId> a_right, a_left, b_right, b_left;
  for (int i = 0; i < 30; ++i) {
    a_right.push_back(a.next_edge(Side::Right).edge);
    a_left.push_back(a.next_edge(Side::Left).edge);
  }
  for (int i = 0; i < 30; ++i) b_right.push_back(b.next_edge(Side::Right).edge);
  for (int i = 0; i < 30; ++i) b_left.push_back(b.next_edge(Side::Left).edge);
  CHECK(a_right == b_right);
  CHECK(a_left == b_left);
}

TEST_CASE("pulled edges never repeat and chain correctly") {
  EulerStream stream = EulerStream::two_way(family_fat_ray());
  std::set<EdgeId> seen;
  for (int i = 0; i < 100; ++i) {
    EmittedEdge e = stream.next_edge(i % 2 == 0 ? Side::Right : Side::Left);
    CHECK(seen.insert(e.edge).second);
  }
  CHECK(!path_violation(stream.description().oracle(), stream.prefix()));
}

TEST_CASE("left pulls on a one-way stream are rejected") {
  EulerStream stream = EulerStream::one_way(family_ray());
  CHECK_THROWS_AS(stream.next_edge(Side::Left), DomainError);
}

TEST_CASE("identical streams emit identical sequences") {
  EulerStream a = EulerStream::two_way(family_loop_star());
  EulerStream b = EulerStream::two_way(family_loop_star());
  for (int i = 0; i < 50; ++i) {
    Side side = i % 2 == 0 ? Side::Right : Side::Left;
    EmittedEdge ea = a.next_edge(side);
    EmittedEdge eb = b.next_edge(side);
    CHECK(ea.edge == eb.edge);
    CHECK(ea.vertex == eb.vertex);
    CHECK(ea.position == eb.position);
  }
}

TEST_CASE("loop_star two-way covers both sides") {
  EulerStream stream = EulerStream::two_way(family_loop_star());
  for (int i = 0; i < 10; ++i) stream.advance_stage();
  for (EdgeId e = 0; e < 10; ++e) CHECK(stream.prefix().visits_edge(e));
  CHECK(stream.prefix().base() < 0);
  CHECK(stream.prefix().end_position() > 1);
}

TEST_CASE("stage prefixes stay decider-approved") {
  EulerStream stream = EulerStream::two_way(family_fat_ray());
  for (int i = 0; i < 12; ++i) {
    stream.advance_stage();
    CHECK(is_bi_extensible(stream.description(), stream.prefix()) ==
          StepBudgetOutcome::decided(true));
  }
}

TEST_CASE("every rooted prefix of a one-way stream prefix is accepted") {
  EulerStream stream = EulerStream::one_way(family_loop_star());
  for (int i = 0; i < 8; ++i) stream.advance_stage();
  const FinitePath& t = stream.prefix();
  for (std::int64_t j = t.base(); j <= t.end_position(); ++j) {
    CHECK(is_right_extensible(stream.description(), t.subpath(t.base(), j)) ==
          StepBudgetOutcome::decided(true));
  }
}

TEST_CASE("every subpath of a two-way stream prefix is accepted") {
  for (auto& graph : {family_line(), family_fat_ray()}) {
    EulerStream stream = EulerStream::two_way(graph);
    for (int i = 0; i < 6; ++i) stream.advance_stage();
    const FinitePath& t = stream.prefix();
    for (std::int64_t a = t.base(); a <= t.end_position(); ++a) {
      for (std::int64_t b = a; b <= t.end_position(); ++b) {
        CHECK(is_bi_extensible(graph, t.subpath(a, b)) ==
              StepBudgetOutcome::decided(true));
      }
    }
  }
}

TEST_CASE("a zero stage budget surfaces as exhaustion") {
  EulerStream stream = EulerStream::one_way(family_ray(), 0, 0);
  CHECK_THROWS_AS(stream.advance_stage(), ExhaustedError);
}

TEST_CASE("edge ranks scan the decidable edge set") {
  EulerStream stream = EulerStream::one_way(spur_ray());
  CHECK(stream.edge_by_rank(0) == 0);
  CHECK(stream.edge_by_rank(1) == 1);
  CHECK(stream.edge_by_rank(2) == 2);
  CHECK(stream.edge_by_rank(3) == 4);  // odd ids above 1 are not edges
}
