#include "euler/stream.hpp"

#include "euler/deciders.hpp"
#include "euler/detail/walk_enum.hpp"

namespace euler {

namespace {

constexpr EdgeId kScanCap = 1ull << 24;

VertexId least_vertex(const GraphOracle& g) {
  for (VertexId v = 0; v <= kScanCap; ++v) {
    if (g.is_vertex(v)) return v;
  }
  throw DomainError("no vertex found below scan cap");
}

VertexId least_distinguished(const GraphDescription& g) {
  for (VertexId v = 0; v <= kScanCap; ++v) {
    if (g.oracle().is_vertex(v) && is_distinguished(g, v)) return v;
  }
  throw DomainError("no distinguished vertex found below scan cap");
}

}  // namespace

EulerStream::EulerStream(GraphDescription graph, StreamMode mode,
                         FinitePath seed,
                         std::optional<std::uint64_t> stage_budget)
    : graph_(std::move(graph)),
      mode_(mode),
      prefix_(std::move(seed)),
      stage_budget_(stage_budget) {}

EulerStream EulerStream::one_way(GraphDescription graph,
                                 std::optional<VertexId> start,
                                 std::optional<std::uint64_t> stage_budget) {
  if (!graph.metadata().one_way) {
    throw DomainError("one-way stream requires a graph declaring E1");
  }
  VertexId v;
  if (start) {
    if (!graph.oracle().is_vertex(*start)) {
      throw DomainError("start " + std::to_string(*start) + " is not a vertex");
    }
    if (!is_distinguished(graph, *start)) {
      throw DomainError("start vertex " + std::to_string(*start) +
                        " is not distinguished");
    }
    v = *start;
  } else {
    v = least_distinguished(graph);
  }
  return EulerStream(std::move(graph), StreamMode::OneWay,
                     FinitePath::at_vertex(v), stage_budget);
}

EulerStream EulerStream::two_way(GraphDescription graph,
                                 std::optional<std::uint64_t> stage_budget) {
  if (!graph.metadata().two_way) {
    throw DomainError("two-way stream requires a graph declaring E2");
  }
  VertexId v = least_vertex(graph.oracle());
  return EulerStream(std::move(graph), StreamMode::TwoWay,
                     FinitePath::at_vertex(v), stage_budget);
}

EdgeId EulerStream::edge_by_rank(std::uint64_t n) {
  while (edge_ranks_.size() <= n) {
    if (edge_scan_next_ > kScanCap) {
      throw DomainError("edge scan cap hit; edge set not infinite?");
    }
    EdgeId e = edge_scan_next_++;
    if (graph_.oracle().is_edge(e)) edge_ranks_.push_back(e);
  }
  return edge_ranks_[n];
}

void EulerStream::count_candidate(std::uint64_t& candidates) const {
  ++candidates;
  if (stage_budget_ && candidates > *stage_budget_) {
    throw ExhaustedError("stage candidate budget exhausted after " +
                         std::to_string(*stage_budget_) + " candidates");
  }
}

void EulerStream::advance_stage() {
  EdgeId target = edge_by_rank(stage_);
  if (mode_ == StreamMode::OneWay) {
    stage_one_way(target);
  } else {
    stage_two_way(target);
  }
  ++stage_;
}

void EulerStream::stage_one_way(EdgeId target) {
  if (prefix_.visits_edge(target)) return;
  const GraphOracle& oracle = graph_.oracle();
  EdgeSet visited = prefix_.edge_set();
  detail::EdgePool pool;
  std::uint64_t candidates = 0;

  // Candidate extensions appended at the right, ordered by
  // (max edge id, length, lexicographic edge sequence).
  for (EdgeId m = target; m <= kScanCap; ++m) {
    if (visited.count(m) || !oracle.is_edge(m)) continue;
    pool.extend(oracle, visited, m);
    for (std::size_t len = 1; len <= pool.size(); ++len) {
      detail::WalkGenerator::Config cfg;
      cfg.start = prefix_.final_vertex();
      cfg.exact_length = len;
      cfg.required = m == target ? std::vector<EdgeId>{target}
                                 : std::vector<EdgeId>{target, m};
      detail::WalkGenerator gen(pool, std::move(cfg));
      std::uint64_t used = 0;
      while (!gen.exhausted()) {
        auto walk = gen.next(UINT64_MAX, used);
        if (!walk) continue;
        count_candidate(candidates);
        FinitePath candidate = concat_right(
            prefix_, FinitePath(0, walk->vertices, walk->edges));
        if (is_right_extensible(graph_, candidate).answer()) {
          prefix_ = std::move(candidate);
          return;
        }
      }
    }
  }
  throw DomainError("stage search scan cap hit");
}

void EulerStream::stage_two_way(EdgeId target) {
  const GraphOracle& oracle = graph_.oracle();
  bool need_target = !prefix_.visits_edge(target);
  EdgeSet visited = prefix_.edge_set();
  detail::EdgePool pool;
  std::uint64_t candidates = 0;

  // Candidate extensions are pairs (left walk from the initial vertex, right
  // walk from the final vertex), nonempty on both sides, ordered by
  // (max edge id, total added length, right split first, lexicographic).
  for (EdgeId m = need_target ? target : 0; m <= kScanCap; ++m) {
    if (visited.count(m) || !oracle.is_edge(m)) continue;
    pool.extend(oracle, visited, m);
    if (pool.size() < 2) continue;
    for (std::size_t total = 2; total <= pool.size(); ++total) {
      for (std::size_t right_len = 1; right_len + 1 <= total; ++right_len) {
        std::size_t left_len = total - right_len;
        detail::WalkGenerator::Config rcfg;
        rcfg.start = prefix_.final_vertex();
        rcfg.exact_length = right_len;
        detail::WalkGenerator rgen(pool, std::move(rcfg));
        std::uint64_t used = 0;
        while (!rgen.exhausted()) {
          auto rw = rgen.next(UINT64_MAX, used);
          if (!rw) continue;
          std::vector<EdgeId> left_required;
          if (!rw->contains(m)) left_required.push_back(m);
          if (need_target && target != m && !rw->contains(target)) {
            left_required.push_back(target);
          }
          if (left_required.size() > left_len) continue;
          detail::WalkGenerator::Config lcfg;
          lcfg.start = prefix_.initial_vertex();
          lcfg.exact_length = left_len;
          lcfg.required = std::move(left_required);
          lcfg.excluded = EdgeSet(rw->edges.begin(), rw->edges.end());
          detail::WalkGenerator lgen(pool, std::move(lcfg));
          while (!lgen.exhausted()) {
            auto lw = lgen.next(UINT64_MAX, used);
            if (!lw) continue;
            count_candidate(candidates);
            FinitePath candidate = concat_left(
                concat_right(prefix_, FinitePath(0, rw->vertices, rw->edges)),
                invert(FinitePath(0, lw->vertices, lw->edges)));
            if (is_bi_extensible(graph_, candidate).answer()) {
              prefix_ = std::move(candidate);
              if (stage_ == 0) prefix_ = prefix_.rebased(0);
              return;
            }
          }
        }
      }
    }
  }
  throw DomainError("stage search scan cap hit");
}

EmittedEdge EulerStream::next_edge(Side side) {
  if (side == Side::Left && mode_ == StreamMode::OneWay) {
    throw DomainError("one-way stream has no left cursor");
  }
  if (side == Side::Right) {
    auto pos = static_cast<std::int64_t>(right_served_);
    while (prefix_.end_position() < pos + 1) advance_stage();
    ++right_served_;
    return {prefix_.edge_at(pos), prefix_.vertex_at(pos + 1), pos + 1};
  }
  auto pos = -static_cast<std::int64_t>(left_served_) - 1;
  while (prefix_.base() > pos) advance_stage();
  ++left_served_;
  return {prefix_.edge_at(pos), prefix_.vertex_at(pos), pos};
}

}  // namespace euler
