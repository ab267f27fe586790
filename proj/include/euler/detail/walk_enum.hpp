#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "euler/core.hpp"
#include "euler/oracle.hpp"

// Exhaustive enumeration of non-edge-repeating walks, ordered by
// (max edge index, length, start, lexicographic edge sequence). The
// semideciders and the stream stage searches share this machinery.

namespace euler::detail {

struct Walk {
  std::vector<VertexId> vertices;  // length + 1 entries
  std::vector<EdgeId> edges;

  VertexId start() const { return vertices.front(); }
  VertexId end() const { return vertices.back(); }
  bool contains(EdgeId e) const {
    for (EdgeId x : edges) {
      if (x == e) return true;
    }
    return false;
  }
};

/// Adjacency over an explicit, growing pool of admitted edges. extend() scans
/// edge indices upward, skipping non-edges and forbidden ids; entries stay
/// sorted by edge id because they are appended in scan order.
class EdgePool {
 public:
  /// Admit every valid, non-forbidden edge id <= max_id.
  void extend(const GraphOracle& g, const EdgeSet& forbidden, EdgeId max_id) {
    while (next_id_ <= max_id) {
      EdgeId e = next_id_++;
      if (forbidden.count(e) || !g.is_edge(e)) continue;
      Incidence inc = g.incidence(e);
      adj_[inc.u].emplace_back(e, inc.v);
      if (!inc.is_loop()) adj_[inc.v].emplace_back(e, inc.u);
      ++count_;
    }
  }

  const std::vector<std::pair<EdgeId, VertexId>>& at(VertexId v) const {
    static const std::vector<std::pair<EdgeId, VertexId>> empty;
    auto it = adj_.find(v);
    return it == adj_.end() ? empty : it->second;
  }

  std::size_t size() const { return count_; }

 private:
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj_;
  std::size_t count_ = 0;
  EdgeId next_id_ = 0;
};

/// Resumable depth-first generator of the walks of one exact length from one
/// start vertex, in lexicographic edge-sequence order. Every yielded walk
/// visits all `required` edges and none of the `excluded` ones. next() does
/// at most `work` frame operations, so a caller dovetailing several searches
/// can keep its steps bounded.
class WalkGenerator {
 public:
  struct Config {
    VertexId start = 0;
    std::size_t exact_length = 1;
    std::vector<EdgeId> required;
    EdgeSet excluded;
  };

  WalkGenerator(const EdgePool& pool, Config cfg)
      : pool_(&pool), cfg_(std::move(cfg)) {
    vertices_.push_back(cfg_.start);
    cursor_.push_back(0);
  }

  bool exhausted() const { return exhausted_; }

  std::optional<Walk> next(std::uint64_t work, std::uint64_t& used) {
    used = 0;
    while (!exhausted_ && used < work) {
      ++used;
      if (edges_.size() == cfg_.exact_length) {
        Walk out{vertices_, edges_};
        pop_level();
        if (has_required(out)) return out;
        continue;
      }
      const auto& entries = pool_->at(vertices_.back());
      std::size_t& idx = cursor_.back();
      bool pushed = false;
      while (idx < entries.size()) {
        auto [e, other] = entries[idx];
        ++idx;
        if (used_.count(e) || cfg_.excluded.count(e)) continue;
        if (!can_still_satisfy(e)) continue;
        used_.insert(e);
        edges_.push_back(e);
        vertices_.push_back(other);
        cursor_.push_back(0);
        pushed = true;
        break;
      }
      if (!pushed) pop_level();
    }
    return std::nullopt;
  }

 private:
  bool has_required(const Walk& w) const {
    for (EdgeId e : cfg_.required) {
      if (!w.contains(e)) return false;
    }
    return true;
  }

  // After taking edge e at the current depth, the walk must still be able to
  // fit every missing required edge into the remaining slots.
  bool can_still_satisfy(EdgeId e) const {
    std::size_t remaining = cfg_.exact_length - edges_.size() - 1;
    std::size_t missing = 0;
    for (EdgeId req : cfg_.required) {
      if (req != e && !used_.count(req)) ++missing;
    }
    return missing <= remaining;
  }

  void pop_level() {
    if (edges_.empty()) {
      exhausted_ = true;
      return;
    }
    used_.erase(edges_.back());
    edges_.pop_back();
    vertices_.pop_back();
    cursor_.pop_back();
  }

  const EdgePool* pool_;
  Config cfg_;
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<std::size_t> cursor_;
  std::set<EdgeId> used_;
  bool exhausted_ = false;
};

}  // namespace euler::detail
