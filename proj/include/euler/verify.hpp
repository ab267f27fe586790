#pragma once

#include <string>
#include <vector>

#include "euler/core.hpp"
#include "euler/finite.hpp"
#include "euler/oracle.hpp"
#include "euler/stream.hpp"

namespace euler {

struct PropertyFailure {
  std::string reproducer;
};

/// Result of one property run: pass exactly when no failures were recorded.
struct PropertyReport {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<PropertyFailure> failures;

  bool passed() const { return failures.empty(); }
  void fail(std::string reproducer);

  /// Machine-readable one-liner: PROP <name> PASS|FAIL checked=<n>
  /// failures=<k>
  std::string summary_line() const;
  /// Summary plus one line per recorded reproducer.
  std::string render() const;
};

/// Every connected multigraph with at most 4 vertices and 5 edges, loops and
/// parallel edges included, as labeled graphs (vertices 0..k-1, edge ids in
/// sorted endpoint order). Deterministic order; deduplicated by labeled form.
std::vector<FiniteMultigraph> finite_corpus();

/// Validates a stream prefix: well-formed in the graph and accepted by the
/// extensibility decider matching the mode.
PropertyReport check_prefix(const GraphDescription& g,
                            const FinitePath& prefix, StreamMode mode);

/// Agreement of the parity predicate, the Hierholzer construction, and
/// brute-force enumeration, for circuits at every vertex, every ordered
/// endpoint pair, and the unconstrained query. Requires at most 5 edges.
PropertyReport crosscheck_euler(const FiniteMultigraph& H);

// Suites over the corpus and the built-in families.

/// crosscheck_euler over the whole corpus.
PropertyReport euler_equivalence_suite();

/// Handshaking on every corpus graph and on every subgraph obtained by edge
/// removal and induction.
PropertyReport handshake_suite();

/// Streams on (ray, one-way), (loop_star, one-way), (loop_star, two-way),
/// (line, two-way), (fat_ray, two-way): each stage prefix passes
/// check_prefix and covers the first stage-many edges.
PropertyReport stream_consistency_suite(std::uint64_t stages);

/// The hand-derived decider cases, including the spur-ray disconnection case
/// and the fat-ray circuit negative case.
PropertyReport decider_ground_truth_suite();

std::vector<PropertyReport> run_all_suites(std::uint64_t stream_stages = 40);

/// Ray plus one extra parallel edge between 0 and 1 (the odd vertex becomes
/// 1); the classic input where both endpoint conditions hold but removal
/// disconnects the graph.
GraphDescription spur_ray();

}  // namespace euler
