#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chaindec/bigraph.hpp"

namespace chaindec {

// Exhaustive ground truth over all labelled graphs on n vertices. Graphs are
// edge masks: bit i stands for the i-th pair of (1,2), (1,3), ..., (n-1,n).
struct OracleOptions {
  std::size_t cap = 7;
  unsigned workers = 1;
};

struct ClassCount {
  std::size_t n = 0;
  std::uint64_t value = 0;
};

// Labelled P7-free bipartite graphs on n vertices (bipartiteness is
// existential: the graph is counted, not a bipartitioned graph).
ClassCount count_class(std::size_t n, const OracleOptions& options = {});
// Same enumeration without the P7 filter.
std::uint64_t bipartite_count(std::size_t n, const OracleOptions& options = {});

std::size_t pair_count(std::size_t n);

// The graph of `mask` on 1..n with its canonical bipartition (per component,
// BFS 2-colouring with the smallest label on the left), or nullopt when it
// is not bipartite.
std::optional<BipartiteGraph> canonical_bipartite_graph(std::size_t n, std::uint64_t mask);

// Outcome of the full pipeline on one graph.
struct GraphReport {
  std::vector<std::string> failures;
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t bits = 0;
  std::size_t chain_nodes = 0;
  bool ok() const noexcept { return failures.empty(); }
};

// build_tree, per-node chain validation and component round-trip, decode
// round-trip, node and leaf bounds, 2-decomposition clauses, the
// neighbourhood-graph lemmas, encoding envelope and stream round-trip.
GraphReport verify_graph(const BipartiteGraph& g);

struct ClassFailure {
  std::uint64_t mask = 0;  // 0 for corpus entries, which carry `index` instead
  std::size_t index = 0;
  std::string graph;
  std::string message;
};

struct ClassReport {
  std::size_t n = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t bipartite = 0;
  std::uint64_t members = 0;  // bipartite and P7-free, i.e. count_class(n)
  std::uint64_t checked = 0;
  std::size_t max_nodes = 0;
  std::size_t max_leaves = 0;
  std::size_t max_bits = 0;
  std::vector<ClassFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
  void merge(const ClassReport& other);
  std::string to_text() const;
  std::string to_json() const;
};

ClassReport verify_class(std::size_t n, const OracleOptions& options = {});
ClassReport verify_corpus(std::span<const BipartiteGraph> corpus);

// Rejection sampling: random sides, each cross pair an edge with probability
// edge_prob, until the graph is P7-free. Deterministic in seed.
BipartiteGraph random_p7free(std::size_t n, double edge_prob, std::uint64_t seed,
                             std::size_t rejection_budget = 100000);

}  // namespace chaindec
