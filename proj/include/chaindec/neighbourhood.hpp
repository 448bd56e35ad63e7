#pragma once

#include <array>
#include <optional>
#include <vector>

#include "chaindec/bigraph.hpp"

namespace chaindec {

// Plain undirected graph on labelled vertices. Used for the neighbourhood
// graphs of the two parts of a bipartite graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(VertexSet vertices);

  void add_edge(VertexId u, VertexId v);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const VertexSet& neighbours(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const noexcept {
    return u < adj_.size() && adj_[u].contains(v);
  }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept;
  std::vector<Edge> edges() const;  // (u, v) with u < v, ascending

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

 private:
  VertexSet vertices_;
  std::vector<VertexSet> adj_;
};

SimpleGraph induced_subgraph(const SimpleGraph& h, const VertexSet& keep);
std::vector<VertexSet> connected_components(const SimpleGraph& h);

// The part `side` of g, with x ~ y iff x and y share a neighbour in g.
SimpleGraph neighbourhood_graph(const BipartiteGraph& g, Side side);

bool is_complete_graph(const SimpleGraph& h);

struct QuasiThresholdWitness {
  enum class Kind { P4, C4 };
  Kind kind = Kind::P4;
  // Path order for P4, cyclic order for C4.
  std::array<VertexId, 4> vertices{};
  friend bool operator==(const QuasiThresholdWitness&, const QuasiThresholdWitness&) = default;
};

// An induced P4 or C4, or nullopt when h is quasi-threshold.
//
// h contains neither pattern iff the closed neighbourhoods of the two ends of
// every edge are nested. For the first edge uv (ascending) where they are not,
// pick x in N[u]-N[v] and y in N[v]-N[u]: x-u-v-y is an induced P4 when x, y
// are non-adjacent and an induced C4 otherwise.
std::optional<QuasiThresholdWitness> quasi_threshold_witness(const SimpleGraph& h);

struct CliqueCutset {
  VertexSet universal;
  std::vector<VertexSet> parts;
};

// For h connected, non-complete and quasi-threshold: the set of vertices
// adjacent to every other vertex, and the components left after removing it
// (at least two, ordered by smallest label).
CliqueCutset universal_clique_cutset(const SimpleGraph& h);

}  // namespace chaindec
