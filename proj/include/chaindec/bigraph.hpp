#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "chaindec/error.hpp"
#include "chaindec/vertex_set.hpp"

namespace chaindec {

enum class Side : std::uint8_t { Left, Right };

constexpr Side opposite(Side s) noexcept { return s == Side::Left ? Side::Right : Side::Left; }

// An edge as given by a caller; make_graph and the builder accept either orientation.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Labelled bipartite graph with a fixed bipartition. Labels are preserved by
// every operation; two graphs are equal iff they have the same vertices, the
// same side for each vertex and the same edges.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  const VertexSet& vertices() const noexcept { return vertices_; }
  const VertexSet& left() const noexcept { return left_; }
  const VertexSet& right() const noexcept { return right_; }
  const VertexSet& part(Side s) const noexcept { return s == Side::Left ? left_ : right_; }

  bool contains(VertexId v) const noexcept { return vertices_.contains(v); }
  // Throws UnknownVertex for labels outside the graph.
  Side side(VertexId v) const;
  const VertexSet& neighbours(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const noexcept {
    return u < adj_.size() && adj_[u].contains(v);
  }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept;
  // (left, right) pairs in ascending lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b);

 private:
  friend class GraphBuilder;

  VertexSet vertices_;
  VertexSet left_;
  VertexSet right_;
  // Indexed by label; rows of absent labels are empty.
  std::vector<VertexSet> adj_;
};

// Incremental construction with the same validation as make_graph.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(BipartiteGraph start) : g_(std::move(start)) {}

  // Re-adding a vertex on the same side is a no-op; on the other side it is an error.
  GraphBuilder& add_vertex(VertexId v, Side s);
  // Idempotent for an existing edge.
  GraphBuilder& add_edge(VertexId u, VertexId v);
  const BipartiteGraph& peek() const noexcept { return g_; }
  BipartiteGraph build() && { return std::move(g_); }

 private:
  BipartiteGraph g_;
};

// Vertices 1..n with sides[i-1] the side of vertex i.
BipartiteGraph make_graph(std::size_t n, std::span<const Side> sides, std::span<const Edge> edges);

BipartiteGraph bipartite_complement(const BipartiteGraph& g);
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& keep);
// Vertex-disjoint union; throws OverlappingSets if labels collide.
BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b);

// Maximal connected vertex sets, ordered by smallest label.
std::vector<VertexSet> connected_components(const BipartiteGraph& g);
bool is_connected(const BipartiteGraph& g);

// Vertices outside `from` with a neighbour in `from`.
VertexSet neighbourhood(const BipartiteGraph& g, const VertexSet& from);

// Every cross-side pair between x and y is an edge (resp. a non-edge).
// Same-side pairs are never edges and are not constrained.
bool is_complete_to(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_to(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);

std::ostream& operator<<(std::ostream& os, const BipartiteGraph& g);

}  // namespace chaindec
