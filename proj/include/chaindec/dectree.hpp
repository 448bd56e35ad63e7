#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "chaindec/bigraph.hpp"
#include "chaindec/chain.hpp"

namespace chaindec {

struct LeafLabel {
  VertexId vertex = 0;
  Side side = Side::Left;
  friend bool operator==(const LeafLabel&, const LeafLabel&) = default;
};

struct UnionLabel {
  friend bool operator==(const UnionLabel&, const UnionLabel&) = default;
};

struct CoUnionLabel {
  friend bool operator==(const CoUnionLabel&, const CoUnionLabel&) = default;
};

// (k, v1, v2, CHAIN): v1 is the marker taken from D_1 into the first child,
// v2 the marker taken from B_1 into the second one.
struct ChainLabel {
  std::uint32_t k = 2;
  VertexId v1 = 0;
  VertexId v2 = 0;
  Handedness handedness = Handedness::Left;
  friend bool operator==(const ChainLabel&, const ChainLabel&) = default;
};

// Same fields as ChainLabel, applied to the bipartite complement.
struct CoChainLabel : ChainLabel {
  friend bool operator==(const CoChainLabel&, const CoChainLabel&) = default;
};

using NodeLabel = std::variant<LeafLabel, UnionLabel, CoUnionLabel, ChainLabel, CoChainLabel>;

bool is_leaf(const NodeLabel& label) noexcept;

// Rooted binary tree with ordered children, stored as an arena. Node 0 is the
// root; nodes produced by build_tree and decode_stream are in pre-order.
class DecompositionTree {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId npos = std::numeric_limits<NodeId>::max();

  struct Node {
    NodeLabel label;
    NodeId first = npos;
    NodeId second = npos;
  };

  NodeId add(NodeLabel label);
  void set_children(NodeId parent, NodeId first, NodeId second);

  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return 0; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  // Structural equality from the roots down; arena layout is not compared.
  friend bool operator==(const DecompositionTree& a, const DecompositionTree& b);

 private:
  std::vector<Node> nodes_;
};

// Reported for every Chain / CoChain node while the tree is built. `graph`
// is the graph the decomposition refers to: the node's graph for a chain,
// its bipartite complement for a co-chain.
struct ChainEvent {
  const BipartiteGraph& graph;
  const ChainDecomposition& decomposition;
  bool complemented;
};

struct BuildOptions {
  // Run find_induced_path(g, 7) first and fail with InducedP7Found.
  bool check_p7 = false;
  std::function<void(const ChainEvent&)> on_chain;
};

// T(G) by the first applicable rule at every node: single vertex, union,
// co-union, chain (left then right), co-chain (left then right).
DecompositionTree build_tree(const BipartiteGraph& g, const BuildOptions& options = {});

BipartiteGraph decode_tree(const DecompositionTree& t);

struct TreeMetrics {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  friend bool operator==(const TreeMetrics&, const TreeMetrics&) = default;
};

TreeMetrics tree_metrics(const DecompositionTree& t);

// Upper bounds for a 2-decomposition tree of an n-element set: at most
// 8n-17 nodes and 4(n-2) leaves for n >= 3; 2^n - 1 and 2^(n-1) below.
std::size_t node_bound(std::size_t n);
std::size_t leaf_bound(std::size_t n);

// A rooted binary tree whose nodes carry vertex sets S(v).
struct SetTree {
  struct Node {
    VertexSet set;
    std::size_t first = DecompositionTree::npos;
    std::size_t second = DecompositionTree::npos;
  };
  std::vector<Node> nodes;  // node 0 is the root
};

// S(v) for every node of t: the labels on the leaves below v.
SetTree subset_tree(const DecompositionTree& t);

struct SetTreeViolation {
  std::string clause;  // "1", "2", "3a", "3b", "3c" or "shape"
  std::size_t node = 0;
  std::string detail;
};

struct SetTreeReport {
  std::vector<SetTreeViolation> violations;
  std::size_t max_overlap = 0;  // max of |S1| + |S2| - |S| over internal nodes
  bool ok() const noexcept { return violations.empty(); }
};

// Checks the k-decomposition tree clauses against the ground set.
SetTreeReport verify_k_decomposition(const SetTree& t, const VertexSet& ground, std::size_t k);

SetTreeReport verify_2decomposition(const DecompositionTree& t, const VertexSet& ground);
SetTreeReport verify_2decomposition(const DecompositionTree& t);

}  // namespace chaindec
