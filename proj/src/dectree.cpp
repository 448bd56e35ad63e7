#include "chaindec/dectree.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "chaindec/neighbourhood.hpp"
#include "chaindec/patterns.hpp"

namespace chaindec {

bool is_leaf(const NodeLabel& label) noexcept { return std::holds_alternative<LeafLabel>(label); }

DecompositionTree::NodeId DecompositionTree::add(NodeLabel label) {
  nodes_.push_back({std::move(label), npos, npos});
  return nodes_.size() - 1;
}

void DecompositionTree::set_children(NodeId parent, NodeId first, NodeId second) {
  auto& n = nodes_.at(parent);
  n.first = first;
  n.second = second;
}

namespace {

bool same_subtree(const DecompositionTree& a, DecompositionTree::NodeId x, const DecompositionTree& b,
                  DecompositionTree::NodeId y) {
  constexpr auto npos = DecompositionTree::npos;
  if ((x == npos) != (y == npos)) return false;
  if (x == npos) return true;
  const auto& nx = a.node(x);
  const auto& ny = b.node(y);
  return nx.label == ny.label && same_subtree(a, nx.first, b, ny.first) && same_subtree(a, nx.second, b, ny.second);
}

class TreeBuilder {
 public:
  TreeBuilder(const BuildOptions& options) : options_(options) {}

  DecompositionTree take() && { return std::move(tree_); }

  DecompositionTree::NodeId build(const BipartiteGraph& g) {
    if (g.order() == 0) throw Error(ErrorCode::InvalidArgument, "cannot decompose an empty graph");
    if (g.order() == 1) {
      const VertexId v = g.vertices().front();
      return tree_.add(LeafLabel{v, g.side(v)});
    }

    const auto comps = connected_components(g);
    if (comps.size() > 1) return split(UnionLabel{}, g, comps.front());

    const BipartiteGraph h = bipartite_complement(g);
    const auto co_comps = connected_components(h);
    if (co_comps.size() > 1) return split(CoUnionLabel{}, h, co_comps.front());

    for (Handedness hand : {Handedness::Left, Handedness::Right})
      if (!is_complete_graph(neighbourhood_graph(g, primary_side(hand)))) return chain(g, hand, false);
    for (Handedness hand : {Handedness::Left, Handedness::Right})
      if (!is_complete_graph(neighbourhood_graph(h, primary_side(hand)))) return chain(h, hand, true);

    throw Error(ErrorCode::NotDecomposable, "no decomposition rule applies to a graph on " +
                                                 std::to_string(g.order()) + " vertices",
                g.vertices().to_vector());
  }

 private:
  // UNION / CO-UNION: `space` is g itself or its complement; `first` the
  // component holding the smallest label.
  DecompositionTree::NodeId split(NodeLabel label, const BipartiteGraph& space, const VertexSet& first) {
    const auto id = tree_.add(std::move(label));
    const auto a = build(induced_subgraph(space, first));
    const auto b = build(induced_subgraph(space, space.vertices() - first));
    tree_.set_children(id, a, b);
    return id;
  }

  DecompositionTree::NodeId chain(const BipartiteGraph& space, Handedness hand, bool complemented) {
    const ChainDecomposition dec = chain_from_cutset(space, hand);
    if (options_.on_chain) options_.on_chain(ChainEvent{space, dec, complemented});
    const ChainLayer& first = dec.layers.front();
    if (dec.k() < 2 || first.b.empty() || first.d.empty())
      throw Error(ErrorCode::NotDecomposable, "chain decomposition of a connected graph has k < 2");

    ChainLabel label{static_cast<std::uint32_t>(dec.k()), first.d.front(), first.b.front(), hand};
    VertexSet s1 = dec.all_a() | dec.all_b();
    s1.insert(label.v1);
    VertexSet s2 = dec.all_c() | dec.all_d();
    s2.insert(label.v2);

    const auto id = complemented ? tree_.add(CoChainLabel{label}) : tree_.add(label);
    const auto a = build(induced_subgraph(space, s1));
    const auto b = build(induced_subgraph(space, s2));
    tree_.set_children(id, a, b);
    return id;
  }

  const BuildOptions& options_;
  DecompositionTree tree_;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedTree, what); }

BipartiteGraph decode_chain(const ChainLabel& label, const BipartiteGraph& f1, const BipartiteGraph& f2) {
  if (label.k < 2) malformed("chain node with k < 2");
  const Side p = primary_side(label.handedness);
  const Side o = opposite(p);
  if (!f1.part(o).contains(label.v1)) malformed("marker v1 missing from the first child");
  if (!f2.part(o).contains(label.v2)) malformed("marker v2 missing from the second child");
  const VertexSet a1 = f1.part(p) - f1.neighbours(label.v1);
  const VertexSet c1 = f2.part(p) - f2.neighbours(label.v2);
  VertexSet keep1 = f1.vertices();
  keep1.erase(label.v1);
  VertexSet keep2 = f2.vertices();
  keep2.erase(label.v2);
  if (keep1.intersects(keep2)) malformed("chain children overlap beyond the two markers");
  try {
    return reconstruct_from_components(induced_subgraph(f1, keep1), induced_subgraph(f2, keep2), label.k, a1, c1,
                                       label.handedness);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedComponents) malformed(e.what());
    throw;
  }
}

BipartiteGraph decode_node(const DecompositionTree& t, DecompositionTree::NodeId id, std::size_t depth) {
  if (depth > t.size()) malformed("tree contains a cycle");
  const auto& node = t.node(id);
  if (const auto* leaf = std::get_if<LeafLabel>(&node.label)) {
    if (node.first != DecompositionTree::npos || node.second != DecompositionTree::npos)
      malformed("leaf with children");
    if (leaf->vertex == 0) malformed("leaf label 0");
    return std::move(GraphBuilder().add_vertex(leaf->vertex, leaf->side)).build();
  }
  if (node.first == DecompositionTree::npos || node.second == DecompositionTree::npos)
    malformed("internal node without two children");
  const BipartiteGraph f1 = decode_node(t, node.first, depth + 1);
  const BipartiteGraph f2 = decode_node(t, node.second, depth + 1);

  auto join = [](const BipartiteGraph& a, const BipartiteGraph& b) {
    if (a.vertices().intersects(b.vertices())) malformed("union children share a vertex");
    return disjoint_union(a, b);
  };
  return std::visit(
      [&](const auto& label) -> BipartiteGraph {
        using L = std::decay_t<decltype(label)>;
        if constexpr (std::is_same_v<L, UnionLabel>) {
          return join(f1, f2);
        } else if constexpr (std::is_same_v<L, CoUnionLabel>) {
          return bipartite_complement(join(f1, f2));
        } else if constexpr (std::is_same_v<L, ChainLabel>) {
          return decode_chain(label, f1, f2);
        } else if constexpr (std::is_same_v<L, CoChainLabel>) {
          return bipartite_complement(decode_chain(label, f1, f2));
        } else {
          malformed("unexpected leaf");
        }
      },
      node.label);
}

}  // namespace

bool operator==(const DecompositionTree& a, const DecompositionTree& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return same_subtree(a, a.root(), b, b.root());
}

DecompositionTree build_tree(const BipartiteGraph& g, const BuildOptions& options) {
  if (options.check_p7) {
    if (auto path = find_induced_path(g, 7)) {
      std::string text = "input contains an induced P7: ";
      for (std::size_t i = 0; i < path->vertices.size(); ++i)
        text += (i ? "," : "") + std::to_string(path->vertices[i]);
      throw Error(ErrorCode::InducedP7Found, text, path->vertices);
    }
  }
  TreeBuilder builder(options);
  builder.build(g);
  return std::move(builder).take();
}

BipartiteGraph decode_tree(const DecompositionTree& t) {
  if (t.empty()) malformed("empty tree");
  return decode_node(t, t.root(), 0);
}

TreeMetrics tree_metrics(const DecompositionTree& t) {
  TreeMetrics m;
  m.nodes = t.size();
  for (const auto& n : t.nodes())
    if (is_leaf(n.label)) ++m.leaves;
  return m;
}

std::size_t node_bound(std::size_t n) { return n >= 3 ? 8 * n - 17 : (std::size_t{1} << n) - 1; }

std::size_t leaf_bound(std::size_t n) {
  if (n == 0) return 0;
  return n >= 3 ? 4 * (n - 2) : std::size_t{1} << (n - 1);
}

SetTree subset_tree(const DecompositionTree& t) {
  SetTree out;
  out.nodes.resize(t.size());
  // Children always follow their parent in the arena, so a reverse sweep is post-order.
  for (std::size_t i = t.size(); i-- > 0;) {
    const auto& n = t.node(i);
    auto& s = out.nodes[i];
    s.first = n.first;
    s.second = n.second;
    if (const auto* leaf = std::get_if<LeafLabel>(&n.label)) {
      s.set = VertexSet{leaf->vertex};
    } else {
      if (n.first <= i || n.second <= i || n.first >= t.size() || n.second >= t.size())
        throw Error(ErrorCode::MalformedTree, "children must follow their parent");
      s.set = out.nodes[n.first].set | out.nodes[n.second].set;
    }
  }
  return out;
}

SetTreeReport verify_k_decomposition(const SetTree& t, const VertexSet& ground, std::size_t k) {
  SetTreeReport report;
  auto add = [&](std::string clause, std::size_t node, std::string detail) {
    report.violations.push_back({std::move(clause), node, std::move(detail)});
  };
  if (t.nodes.empty()) {
    add("shape", 0, "tree has no nodes");
    return report;
  }
  if (t.nodes.front().set != ground) add("1", 0, "root set differs from the ground set");
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (i != 0 && n.set == ground) add("1", i, "non-root node carries the whole ground set");
    const bool leaf = n.first == DecompositionTree::npos && n.second == DecompositionTree::npos;
    if (leaf != (n.set.size() == 1))
      add("2", i, leaf ? "leaf set does not have exactly one element" : "internal node with a singleton set");
    if (leaf) continue;
    if (n.first >= t.nodes.size() || n.second >= t.nodes.size()) {
      add("shape", i, "internal node without two children");
      continue;
    }
    const VertexSet& s1 = t.nodes[n.first].set;
    const VertexSet& s2 = t.nodes[n.second].set;
    if ((s1 | s2) != n.set) add("3a", i, "children sets do not cover the node set");
    const std::size_t total = s1.size() + s2.size();
    if (total < n.set.size() || total > n.set.size() + k)
      add("3b", i, "children sizes sum to " + std::to_string(total) + " for a set of " +
                       std::to_string(n.set.size()));
    if (total >= n.set.size()) report.max_overlap = std::max(report.max_overlap, total - n.set.size());
    if ((s1 - s2).empty() || (s2 - s1).empty()) add("3c", i, "a child has no private element");
  }
  return report;
}

SetTreeReport verify_2decomposition(const DecompositionTree& t, const VertexSet& ground) {
  return verify_k_decomposition(subset_tree(t), ground, 2);
}

SetTreeReport verify_2decomposition(const DecompositionTree& t) {
  const SetTree s = subset_tree(t);
  return verify_k_decomposition(s, s.nodes.empty() ? VertexSet{} : s.nodes.front().set, 2);
}

}  // namespace chaindec
