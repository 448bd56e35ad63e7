#include "chaindec/bigraph.hpp"

#include <ostream>
#include <string>

namespace chaindec {

namespace {

std::string label(VertexId v) { return std::to_string(v); }

void require_subset(const BipartiteGraph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) {
    const VertexSet stray = s - g.vertices();
    throw Error(ErrorCode::UnknownVertex, "vertex " + label(stray.front()) + " is not in the graph",
                {stray.front()});
  }
}

}  // namespace

Side BipartiteGraph::side(VertexId v) const {
  if (!vertices_.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + label(v), {v});
  return left_.contains(v) ? Side::Left : Side::Right;
}

const VertexSet& BipartiteGraph::neighbours(VertexId v) const {
  if (!vertices_.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + label(v), {v});
  return adj_[v];
}

std::size_t BipartiteGraph::edge_count() const noexcept {
  std::size_t m = 0;
  for (VertexId u : left_) m += adj_[u].size();
  return m;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (VertexId u : left_)
    for (VertexId v : adj_[u]) out.push_back({u, v});
  return out;
}

bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.vertices_ != b.vertices_ || a.left_ != b.left_) return false;
  for (VertexId v : a.left_)
    if (a.adj_[v] != b.adj_[v]) return false;
  return true;
}

GraphBuilder& GraphBuilder::add_vertex(VertexId v, Side s) {
  if (v == 0) throw Error(ErrorCode::UnknownVertex, "vertex labels are 1-based", {v});
  if (g_.vertices_.contains(v)) {
    if (g_.side(v) != s)
      throw Error(ErrorCode::InvalidArgument, "vertex " + label(v) + " already placed on the other side",
                  {v});
    return *this;
  }
  g_.vertices_.insert(v);
  (s == Side::Left ? g_.left_ : g_.right_).insert(v);
  if (g_.adj_.size() <= v) g_.adj_.resize(v + 1);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + label(u), {u});
  for (VertexId x : {u, v})
    if (!g_.vertices_.contains(x)) throw Error(ErrorCode::UnknownVertex, "vertex " + label(x), {x});
  if (g_.left_.contains(u) == g_.left_.contains(v))
    throw Error(ErrorCode::SameSideEdge, "edge " + label(u) + "-" + label(v) + " joins one side", {u, v});
  g_.adj_[u].insert(v);
  g_.adj_[v].insert(u);
  return *this;
}

BipartiteGraph make_graph(std::size_t n, std::span<const Side> sides, std::span<const Edge> edges) {
  if (sides.size() != n)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(n) + " sides, got " + std::to_string(sides.size()));
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(static_cast<VertexId>(i + 1), sides[i]);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  GraphBuilder b;
  for (VertexId v : g.vertices()) b.add_vertex(v, g.side(v));
  for (VertexId u : g.left())
    for (VertexId w : g.right() - g.neighbours(u)) b.add_edge(u, w);
  return std::move(b).build();
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& keep) {
  require_subset(g, keep);
  GraphBuilder b;
  for (VertexId v : keep) b.add_vertex(v, g.side(v));
  for (VertexId u : keep & g.left())
    for (VertexId w : g.neighbours(u) & keep) b.add_edge(u, w);
  return std::move(b).build();
}

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.vertices().intersects(b.vertices()))
    throw Error(ErrorCode::OverlappingSets, "union operands share a vertex",
                {(a.vertices() & b.vertices()).front()});
  GraphBuilder out(a);
  for (VertexId v : b.vertices()) out.add_vertex(v, b.side(v));
  for (const Edge& e : b.edges()) out.add_edge(e.u, e.v);
  return std::move(out).build();
}

std::vector<VertexSet> connected_components(const BipartiteGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp{unseen.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (VertexId v : frontier) next |= g.neighbours(v);
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const BipartiteGraph& g) { return connected_components(g).size() <= 1; }

VertexSet neighbourhood(const BipartiteGraph& g, const VertexSet& from) {
  require_subset(g, from);
  VertexSet out;
  for (VertexId v : from) out |= g.neighbours(v);
  return out - from;
}

namespace {

void require_disjoint(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
  require_subset(g, x);
  require_subset(g, y);
  if (x.intersects(y))
    throw Error(ErrorCode::OverlappingSets, "sets share vertex " + label((x & y).front()), {(x & y).front()});
}

}  // namespace

bool is_complete_to(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(g, x, y);
  for (VertexId u : x) {
    const VertexSet cross = y & g.part(opposite(g.side(u)));
    if (!cross.is_subset_of(g.neighbours(u))) return false;
  }
  return true;
}

bool is_anticomplete_to(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(g, x, y);
  for (VertexId u : x)
    if (g.neighbours(u).intersects(y)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const BipartiteGraph& g) {
  os << "L" << g.left() << " R" << g.right() << " E{";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ',';
    os << e.u << '-' << e.v;
    first = false;
  }
  return os << '}';
}

}  // namespace chaindec
