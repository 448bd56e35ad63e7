#include "chaindec/neighbourhood.hpp"

#include <string>

namespace chaindec {

SimpleGraph::SimpleGraph(VertexSet vertices) : vertices_(std::move(vertices)) {
  if (!vertices_.empty()) adj_.resize(vertices_.back() + 1);
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u), {u});
  for (VertexId x : {u, v})
    if (!vertices_.contains(x)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(x), {x});
  adj_[u].insert(v);
  adj_[v].insert(u);
}

const VertexSet& SimpleGraph::neighbours(VertexId v) const {
  if (!vertices_.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v), {v});
  return adj_[v];
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (VertexId v : vertices_) twice += adj_[v].size();
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (VertexId u : vertices_)
    for (VertexId v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertices_ != b.vertices_) return false;
  for (VertexId v : a.vertices_)
    if (a.adj_[v] != b.adj_[v]) return false;
  return true;
}

SimpleGraph induced_subgraph(const SimpleGraph& h, const VertexSet& keep) {
  if (!keep.is_subset_of(h.vertices())) {
    const VertexId stray = (keep - h.vertices()).front();
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(stray), {stray});
  }
  SimpleGraph out(keep);
  for (VertexId u : keep)
    for (VertexId v : h.neighbours(u) & keep)
      if (u < v) out.add_edge(u, v);
  return out;
}

std::vector<VertexSet> connected_components(const SimpleGraph& h) {
  std::vector<VertexSet> out;
  VertexSet unseen = h.vertices();
  while (!unseen.empty()) {
    VertexSet comp{unseen.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (VertexId v : frontier) next |= h.neighbours(v);
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

SimpleGraph neighbourhood_graph(const BipartiteGraph& g, Side side) {
  const VertexSet& part = g.part(side);
  SimpleGraph h(part);
  for (VertexId x : part) {
    // Vertices at distance two from x are exactly its partners.
    VertexSet reach;
    for (VertexId w : g.neighbours(x)) reach |= g.neighbours(w);
    for (VertexId y : reach)
      if (x < y) h.add_edge(x, y);
  }
  return h;
}

bool is_complete_graph(const SimpleGraph& h) {
  const std::size_t n = h.order();
  for (VertexId v : h.vertices())
    if (h.neighbours(v).size() + 1 != n) return false;
  return true;
}

std::optional<QuasiThresholdWitness> quasi_threshold_witness(const SimpleGraph& h) {
  for (VertexId u : h.vertices()) {
    VertexSet closed_u = h.neighbours(u);
    closed_u.insert(u);
    for (VertexId v : h.neighbours(u)) {
      if (v < u) continue;
      VertexSet closed_v = h.neighbours(v);
      closed_v.insert(v);
      const VertexSet only_u = closed_u - closed_v;
      const VertexSet only_v = closed_v - closed_u;
      if (only_u.empty() || only_v.empty()) continue;
      const VertexId x = only_u.front();
      const VertexId y = only_v.front();
      if (h.adjacent(x, y)) return QuasiThresholdWitness{QuasiThresholdWitness::Kind::C4, {x, u, v, y}};
      return QuasiThresholdWitness{QuasiThresholdWitness::Kind::P4, {x, u, v, y}};
    }
  }
  return std::nullopt;
}

CliqueCutset universal_clique_cutset(const SimpleGraph& h) {
  if (connected_components(h).size() != 1)
    throw Error(ErrorCode::DisconnectedInput, "clique cutset needs a connected graph");
  if (is_complete_graph(h)) throw Error(ErrorCode::CompleteInput, "complete graph has no cutset");
  if (auto w = quasi_threshold_witness(h)) {
    const auto& v = w->vertices;
    throw Error(ErrorCode::NotQuasiThreshold,
                std::string(w->kind == QuasiThresholdWitness::Kind::P4 ? "induced P4" : "induced C4") +
                    " on " + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                    std::to_string(v[2]) + "," + std::to_string(v[3]),
                {v.begin(), v.end()});
  }

  CliqueCutset out;
  const std::size_t n = h.order();
  for (VertexId v : h.vertices())
    if (h.neighbours(v).size() + 1 == n) out.universal.insert(v);
  out.parts = connected_components(induced_subgraph(h, h.vertices() - out.universal));
  // Holds for every connected non-complete quasi-threshold graph.
  if (out.universal.empty() || out.parts.size() < 2)
    throw Error(ErrorCode::NotQuasiThreshold, "universal vertices do not separate the graph");
  return out;
}

}  // namespace chaindec
