#include "chaindec/fixtures.hpp"

#include <vector>

namespace chaindec::fixtures {

namespace {

std::vector<Side> alternating(std::size_t n) {
  std::vector<Side> sides;
  for (std::size_t i = 1; i <= n; ++i) sides.push_back(i % 2 == 1 ? Side::Left : Side::Right);
  return sides;
}

}  // namespace

BipartiteGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return make_graph(n, alternating(n), edges);
}

BipartiteGraph cycle(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "bipartite cycles have even length >= 4");
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({static_cast<VertexId>(n), 1});
  return make_graph(n, alternating(n), edges);
}

BipartiteGraph k2() { return path(2); }

BipartiteGraph two_k2() {
  const std::vector<Edge> edges{{1, 2}, {3, 4}};
  return make_graph(4, alternating(4), edges);
}

BipartiteGraph g8() {
  const std::vector<Side> sides{Side::Left,  Side::Left,  Side::Left,  Side::Left,
                                Side::Right, Side::Right, Side::Right, Side::Right};
  const std::vector<Edge> edges{{1, 5}, {2, 5}, {2, 6}, {3, 7}, {4, 5}, {4, 7}, {4, 8}};
  return make_graph(8, sides, edges);
}

BipartiteGraph six_vertex() {
  const std::vector<Edge> edges{{1, 2}, {3, 4}, {5, 2}, {5, 4}, {5, 6}};
  return make_graph(6, alternating(6), edges);
}

BipartiteGraph biclique(std::size_t left, std::size_t right) {
  std::vector<Side> sides(left, Side::Left);
  sides.resize(left + right, Side::Right);
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= left; ++u)
    for (auto v = static_cast<VertexId>(left + 1); v <= left + right; ++v) edges.push_back({u, v});
  return make_graph(left + right, sides, edges);
}

}  // namespace chaindec::fixtures
