#pragma once

#include <cstddef>

#include "chaindec/bigraph.hpp"

// Named graphs shared by the tests, the acceptance suite and data/*.bg.
namespace chaindec::fixtures {

// Path 1-2-...-n with odd vertices on the left.
BipartiteGraph path(std::size_t n);
// Cycle 1-2-...-n-1 (n even) with odd vertices on the left.
BipartiteGraph cycle(std::size_t n);

inline BipartiteGraph p7() { return path(7); }
inline BipartiteGraph c6() { return cycle(6); }
BipartiteGraph k2();
BipartiteGraph two_k2();
// Left {1,2,3,4}, right {5,6,7,8}; P7-free, connected and co-connected.
BipartiteGraph g8();
// Left {1,3,5}, right {2,4,6}, edges 1-2, 3-4, 5-2, 5-4, 5-6.
BipartiteGraph six_vertex();
// Complete bipartite graph with vertices 1..left on the left, the rest on the right.
BipartiteGraph biclique(std::size_t left, std::size_t right);

}  // namespace chaindec::fixtures
