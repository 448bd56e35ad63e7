#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chaindec/bigraph.hpp"

namespace chaindec {

// Vertices of a chordless path in path order.
struct InducedPathWitness {
  std::vector<VertexId> vertices;
  friend bool operator==(const InducedPathWitness&, const InducedPathWitness&) = default;
};

// Lexicographically least vertex sequence forming an induced path on k
// vertices, or nullopt. k must be at least 1.
std::optional<InducedPathWitness> find_induced_path(const BipartiteGraph& g, std::size_t k);

bool is_p7_free(const BipartiteGraph& g);

// Consecutive vertices adjacent, all other pairs non-adjacent, no repeats.
bool is_induced_path(const BipartiteGraph& g, const std::vector<VertexId>& sequence);

}  // namespace chaindec
