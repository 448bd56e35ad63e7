#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaindec/bigraph.hpp"

namespace chaindec {

// Which part of the graph holds the A and C blocks: Left for a left
// decomposition, Right for a right one.
enum class Handedness : std::uint8_t { Left, Right };

constexpr Side primary_side(Handedness h) noexcept { return h == Handedness::Left ? Side::Left : Side::Right; }

// One rung (A_i, B_i, C_i, D_i) of a chain decomposition. A and C lie in the
// primary part, B and D in the other one.
struct ChainLayer {
  VertexSet a, b, c, d;
  friend bool operator==(const ChainLayer&, const ChainLayer&) = default;
};

// [(A_1..A_k)(B_1..B_k)(C_1..C_k)(D_1..D_k)] stored layer by layer.
struct ChainDecomposition {
  Handedness handedness = Handedness::Left;
  std::vector<ChainLayer> layers;

  std::size_t k() const noexcept { return layers.size(); }
  VertexSet all_a() const;
  VertexSet all_b() const;
  VertexSet all_c() const;
  VertexSet all_d() const;
  // (C, D, A, B): the same decomposition with its components exchanged.
  ChainDecomposition swapped() const;

  friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

enum class ChainAxiom {
  Partition,              // the 4k blocks partition the two parts
  NonEmptyLayer,          // layers before the last are full, the last is not empty
  NeighbourInBlock,       // B_i has neighbours in A_i, D_i in C_i
  NonNeighbourInPrevious, // A_i has a non-neighbour in B_{i-1}, C_i in D_{i-1}
  SameSideLadder,         // A_i vs B_j and C_i vs D_j
  CrossLadder,            // A_i vs D_j and C_i vs B_j
};

std::string_view to_string(ChainAxiom axiom);

struct ChainViolation {
  ChainAxiom axiom;
  std::size_t layer = 0;  // 1-based layer the clause is about
  std::optional<VertexId> first;
  std::optional<VertexId> second;
  std::string detail;

  std::string describe() const;
};

struct ChainReport {
  std::vector<ChainViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ChainReport validate_chain(const BipartiteGraph& g, const ChainDecomposition& dec);

// Sets (A, Q, C) split the primary part, (B, R, D) the other one.
struct LemmaEightInstance {
  VertexSet a, q, c;
  VertexSet b, r, d;
};

// Empty when the instance meets all eight preconditions, otherwise the
// number and text of the first failing clause.
std::optional<std::pair<int, std::string>> check_instance(const BipartiteGraph& g, const LemmaEightInstance& inst,
                                                          Handedness handedness);

// Chain decomposition whose first layer is exactly (A, B, C, D). Throws
// BadInstance for a failed precondition and InducedP7Found (with the seven
// vertices in path order) when g is not P7-free.
ChainDecomposition lemma8_build(const BipartiteGraph& g, const LemmaEightInstance& inst,
                                Handedness handedness = Handedness::Left);

// Decomposition of a connected graph whose neighbourhood graph on the
// primary part is not complete, seeded by that graph's universal clique cutset.
ChainDecomposition chain_from_cutset(const BipartiteGraph& g, Handedness handedness);

// (G[A u B], G[C u D]); throws InvalidDecomposition if dec fails validation.
std::pair<BipartiteGraph, BipartiteGraph> components_of(const BipartiteGraph& g, const ChainDecomposition& dec);

// Rebuilds the graph from the two components, k, A_1 and C_1.
BipartiteGraph reconstruct_from_components(const BipartiteGraph& g1, const BipartiteGraph& g2, std::size_t k,
                                           const VertexSet& a1, const VertexSet& c1,
                                           Handedness handedness = Handedness::Left);

}  // namespace chaindec
