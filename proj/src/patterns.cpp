#include "chaindec/patterns.hpp"

namespace chaindec {

namespace {

// Depth-first extension in ascending label order; the first complete path
// reached is the lexicographically least one.
class PathSearch {
 public:
  PathSearch(const BipartiteGraph& g, std::size_t k) : g_(g), k_(k) {}

  std::optional<InducedPathWitness> run() {
    for (VertexId start : g_.vertices()) {
      path_.assign(1, start);
      if (extend(VertexSet{start}, VertexSet{})) return InducedPathWitness{path_};
    }
    return std::nullopt;
  }

 private:
  // `used` holds the path; `blocked` holds neighbours of every path vertex but the last.
  bool extend(const VertexSet& used, const VertexSet& blocked) {
    if (path_.size() == k_) return true;
    const VertexId tail = path_.back();
    const VertexSet candidates = g_.neighbours(tail) - used - blocked;
    const VertexSet next_blocked = blocked | g_.neighbours(tail);
    for (VertexId v : candidates) {
      path_.push_back(v);
      VertexSet next_used = used;
      next_used.insert(v);
      if (extend(next_used, next_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::size_t k_;
  std::vector<VertexId> path_;
};

}  // namespace

std::optional<InducedPathWitness> find_induced_path(const BipartiteGraph& g, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "induced path length must be at least 1");
  if (k > g.order()) return std::nullopt;
  return PathSearch(g, k).run();
}

bool is_p7_free(const BipartiteGraph& g) { return !find_induced_path(g, 7).has_value(); }

bool is_induced_path(const BipartiteGraph& g, const std::vector<VertexId>& sequence) {
  VertexSet seen;
  for (VertexId v : sequence) {
    if (!g.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (g.adjacent(sequence[i], sequence[j]) != (j == i + 1)) return false;
  return true;
}

}  // namespace chaindec
