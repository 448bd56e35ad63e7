#include "chaindec/chain.hpp"

#include <array>
#include <sstream>

#include "chaindec/neighbourhood.hpp"

namespace chaindec {

namespace {

std::string str(const VertexSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

const VertexSet& no_vertices() {
  static const VertexSet empty;
  return empty;
}

// Neighbours of v, or nothing when v is not in g (partition errors are reported separately).
const VertexSet& nbrs(const BipartiteGraph& g, VertexId v) {
  return g.contains(v) ? g.neighbours(v) : no_vertices();
}

class Validator {
 public:
  Validator(const BipartiteGraph& g, const ChainDecomposition& dec)
      : g_(g), dec_(dec), primary_(primary_side(dec.handedness)) {}

  ChainReport run() {
    check_partition();
    check_nonempty();
    for (std::size_t i = 0; i < dec_.k(); ++i) {
      const auto& layer = dec_.layers[i];
      neighbour_in_block(i, layer.b, layer.a, "B", "A");
      neighbour_in_block(i, layer.d, layer.c, "D", "C");
      if (i >= 1 && i + 1 < dec_.k()) {
        non_neighbour_in_previous(i, layer.a, dec_.layers[i - 1].b, "A", "B");
        non_neighbour_in_previous(i, layer.c, dec_.layers[i - 1].d, "C", "D");
      }
      for (std::size_t j = 0; j < dec_.k(); ++j) {
        const auto& other = dec_.layers[j];
        // A_i vs B_j: anticomplete for j > i, complete for j < i-1.
        if (j > i) {
          anticomplete(ChainAxiom::SameSideLadder, i, j, layer.a, other.b, "A", "B");
          anticomplete(ChainAxiom::SameSideLadder, i, j, layer.c, other.d, "C", "D");
        } else if (j + 1 < i) {
          complete(ChainAxiom::SameSideLadder, i, j, layer.a, other.b, "A", "B");
          complete(ChainAxiom::SameSideLadder, i, j, layer.c, other.d, "C", "D");
        }
        // A_i vs D_j: complete for j < i, anticomplete for j >= i.
        if (j < i) {
          complete(ChainAxiom::CrossLadder, i, j, layer.a, other.d, "A", "D");
          complete(ChainAxiom::CrossLadder, i, j, layer.c, other.b, "C", "B");
        } else {
          anticomplete(ChainAxiom::CrossLadder, i, j, layer.a, other.d, "A", "D");
          anticomplete(ChainAxiom::CrossLadder, i, j, layer.c, other.b, "C", "B");
        }
      }
    }
    return std::move(report_);
  }

 private:
  void add(ChainAxiom axiom, std::size_t layer, std::optional<VertexId> first, std::optional<VertexId> second,
           std::string detail) {
    report_.violations.push_back({axiom, layer, first, second, std::move(detail)});
  }

  void check_partition() {
    if (dec_.k() == 0) {
      add(ChainAxiom::NonEmptyLayer, 0, std::nullopt, std::nullopt, "decomposition has no layers");
      return;
    }
    const Side other = opposite(primary_);
    auto cover = [&](Side side, bool primary) {
      VertexSet seen;
      for (std::size_t i = 0; i < dec_.k(); ++i) {
        const auto& l = dec_.layers[i];
        const std::array<std::pair<const VertexSet*, const char*>, 2> blocks =
            primary ? std::array{std::pair{&l.a, "A"}, std::pair{&l.c, "C"}}
                    : std::array{std::pair{&l.b, "B"}, std::pair{&l.d, "D"}};
        for (const auto& [set, name] : blocks) {
          for (VertexId v : *set) {
            if (!g_.part(side).contains(v))
              add(ChainAxiom::Partition, i + 1, v, std::nullopt,
                  std::string(name) + std::to_string(i + 1) + " holds " + std::to_string(v) +
                      " which is not in the expected part");
            else if (seen.contains(v))
              add(ChainAxiom::Partition, i + 1, v, std::nullopt,
                  "vertex " + std::to_string(v) + " appears in two blocks");
            seen.insert(v);
          }
        }
      }
      for (VertexId v : g_.part(side) - seen)
        add(ChainAxiom::Partition, 0, v, std::nullopt, "vertex " + std::to_string(v) + " is in no block");
    };
    cover(primary_, true);
    cover(other, false);
  }

  void check_nonempty() {
    for (std::size_t i = 0; i < dec_.k(); ++i) {
      const auto& l = dec_.layers[i];
      const bool last = i + 1 == dec_.k();
      if (last) {
        if (l.a.empty() && l.b.empty() && l.c.empty() && l.d.empty())
          add(ChainAxiom::NonEmptyLayer, i + 1, std::nullopt, std::nullopt, "last layer is empty");
        continue;
      }
      const std::array<std::pair<const VertexSet*, const char*>, 4> blocks{
          {{&l.a, "A"}, {&l.b, "B"}, {&l.c, "C"}, {&l.d, "D"}}};
      for (const auto& [set, name] : blocks)
        if (set->empty())
          add(ChainAxiom::NonEmptyLayer, i + 1, std::nullopt, std::nullopt,
              std::string(name) + std::to_string(i + 1) + " is empty");
    }
  }

  void neighbour_in_block(std::size_t i, const VertexSet& members, const VertexSet& block, const char* nm,
                          const char* nb) {
    for (VertexId v : members)
      if (!nbrs(g_, v).intersects(block))
        add(ChainAxiom::NeighbourInBlock, i + 1, v, std::nullopt,
            std::to_string(v) + " in " + nm + std::to_string(i + 1) + " has no neighbour in " + nb +
                std::to_string(i + 1) + "=" + str(block));
  }

  void non_neighbour_in_previous(std::size_t i, const VertexSet& members, const VertexSet& previous,
                                 const char* nm, const char* np) {
    for (VertexId v : members)
      if (previous.is_subset_of(nbrs(g_, v)))
        add(ChainAxiom::NonNeighbourInPrevious, i + 1, v, std::nullopt,
            std::to_string(v) + " in " + nm + std::to_string(i + 1) + " is complete to " + np +
                std::to_string(i));
  }

  void complete(ChainAxiom axiom, std::size_t i, std::size_t j, const VertexSet& x, const VertexSet& y,
                const char* nx, const char* ny) {
    for (VertexId u : x) {
      const VertexSet missing = y - nbrs(g_, u);
      if (!missing.empty()) {
        add(axiom, i + 1, u, missing.front(),
            std::string(nx) + std::to_string(i + 1) + " must be complete to " + ny + std::to_string(j + 1) +
                " but " + std::to_string(u) + "-" + std::to_string(missing.front()) + " is missing");
        return;
      }
    }
  }

  void anticomplete(ChainAxiom axiom, std::size_t i, std::size_t j, const VertexSet& x, const VertexSet& y,
                    const char* nx, const char* ny) {
    for (VertexId u : x) {
      const VertexSet hit = y & nbrs(g_, u);
      if (!hit.empty()) {
        add(axiom, i + 1, u, hit.front(),
            std::string(nx) + std::to_string(i + 1) + " must be anticomplete to " + ny + std::to_string(j + 1) +
                " but " + std::to_string(u) + "-" + std::to_string(hit.front()) + " is an edge");
        return;
      }
    }
  }

  const BipartiteGraph& g_;
  const ChainDecomposition& dec_;
  Side primary_;
  ChainReport report_;
};

bool has_neighbour_in(const BipartiteGraph& g, const VertexSet& members, const VertexSet& block) {
  for (VertexId v : members)
    if (!g.neighbours(v).intersects(block)) return false;
  return true;
}

[[noreturn]] void throw_p7(std::vector<VertexId> path, const std::string& why) {
  std::string text = why + ": ";
  for (std::size_t i = 0; i < path.size(); ++i) text += (i ? "," : "") + std::to_string(path[i]);
  throw Error(ErrorCode::InducedP7Found, text, std::move(path));
}

// Shortest path from `from` to `to` inside g[within], as a vertex sequence.
std::vector<VertexId> shortest_path(const BipartiteGraph& g, const VertexSet& within, VertexId from, VertexId to) {
  std::vector<VertexId> parent(within.back() + 1, 0);
  VertexSet seen{from};
  VertexSet frontier{from};
  while (!frontier.empty() && !seen.contains(to)) {
    VertexSet next;
    for (VertexId v : frontier)
      for (VertexId w : (g.neighbours(v) & within) - seen) {
        if (!next.contains(w)) parent[w] = v;
        next.insert(w);
      }
    seen |= next;
    frontier = std::move(next);
  }
  if (!seen.contains(to)) return {};
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  return {path.rbegin(), path.rend()};
}

}  // namespace

VertexSet ChainDecomposition::all_a() const {
  VertexSet s;
  for (const auto& l : layers) s |= l.a;
  return s;
}
VertexSet ChainDecomposition::all_b() const {
  VertexSet s;
  for (const auto& l : layers) s |= l.b;
  return s;
}
VertexSet ChainDecomposition::all_c() const {
  VertexSet s;
  for (const auto& l : layers) s |= l.c;
  return s;
}
VertexSet ChainDecomposition::all_d() const {
  VertexSet s;
  for (const auto& l : layers) s |= l.d;
  return s;
}

ChainDecomposition ChainDecomposition::swapped() const {
  ChainDecomposition out{handedness, {}};
  for (const auto& l : layers) out.layers.push_back({l.c, l.d, l.a, l.b});
  return out;
}

std::string_view to_string(ChainAxiom axiom) {
  switch (axiom) {
    case ChainAxiom::Partition: return "partition";
    case ChainAxiom::NonEmptyLayer: return "non-empty-layer";
    case ChainAxiom::NeighbourInBlock: return "neighbour-in-block";
    case ChainAxiom::NonNeighbourInPrevious: return "non-neighbour-in-previous";
    case ChainAxiom::SameSideLadder: return "same-side-ladder";
    case ChainAxiom::CrossLadder: return "cross-ladder";
  }
  return "unknown";
}

std::string ChainViolation::describe() const {
  return std::string(to_string(axiom)) + " (layer " + std::to_string(layer) + "): " + detail;
}

ChainReport validate_chain(const BipartiteGraph& g, const ChainDecomposition& dec) {
  return Validator(g, dec).run();
}

std::optional<std::pair<int, std::string>> check_instance(const BipartiteGraph& g, const LemmaEightInstance& inst,
                                                          Handedness handedness) {
  const Side p = primary_side(handedness);
  auto partitions = [](const VertexSet& whole, const VertexSet& x, const VertexSet& y, const VertexSet& z) {
    return !x.intersects(y) && !x.intersects(z) && !y.intersects(z) && (x | y | z) == whole;
  };
  if (!partitions(g.part(p), inst.a, inst.q, inst.c))
    return std::pair{1, std::string("A, Q, C do not partition the primary part")};
  if (!partitions(g.part(opposite(p)), inst.b, inst.r, inst.d))
    return std::pair{2, std::string("B, R, D do not partition the other part")};
  if (!has_neighbour_in(g, inst.b, inst.a)) return std::pair{3, std::string("a vertex of B has no neighbour in A")};
  if (!has_neighbour_in(g, inst.r, inst.q)) return std::pair{4, std::string("a vertex of R has no neighbour in Q")};
  if (!has_neighbour_in(g, inst.d, inst.c)) return std::pair{5, std::string("a vertex of D has no neighbour in C")};
  if (!is_anticomplete_to(g, inst.a, inst.r | inst.d))
    return std::pair{6, std::string("A is not anticomplete to R and D")};
  if (!is_anticomplete_to(g, inst.c, inst.b | inst.r))
    return std::pair{7, std::string("C is not anticomplete to B and R")};
  for (VertexId q : inst.q)
    if (!inst.b.is_subset_of(g.neighbours(q)) && !inst.d.is_subset_of(g.neighbours(q)))
      return std::pair{8, "vertex " + std::to_string(q) + " of Q is complete to neither B nor D"};
  return std::nullopt;
}

ChainDecomposition lemma8_build(const BipartiteGraph& g, const LemmaEightInstance& inst, Handedness handedness) {
  ChainDecomposition dec{handedness, {}};
  BipartiteGraph current = g;
  LemmaEightInstance cur = inst;
  for (;;) {
    if (auto bad = check_instance(current, cur, handedness))
      throw Error(ErrorCode::BadInstance,
                  "assumption " + std::to_string(bad->first) + " fails at layer " +
                      std::to_string(dec.k() + 1) + ": " + bad->second);
    dec.layers.push_back({cur.a, cur.b, cur.c, cur.d});
    if (cur.q.empty()) return dec;

    VertexSet qb, qd, qbd;
    for (VertexId q : cur.q) {
      const bool to_b = cur.b.is_subset_of(g.neighbours(q));
      const bool to_d = cur.d.is_subset_of(g.neighbours(q));
      (to_b && to_d ? qbd : to_b ? qb : qd).insert(q);
    }

    for (VertexId x : cur.r) {
      const VertexSet in_qb = g.neighbours(x) & qb;
      const VertexSet in_qd = g.neighbours(x) & qd;
      if (in_qb.empty() || in_qd.empty()) continue;
      const VertexId q1 = in_qb.front();
      const VertexId q2 = in_qd.front();
      const VertexId b = (cur.b - g.neighbours(q2)).front();
      const VertexId a = (g.neighbours(b) & cur.a).front();
      const VertexId d = (cur.d - g.neighbours(q1)).front();
      const VertexId c = (g.neighbours(d) & cur.c).front();
      throw_p7({a, b, q1, x, q2, d, c}, "a vertex of R sees both Q_B and Q_D");
    }

    VertexSet rb, rd;
    for (VertexId x : cur.r) {
      if (g.neighbours(x).intersects(qb)) rb.insert(x);
      if (g.neighbours(x).intersects(qd)) rd.insert(x);
    }
    const VertexSet rbd = cur.r - rb - rd;

    for (VertexId x : qbd) {
      const VertexSet miss_b = rb - g.neighbours(x);
      const VertexSet miss_d = rd - g.neighbours(x);
      if (miss_b.empty() || miss_d.empty()) continue;
      const VertexId r1 = miss_b.front();
      const VertexId q1 = (g.neighbours(r1) & qb).front();
      const VertexId d = (cur.d - g.neighbours(q1)).front();
      const VertexId r2 = miss_d.front();
      const VertexId q2 = (g.neighbours(r2) & qd).front();
      const VertexId b = (cur.b - g.neighbours(q2)).front();
      throw_p7({r1, q1, b, x, d, q2, r2}, "a vertex of Q_BD misses both R_B and R_D");
    }

    if (rb.empty()) {
      dec.layers.push_back({qd | qbd, rd | rbd, qb, {}});
      return dec;
    }
    if (rd.empty()) {
      dec.layers.push_back({qd, {}, qb | qbd, rb | rbd});
      return dec;
    }
    current = induced_subgraph(g, cur.q | cur.r);
    cur = LemmaEightInstance{qd, qbd, qb, rd, rbd, rb};
  }
}

ChainDecomposition chain_from_cutset(const BipartiteGraph& g, Handedness handedness) {
  const Side p = primary_side(handedness);
  const Side o = opposite(p);
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "chain decomposition needs a connected graph");

  const CliqueCutset cut = universal_clique_cutset(neighbourhood_graph(g, p));
  const VertexSet& q = cut.universal;
  const BipartiteGraph rest = induced_subgraph(g, g.vertices() - q);

  std::vector<VertexSet> blocks;  // the component F_i holding each part
  for (const VertexSet& part : cut.parts) {
    for (const VertexSet& comp : connected_components(rest)) {
      if (comp.contains(part.front())) {
        blocks.push_back(comp);
        break;
      }
    }
  }

  // Each q must be complete to all but at most one B_i; two misses give an
  // induced P7 through q along shortest paths into both components.
  for (VertexId x : q) {
    std::vector<std::size_t> missed;
    for (std::size_t i = 0; i < blocks.size() && missed.size() < 2; ++i)
      if (!(blocks[i] & g.part(o)).is_subset_of(g.neighbours(x))) missed.push_back(i);
    if (missed.size() < 2) continue;
    std::vector<std::vector<VertexId>> arms;
    for (std::size_t i : missed) {
      const VertexSet& comp = blocks[i];
      const VertexId target = ((comp & g.part(o)) - g.neighbours(x)).front();
      VertexSet within = comp;
      within.insert(x);
      arms.push_back(shortest_path(g, within, x, target));
    }
    std::vector<VertexId> path{arms[0][3], arms[0][2], arms[0][1], x, arms[1][1], arms[1][2], arms[1][3]};
    throw_p7(std::move(path), "a cutset vertex misses two components");
  }

  LemmaEightInstance inst;
  inst.q = q;
  inst.a = blocks.front() & g.part(p);
  inst.b = blocks.front() & g.part(o);
  VertexSet covered = inst.b;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    inst.c |= blocks[i] & g.part(p);
    inst.d |= blocks[i] & g.part(o);
  }
  covered |= inst.d;
  inst.r = g.part(o) - covered;
  return lemma8_build(g, inst, handedness);
}

std::pair<BipartiteGraph, BipartiteGraph> components_of(const BipartiteGraph& g, const ChainDecomposition& dec) {
  const ChainReport report = validate_chain(g, dec);
  if (!report.ok()) throw Error(ErrorCode::InvalidDecomposition, report.violations.front().describe());
  return {induced_subgraph(g, dec.all_a() | dec.all_b()), induced_subgraph(g, dec.all_c() | dec.all_d())};
}

namespace {

// Recovers (A_i, B_i) of one component from A_1 alone.
std::vector<std::pair<VertexSet, VertexSet>> recover_blocks(const BipartiteGraph& comp, std::size_t k,
                                                            const VertexSet& first, Side p, const char* name) {
  const std::string tag(name);
  if (!first.is_subset_of(comp.part(p)))
    throw Error(ErrorCode::MalformedComponents, tag + "1 is not inside the primary part of its component");
  std::vector<std::pair<VertexSet, VertexSet>> blocks;
  VertexSet left_a = comp.part(p) - first;
  VertexSet left_b = comp.part(opposite(p));
  if (k == 1) {
    if (!left_a.empty())
      throw Error(ErrorCode::MalformedComponents, tag + "1 must be the whole primary part when k = 1");
    blocks.emplace_back(first, left_b);
    return blocks;
  }
  VertexSet b = neighbourhood(comp, first);
  left_b -= b;
  blocks.emplace_back(first, b);
  for (std::size_t i = 2; i <= k; ++i) {
    if (i == k) {
      blocks.emplace_back(left_a, left_b);
      break;
    }
    VertexSet a;
    for (VertexId v : left_a)
      if (!blocks.back().second.is_subset_of(comp.neighbours(v))) a.insert(v);
    VertexSet bi = neighbourhood(comp, a) & left_b;
    left_a -= a;
    left_b -= bi;
    blocks.emplace_back(std::move(a), std::move(bi));
  }
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (blocks[i].first.empty() || blocks[i].second.empty())
      throw Error(ErrorCode::MalformedComponents, "block " + std::to_string(i + 1) + " of component " + tag +
                                                       " is empty but must not be");
  return blocks;
}

}  // namespace

BipartiteGraph reconstruct_from_components(const BipartiteGraph& g1, const BipartiteGraph& g2, std::size_t k,
                                           const VertexSet& a1, const VertexSet& c1, Handedness handedness) {
  if (k == 0) throw Error(ErrorCode::MalformedComponents, "k must be positive");
  const Side p = primary_side(handedness);
  const auto ab = recover_blocks(g1, k, a1, p, "A");
  const auto cd = recover_blocks(g2, k, c1, p, "C");
  const auto& last_ab = ab.back();
  const auto& last_cd = cd.back();
  if (last_ab.first.empty() && last_ab.second.empty() && last_cd.first.empty() && last_cd.second.empty())
    throw Error(ErrorCode::MalformedComponents, "last layer is empty");

  GraphBuilder out(disjoint_union(g1, g2));
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (VertexId u : ab[i].first)
        for (VertexId v : cd[j].second) out.add_edge(u, v);
      for (VertexId u : cd[i].first)
        for (VertexId v : ab[j].second) out.add_edge(u, v);
    }
  }
  return std::move(out).build();
}

}  // namespace chaindec
