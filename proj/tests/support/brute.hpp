#pragma once

// Slow, definition-level reference implementations for the tests. Nothing in
// here calls into the algorithms under test; only the graph containers are
// shared.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chaindec/bigraph.hpp"
#include "chaindec/chain.hpp"
#include "chaindec/neighbourhood.hpp"

namespace brute {

using chaindec::BipartiteGraph;
using chaindec::Side;
using chaindec::SimpleGraph;
using chaindec::VertexId;
using chaindec::VertexSet;

inline bool chordless(const BipartiteGraph& g, const std::vector<VertexId>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

namespace detail {
inline bool next_sequence(const BipartiteGraph& g, const std::vector<VertexId>& vs, std::size_t k,
                          std::vector<VertexId>& seq, std::vector<bool>& used) {
  if (seq.size() == k) return chordless(g, seq);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    seq.push_back(vs[i]);
    if (next_sequence(g, vs, k, seq, used)) return true;
    seq.pop_back();
    used[i] = false;
  }
  return false;
}
}  // namespace detail

// All ordered k-tuples of distinct vertices in lexicographic order, first
// chordless one wins. No pruning at all.
inline std::optional<std::vector<VertexId>> induced_path(const BipartiteGraph& g, std::size_t k) {
  const std::vector<VertexId> vs = g.vertices().to_vector();
  if (k > vs.size()) return std::nullopt;
  std::vector<VertexId> seq;
  std::vector<bool> used(vs.size(), false);
  if (detail::next_sequence(g, vs, k, seq, used)) return seq;
  return std::nullopt;
}

// Is (a,b,c,d) an induced P4 a-b-c-d (cyclic=false) or C4 a-b-c-d-a?
inline bool pattern(const SimpleGraph& h, const std::array<VertexId, 4>& q, bool cyclic) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const bool want = j == i + 1 || (cyclic && i == 0 && j == 3);
      if (h.adjacent(q[i], q[j]) != want) return false;
    }
  return true;
}

// Tries every 4-subset in every order.
inline bool has_p4_or_c4(const SimpleGraph& h) {
  const std::vector<VertexId> vs = h.vertices().to_vector();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          std::array<VertexId, 4> q{vs[a], vs[b], vs[c], vs[d]};
          do {
            if (pattern(h, q, false) || pattern(h, q, true)) return true;
          } while (std::next_permutation(q.begin(), q.end()));
        }
  return false;
}

inline SimpleGraph neighbourhood_graph(const BipartiteGraph& g, Side side) {
  SimpleGraph h(g.part(side));
  const auto part = g.part(side).to_vector();
  const auto other = g.part(chaindec::opposite(side)).to_vector();
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j)
      for (VertexId w : other)
        if (g.adjacent(part[i], w) && g.adjacent(part[j], w)) {
          h.add_edge(part[i], part[j]);
          break;
        }
  return h;
}

inline bool complete(const SimpleGraph& h) {
  const auto vs = h.vertices().to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!h.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline std::set<std::pair<VertexId, VertexId>> edge_set(const BipartiteGraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (VertexId u : g.vertices())
    for (VertexId v : g.vertices())
      if (u < v && g.adjacent(u, v)) out.insert({u, v});
  return out;
}

inline std::set<std::pair<VertexId, VertexId>> complement_edges(const BipartiteGraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (VertexId u : g.left())
    for (VertexId w : g.right())
      if (!g.adjacent(u, w)) out.insert({std::min(u, w), std::max(u, w)});
  return out;
}

// Union-find over the vertex labels.
inline std::vector<VertexSet> components(const BipartiteGraph& g) {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : g.vertices()) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : edge_set(g)) parent[find(u)] = find(v);
  std::map<VertexId, VertexSet> groups;
  for (VertexId v : g.vertices()) groups[find(v)].insert(v);
  std::vector<VertexSet> out;
  for (auto& [root, s] : groups) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

// Labelled bipartite graphs on n vertices from the exponential generating
// function of 2-coloured graphs: sum_k C(n,k) 2^{k(n-k)} counts coloured
// graphs; halve the connected ones and exponentiate back.
inline std::vector<std::uint64_t> bipartite_counts(std::size_t max_n) {
  std::vector<std::vector<std::uint64_t>> binom(max_n + 1, std::vector<std::uint64_t>(max_n + 1, 0));
  for (std::size_t n = 0; n <= max_n; ++n) {
    binom[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
  }
  std::vector<unsigned __int128> coloured(max_n + 1, 0), connected(max_n + 1, 0);
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t k = 0; k <= n; ++k) coloured[n] += binom[n][k] * ((unsigned __int128)1 << (k * (n - k)));
  for (std::size_t n = 1; n <= max_n; ++n) {
    unsigned __int128 rest = 0;
    for (std::size_t k = 1; k < n; ++k) rest += binom[n - 1][k - 1] * connected[k] * coloured[n - k];
    connected[n] = coloured[n] - rest;
  }
  std::vector<unsigned __int128> total(max_n + 1, 0);
  total[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t k = 1; k <= n; ++k) total[n] += binom[n - 1][k - 1] * (connected[k] / 2) * total[n - k];
  return {total.begin(), total.end()};
}

// Independent of random_p7free: its own generator and no class filter.
inline BipartiteGraph random_bipartite(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution side(0.5), edge(p);
  chaindec::GraphBuilder b;
  for (VertexId v = 1; v <= n; ++v) b.add_vertex(v, side(rng) ? Side::Left : Side::Right);
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v)
      if (b.peek().side(u) != b.peek().side(v) && edge(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// The chain decomposition axioms written out clause by clause.
inline bool chain_axioms_hold(const BipartiteGraph& g, const chaindec::ChainDecomposition& dec) {
  const std::size_t k = dec.k();
  if (k == 0) return false;
  const Side primary = chaindec::primary_side(dec.handedness);
  const auto& L = dec.layers;
  auto adj = [&](VertexId x, VertexId y) { return g.adjacent(x, y); };
  auto all_complete = [&](const VertexSet& x, const VertexSet& y) {
    for (VertexId a : x)
      for (VertexId b : y)
        if (!adj(a, b)) return false;
    return true;
  };
  auto all_anti = [&](const VertexSet& x, const VertexSet& y) {
    for (VertexId a : x)
      for (VertexId b : y)
        if (adj(a, b)) return false;
    return true;
  };
  auto each_has_nbr = [&](const VertexSet& x, const VertexSet& y) {
    for (VertexId a : x) {
      bool found = false;
      for (VertexId b : y) found = found || adj(a, b);
      if (!found) return false;
    }
    return true;
  };
  auto each_has_non_nbr = [&](const VertexSet& x, const VertexSet& y) {
    for (VertexId a : x) {
      bool found = false;
      for (VertexId b : y) found = found || !adj(a, b);
      if (!found) return false;
    }
    return true;
  };

  std::map<VertexId, int> seen;
  for (const auto& layer : L) {
    for (VertexId v : layer.a) seen[v] += g.contains(v) && g.side(v) == primary ? 1 : 100;
    for (VertexId v : layer.c) seen[v] += g.contains(v) && g.side(v) == primary ? 1 : 100;
    for (VertexId v : layer.b) seen[v] += g.contains(v) && g.side(v) != primary ? 1 : 100;
    for (VertexId v : layer.d) seen[v] += g.contains(v) && g.side(v) != primary ? 1 : 100;
  }
  if (seen.size() != g.order()) return false;
  for (auto [v, count] : seen)
    if (count != 1) return false;

  for (std::size_t i = 0; i < k; ++i) {
    const bool full = !L[i].a.empty() && !L[i].b.empty() && !L[i].c.empty() && !L[i].d.empty();
    const bool any = !L[i].a.empty() || !L[i].b.empty() || !L[i].c.empty() || !L[i].d.empty();
    if (i + 1 < k ? !full : !any) return false;
    if (!each_has_nbr(L[i].b, L[i].a) || !each_has_nbr(L[i].d, L[i].c)) return false;
  }
  // Paper numbering: i, j run over 1..k; here they are 0-based.
  for (std::size_t i = 1; i + 1 < k; ++i)
    if (!each_has_non_nbr(L[i].a, L[i - 1].b) || !each_has_non_nbr(L[i].c, L[i - 1].d)) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (j > i && (!all_anti(L[i].a, L[j].b) || !all_anti(L[i].c, L[j].d))) return false;
      if (j + 1 < i && (!all_complete(L[i].a, L[j].b) || !all_complete(L[i].c, L[j].d))) return false;
      if (j < i && (!all_complete(L[i].a, L[j].d) || !all_complete(L[i].c, L[j].b))) return false;
      if (j >= i && (!all_anti(L[i].a, L[j].d) || !all_anti(L[i].c, L[j].b))) return false;
    }
  return true;
}

}  // namespace brute
