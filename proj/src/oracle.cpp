#include "chaindec/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "chaindec/codec.hpp"
#include "chaindec/dectree.hpp"
#include "chaindec/neighbourhood.hpp"
#include "chaindec/patterns.hpp"

namespace chaindec {

namespace {

constexpr std::size_t kMaxOracleVertices = 11;  // pair masks must fit 64 bits

// Adjacency bitmasks over 0-based vertices, for the enumeration hot loop.
struct MaskGraph {
  std::size_t n = 0;
  std::array<std::uint32_t, kMaxOracleVertices> adj{};
};

MaskGraph from_mask(std::size_t n, std::uint64_t mask) {
  MaskGraph g;
  g.n = n;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) {
        g.adj[i] |= 1U << j;
        g.adj[j] |= 1U << i;
      }
  return g;
}

// Bit i set iff vertex i is coloured left; nullopt for an odd cycle.
std::optional<std::uint32_t> two_colouring(const MaskGraph& g) {
  std::uint32_t left = 0;
  std::uint32_t seen = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1U) continue;
    seen |= 1U << s;
    left |= 1U << s;
    std::array<std::size_t, kMaxOracleVertices> queue{};
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const std::size_t v = queue[head++];
      const bool v_left = (left >> v) & 1U;
      for (std::uint32_t rest = g.adj[v]; rest != 0; rest &= rest - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(rest));
        const bool w_left = (left >> w) & 1U;
        if ((seen >> w) & 1U) {
          if (w_left == v_left) return std::nullopt;
          continue;
        }
        seen |= 1U << w;
        if (!v_left) left |= 1U << w;
        queue[tail++] = w;
      }
    }
  }
  return left;
}

bool extend_path(const MaskGraph& g, std::size_t tail, std::uint32_t used, std::uint32_t blocked, std::size_t len,
                 std::size_t k) {
  if (len == k) return true;
  for (std::uint32_t cand = g.adj[tail] & ~used & ~blocked; cand != 0; cand &= cand - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    if (extend_path(g, v, used | (1U << v), blocked | g.adj[tail], len + 1, k)) return true;
  }
  return false;
}

bool has_induced_path(const MaskGraph& g, std::size_t k) {
  if (k > g.n) return false;
  for (std::size_t s = 0; s < g.n; ++s)
    if (extend_path(g, s, 1U << s, 0, 1, k)) return true;
  return false;
}

BipartiteGraph to_bipartite(const MaskGraph& g, std::uint32_t left) {
  GraphBuilder b;
  for (std::size_t i = 0; i < g.n; ++i)
    b.add_vertex(static_cast<VertexId>(i + 1), ((left >> i) & 1U) ? Side::Left : Side::Right);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::uint32_t rest = g.adj[i] & ~((2U << i) - 1); rest != 0; rest &= rest - 1)
      b.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(std::countr_zero(rest) + 1));
  return std::move(b).build();
}

void check_cap(std::size_t n, const OracleOptions& options) {
  if (n > options.cap || n > kMaxOracleVertices)
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                            std::to_string(std::min(options.cap, kMaxOracleVertices)));
}

// Runs fn(first, last, slot) over `workers` contiguous slices of [0, 2^pairs).
template <typename Partial, typename Fn>
std::vector<Partial> partitioned(std::size_t n, unsigned workers, Fn fn) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const unsigned w = std::max(1U, workers);
  std::vector<Partial> parts(w);
  std::vector<std::thread> threads;
  for (unsigned i = 0; i < w; ++i) {
    const std::uint64_t first = total / w * i;
    const std::uint64_t last = i + 1 == w ? total : total / w * (i + 1);
    if (w == 1) {
      fn(first, last, parts[i]);
    } else {
      threads.emplace_back([&, first, last, i] { fn(first, last, parts[i]); });
    }
  }
  for (auto& t : threads) t.join();
  return parts;
}

std::uint64_t count_masks(std::size_t n, const OracleOptions& options, bool p7_filter) {
  check_cap(n, options);
  const auto parts = partitioned<std::uint64_t>(n, options.workers,
                                                [&](std::uint64_t first, std::uint64_t last, std::uint64_t& out) {
                                                  for (std::uint64_t mask = first; mask < last; ++mask) {
                                                    const MaskGraph g = from_mask(n, mask);
                                                    if (!two_colouring(g)) continue;
                                                    if (p7_filter && has_induced_path(g, 7)) continue;
                                                    ++out;
                                                  }
                                                });
  std::uint64_t sum = 0;
  for (auto p : parts) sum += p;
  return sum;
}

std::string one_line(const BipartiteGraph& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

}  // namespace

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

ClassCount count_class(std::size_t n, const OracleOptions& options) { return {n, count_masks(n, options, true)}; }

std::uint64_t bipartite_count(std::size_t n, const OracleOptions& options) { return count_masks(n, options, false); }

std::optional<BipartiteGraph> canonical_bipartite_graph(std::size_t n, std::uint64_t mask) {
  if (n > kMaxOracleVertices) throw Error(ErrorCode::CapExceeded, "at most 11 vertices fit an edge mask");
  const MaskGraph g = from_mask(n, mask);
  const auto left = two_colouring(g);
  if (!left) return std::nullopt;
  return to_bipartite(g, *left);
}

GraphReport verify_graph(const BipartiteGraph& g) {
  GraphReport report;
  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };
  const std::size_t n = g.order();

  BuildOptions options;
  options.on_chain = [&](const ChainEvent& ev) {
    ++report.chain_nodes;
    const ChainReport chain = validate_chain(ev.graph, ev.decomposition);
    for (const auto& v : chain.violations) fail("chain axiom: " + v.describe());
    if (!chain.ok()) return;
    const auto [g1, g2] = components_of(ev.graph, ev.decomposition);
    const ChainLayer& first = ev.decomposition.layers.front();
    const BipartiteGraph back = reconstruct_from_components(g1, g2, ev.decomposition.k(), first.a, first.c,
                                                            ev.decomposition.handedness);
    if (back != ev.graph) fail("component round-trip differs from " + one_line(ev.graph));
  };

  DecompositionTree tree;
  try {
    tree = build_tree(g, options);
  } catch (const Error& e) {
    fail(std::string("build_tree: ") + e.what());
    return report;
  }

  try {
    if (decode_tree(tree) != g) fail("decode_tree does not reproduce the input");
  } catch (const Error& e) {
    fail(std::string("decode_tree: ") + e.what());
  }

  const TreeMetrics m = tree_metrics(tree);
  report.nodes = m.nodes;
  report.leaves = m.leaves;
  if (m.nodes > node_bound(n))
    fail("tree has " + std::to_string(m.nodes) + " nodes, bound " + std::to_string(node_bound(n)));
  if (m.leaves > leaf_bound(n))
    fail("tree has " + std::to_string(m.leaves) + " leaves, bound " + std::to_string(leaf_bound(n)));

  const SetTreeReport sets = verify_2decomposition(tree, g.vertices());
  for (const auto& v : sets.violations)
    fail("2-decomposition clause " + v.clause + " at node " + std::to_string(v.node) + ": " + v.detail);
  if (sets.max_overlap > 2) fail("child overlap " + std::to_string(sets.max_overlap) + " exceeds 2");

  for (Side s : {Side::Left, Side::Right})
    if (quasi_threshold_witness(neighbourhood_graph(g, s)))
      fail(std::string("neighbourhood graph of the ") + (s == Side::Left ? "left" : "right") +
           " part is not quasi-threshold");

  const BipartiteGraph h = bipartite_complement(g);
  if (n >= 3 && is_connected(g) && is_connected(h) && is_complete_graph(neighbourhood_graph(g, Side::Left)) &&
      is_complete_graph(neighbourhood_graph(g, Side::Right)) && is_complete_graph(neighbourhood_graph(h, Side::Left)))
    fail("G_U, G_W and H_U are all complete");

  const std::size_t label_bound = n == 0 ? 0 : g.vertices().back();
  try {
    const BitStream bits = encode_tree(tree, label_bound);
    report.bits = bits.size();
    if (n >= 3 && bits.size() > encoding_envelope(label_bound))
      fail("encoding uses " + std::to_string(bits.size()) + " bits, envelope " +
           std::to_string(encoding_envelope(label_bound)));
    if (decode_stream(bits) != tree) fail("decode_stream does not reproduce the tree");
  } catch (const Error& e) {
    fail(std::string("codec: ") + e.what());
  }
  return report;
}

void ClassReport::merge(const ClassReport& other) {
  enumerated += other.enumerated;
  bipartite += other.bipartite;
  members += other.members;
  checked += other.checked;
  max_nodes = std::max(max_nodes, other.max_nodes);
  max_leaves = std::max(max_leaves, other.max_leaves);
  max_bits = std::max(max_bits, other.max_bits);
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string ClassReport::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " enumerated=" << enumerated << " bipartite=" << bipartite << " members=" << members
     << " checked=" << checked << " failures=" << failures.size() << " max_nodes=" << max_nodes
     << " max_leaves=" << max_leaves << " max_bits=" << max_bits << '\n';
  for (const auto& f : failures) {
    os << "FAIL ";
    if (f.mask != 0 || f.index == 0) os << "mask=" << f.mask;
    else os << "index=" << f.index;
    os << " graph=" << f.graph << " : " << f.message << '\n';
  }
  return os.str();
}

std::string ClassReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["enumerated"] = enumerated;
  j["bipartite"] = bipartite;
  j["members"] = members;
  j["checked"] = checked;
  j["max_nodes"] = max_nodes;
  j["max_leaves"] = max_leaves;
  j["max_bits"] = max_bits;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"mask", f.mask}, {"index", f.index}, {"graph", f.graph}, {"message", f.message}});
  return j.dump();
}

namespace {

void record(ClassReport& r, const BipartiteGraph& g, std::uint64_t mask, std::size_t index) {
  const GraphReport gr = verify_graph(g);
  ++r.checked;
  r.max_nodes = std::max(r.max_nodes, gr.nodes);
  r.max_leaves = std::max(r.max_leaves, gr.leaves);
  r.max_bits = std::max(r.max_bits, gr.bits);
  for (const auto& msg : gr.failures) r.failures.push_back({mask, index, one_line(g), msg});
}

}  // namespace

ClassReport verify_class(std::size_t n, const OracleOptions& options) {
  check_cap(n, options);
  auto parts = partitioned<ClassReport>(n, options.workers,
                                        [&](std::uint64_t first, std::uint64_t last, ClassReport& out) {
                                          for (std::uint64_t mask = first; mask < last; ++mask) {
                                            ++out.enumerated;
                                            const MaskGraph g = from_mask(n, mask);
                                            const auto left = two_colouring(g);
                                            if (!left) continue;
                                            ++out.bipartite;
                                            if (has_induced_path(g, 7)) continue;
                                            ++out.members;
                                            record(out, to_bipartite(g, *left), mask, 0);
                                          }
                                        });
  ClassReport total;
  total.n = n;
  for (const auto& p : parts) total.merge(p);
  return total;
}

ClassReport verify_corpus(std::span<const BipartiteGraph> corpus) {
  ClassReport total;
  total.n = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    total.n = std::max(total.n, corpus[i].order());
    ++total.enumerated;
    record(total, corpus[i], 0, i + 1);
  }
  total.bipartite = total.members = total.enumerated;
  return total;
}

BipartiteGraph random_p7free(std::size_t n, double edge_prob, std::uint64_t seed, std::size_t rejection_budget) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // 53 random bits mapped to [0, 1); edge_prob = 1 always succeeds.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < edge_prob; };
  for (std::size_t attempt = 0; attempt <= rejection_budget; ++attempt) {
    GraphBuilder b;
    for (VertexId v = 1; v <= n; ++v) b.add_vertex(v, (rng() & 1U) ? Side::Right : Side::Left);
    const BipartiteGraph& partial = b.peek();
    std::vector<Edge> edges;
    for (VertexId u : partial.left())
      for (VertexId w : partial.right())
        if (coin()) edges.push_back({u, w});
    for (const Edge& e : edges) b.add_edge(e.u, e.v);
    BipartiteGraph g = std::move(b).build();
    if (is_p7_free(g)) return g;
  }
  throw Error(ErrorCode::RejectionBudgetExceeded,
              "no P7-free sample in " + std::to_string(rejection_budget) + " draws; lower the edge probability");
}

}  // namespace chaindec
