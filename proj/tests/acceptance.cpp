// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "chaindec/codec.hpp"
#include "chaindec/dectree.hpp"
#include "chaindec/fixtures.hpp"
#include "chaindec/neighbourhood.hpp"
#include "chaindec/oracle.hpp"
#include "chaindec/patterns.hpp"
#include "support/brute.hpp"

using namespace chaindec;
namespace fx = chaindec::fixtures;

namespace {

constexpr std::size_t kSamplesPerN = 1000;
constexpr std::array<double, 5> kEdgeProbs{0.2, 0.35, 0.5, 0.65, 0.8};

struct Criterion {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  void fail(const BipartiteGraph& g, const std::string& what) {
    if (failures.size() < 5) {
      std::ostringstream os;
      os << what << " on " << g;
      failures.push_back(os.str());
    } else {
      failures.push_back({});
    }
  }
};

struct Gate {
  std::array<Criterion, 10> c;  // 1-based
  std::size_t max_overlap = 0;
  std::size_t chain_nodes = 0;
  std::size_t cochain_nodes = 0;
  std::size_t max_bits = 0;
};

// Criteria 3-7 on one P7-free graph, plus the decode check for criterion 1
// or 2 when `roundtrip` is given (random samples pass null).
void audit(Gate& gate, const BipartiteGraph& g, Criterion* roundtrip) {
  const std::size_t n = g.order();
  DecompositionTree tree;
  BuildOptions options;
  options.on_chain = [&](const ChainEvent& ev) {
    ++(ev.complemented ? gate.cochain_nodes : gate.chain_nodes);
    ++gate.c[6].checked;
    const ChainReport r = validate_chain(ev.graph, ev.decomposition);
    if (!r.ok()) gate.c[6].fail(ev.graph, r.violations.front().describe());
    if (!brute::chain_axioms_hold(ev.graph, ev.decomposition)) gate.c[6].fail(ev.graph, "axiom oracle disagrees");
  };
  try {
    tree = build_tree(g, options);
  } catch (const Error& e) {
    if (roundtrip) roundtrip->fail(g, e.what());
    gate.c[3].fail(g, e.what());
    return;
  }

  if (roundtrip) {
    ++roundtrip->checked;
    try {
      if (decode_tree(tree) != g) roundtrip->fail(g, "decode_tree differs");
    } catch (const Error& e) {
      roundtrip->fail(g, e.what());
    }
  }

  const TreeMetrics m = tree_metrics(tree);
  ++gate.c[3].checked;
  if (n >= 3 && (m.nodes > 8 * n - 17 || m.leaves > 4 * (n - 2)))
    gate.c[3].fail(g, std::to_string(m.nodes) + " nodes, " + std::to_string(m.leaves) + " leaves");

  ++gate.c[4].checked;
  const SetTreeReport sets = verify_2decomposition(tree, g.vertices());
  gate.max_overlap = std::max(gate.max_overlap, sets.max_overlap);
  if (!sets.ok()) gate.c[4].fail(g, "clause " + sets.violations.front().clause);
  if (sets.max_overlap > 2) gate.c[4].fail(g, "overlap " + std::to_string(sets.max_overlap));

  ++gate.c[5].checked;
  const BipartiteGraph h = bipartite_complement(g);
  const SimpleGraph gu = brute::neighbourhood_graph(g, Side::Left);
  const SimpleGraph gw = brute::neighbourhood_graph(g, Side::Right);
  if (quasi_threshold_witness(gu) || quasi_threshold_witness(gw)) gate.c[5].fail(g, "P4/C4 in a neighbourhood graph");
  if (brute::has_p4_or_c4(gu) || brute::has_p4_or_c4(gw)) gate.c[5].fail(g, "4-subset oracle found P4/C4");
  if (n >= 3 && brute::components(g).size() == 1 && brute::components(h).size() == 1 && brute::complete(gu) &&
      brute::complete(gw) && brute::complete(brute::neighbourhood_graph(h, Side::Left)))
    gate.c[5].fail(g, "G_U, G_W, H_U all complete");

  ++gate.c[7].checked;
  const std::size_t label_bound = g.vertices().back();
  const BitStream bits = encode_tree(tree, label_bound);
  gate.max_bits = std::max(gate.max_bits, bits.size());
  const std::size_t L = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log2(label_bound))));
  if (n >= 3 && bits.size() > 64 + (8 * label_bound - 17) * (4 + 3 * L))
    gate.c[7].fail(g, std::to_string(bits.size()) + " bits");
  if (decode_stream(bits) != tree) gate.c[7].fail(g, "stream round-trip");
}

void sweep(Gate& gate, std::size_t n, Criterion& roundtrip, std::size_t& members) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
    const auto g = canonical_bipartite_graph(n, mask);
    if (!g || !is_p7_free(*g)) continue;
    ++members;
    audit(gate, *g, &roundtrip);
  }
}

int run_cli(const std::string& args, std::string& out) {
  FILE* pipe = popen((std::string(CHAINDEC_CLI) + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 512> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

bool report(int id, const std::string& title, const Criterion& c, const std::string& extra) {
  const bool ok = c.failures.empty();
  std::cout << "criterion " << id << " " << (ok ? "PASS" : "FAIL") << "  " << title << "  [checked " << c.checked
            << ", failures " << c.failures.size() << (extra.empty() ? "" : ", " + extra) << "]\n";
  for (const auto& f : c.failures)
    if (!f.empty()) std::cout << "    " << f << '\n';
  return ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  Gate gate;
  const auto reference = brute::bipartite_counts(7);
  std::ostringstream note1, note2, note3, note8;

  // 1: every graph on n <= 6 vertices.
  auto t0 = std::chrono::steady_clock::now();
  std::size_t small_members = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t members = 0;
    sweep(gate, n, gate.c[1], members);
    if (members != reference[n]) gate.c[1].failures.push_back("n=" + std::to_string(n) + ": swept " +
                                                               std::to_string(members) + " graphs, expected " +
                                                               std::to_string(reference[n]));
    small_members += members;
  }
  note1 << small_members << " graphs in " << seconds_since(t0) << " s";

  // 2: all 2^21 graphs on 7 vertices, plus the P7 count identity.
  t0 = std::chrono::steady_clock::now();
  std::size_t members7 = 0;
  sweep(gate, 7, gate.c[2], members7);
  const std::uint64_t all7 = bipartite_count(7);
  const std::uint64_t class7 = count_class(7).value;
  if (class7 != all7 - 2520) gate.c[2].failures.push_back("count_class(7) = " + std::to_string(class7) +
                                                          ", bipartite_count(7) - 2520 = " +
                                                          std::to_string(all7 - 2520));
  if (all7 != reference[7]) gate.c[2].failures.push_back("bipartite_count(7) = " + std::to_string(all7) +
                                                         ", generating function gives " +
                                                         std::to_string(reference[7]));
  if (members7 != class7) gate.c[2].failures.push_back("sweep found " + std::to_string(members7) + " members");
  const ClassReport oracle7 = verify_class(7);
  for (const auto& f : oracle7.failures) gate.c[2].failures.push_back("verify_class: " + f.message);
  note2 << "count_class(7)=" << class7 << " bipartite_count(7)=" << all7 << ", " << seconds_since(t0) << " s";

  // 3: random samples for n = 8..14 on top of the sweeps above.
  t0 = std::chrono::steady_clock::now();
  std::size_t sampled = 0;
  for (std::size_t n = 8; n <= 14; ++n)
    for (std::size_t i = 0; i < kSamplesPerN; ++i) {
      const std::uint64_t seed = n * 1000003 + i;
      audit(gate, random_p7free(n, kEdgeProbs[i % kEdgeProbs.size()], seed), nullptr);
      ++sampled;
    }
  note3 << sampled << " samples at n=8..14, " << seconds_since(t0) << " s";

  // 7 spot value.
  const BitStream two_k2 = encode_tree(build_tree(fx::two_k2()), 4);
  if (two_k2.size() - 64 != 33)
    gate.c[7].failures.push_back("TWO_K2 body is " + std::to_string(two_k2.size() - 64) + " bits, expected 33");

  // 8: exact small counts.
  const std::array<std::uint64_t, 3> first{1, 2, 7};
  for (std::size_t n = 1; n <= 6; ++n) {
    ++gate.c[8].checked;
    const std::uint64_t got = count_class(n).value;
    if (n <= 3 && got != first[n - 1])
      gate.c[8].failures.push_back("count_class(" + std::to_string(n) + ") = " + std::to_string(got));
    if (got != bipartite_count(n) || got != reference[n])
      gate.c[8].failures.push_back("count_class(" + std::to_string(n) + ") differs from the bipartite count");
    note8 << (n > 1 ? "," : "") << got;
  }

  // 9: negative controls.
  Criterion& neg = gate.c[9];
  ++neg.checked;
  try {
    BuildOptions checked;
    checked.check_p7 = true;
    build_tree(fx::p7(), checked);
    neg.failures.push_back("P7 decomposed under check_p7");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InducedP7Found || e.witness() != std::vector<VertexId>{1, 2, 3, 4, 5, 6, 7})
      neg.failures.push_back(std::string("unexpected error: ") + e.what());
  }
  ++neg.checked;
  std::string cli_out;
  const int status = run_cli(std::string("decompose --check-p7 -i ") + CHAINDEC_DATA_DIR + "/p7.bg -o /dev/null", cli_out);
  if (status != 1 || cli_out.find("InducedP7Found") == std::string::npos ||
      cli_out.find("1,2,3,4,5,6,7") == std::string::npos)
    neg.failures.push_back("CLI exit " + std::to_string(status) + ": " + cli_out);
  ++neg.checked;
  ChainDecomposition corrupted{Handedness::Left, {{{1, 2}, {5, 6}, {3}, {8}}, {{4}, {7}, {}, {}}}};
  const ChainReport r = validate_chain(fx::g8(), corrupted);
  std::string named;
  if (r.ok()) {
    neg.failures.push_back("corrupted G8 decomposition accepted");
  } else {
    named = std::string(to_string(r.violations.front().axiom));
    if (r.violations.front().describe().find(named) != 0) neg.failures.push_back("report does not name the axiom");
  }

  std::cout << "acceptance suite\n";
  bool ok = true;
  ok &= report(1, "exhaustive build + decode round-trip, n <= 6", gate.c[1], note1.str());
  ok &= report(2, "n = 7 sweep and count_class(7) = bipartite_count(7) - 2520", gate.c[2], note2.str());
  ok &= report(3, "nodes <= 8n-17 and leaves <= 4(n-2)", gate.c[3], note3.str());
  ok &= report(4, "2-decomposition clauses, overlap <= 2", gate.c[4],
               "max overlap " + std::to_string(gate.max_overlap));
  ok &= report(5, "neighbourhood graphs quasi-threshold; G_U, G_W, H_U not all complete", gate.c[5], "");
  ok &= report(6, "chain axioms at every Chain/CoChain node", gate.c[6],
               std::to_string(gate.chain_nodes) + " chain, " + std::to_string(gate.cochain_nodes) + " co-chain nodes");
  ok &= report(7, "encoding envelope, TWO_K2 body = 33 bits", gate.c[7],
               "TWO_K2 body " + std::to_string(two_k2.size() - 64) + ", max bits " + std::to_string(gate.max_bits));
  ok &= report(8, "exact counts n = 1..6", gate.c[8], note8.str());
  ok &= report(9, "negative controls (P7 under --check-p7, corrupted G8 chain)", gate.c[9],
               "violated axiom " + named);
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
  return ok ? 0 : 1;
}
