// chaindec: decompose, encode, reconstruct and verify P7-free bipartite graphs.
//
// Exit status: 0 success, 1 the input fails decomposition or verification,
// 2 usage, I/O or format errors.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chaindec/codec.hpp"
#include "chaindec/dectree.hpp"
#include "chaindec/oracle.hpp"

namespace {

using namespace chaindec;

constexpr int kFailure = 1;
constexpr int kUsage = 2;

bool is_class_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::InducedP7Found:
    case ErrorCode::NotQuasiThreshold:
    case ErrorCode::NotDecomposable:
    case ErrorCode::CompleteInput:
    case ErrorCode::BadInstance:
    case ErrorCode::DisconnectedInput:
    case ErrorCode::RejectionBudgetExceeded:
      return true;
    default:
      return false;
  }
}

int decompose(const std::string& in, const std::string& out, bool check_p7) {
  const BipartiteGraph g = load_graph(in);
  BuildOptions options;
  options.check_p7 = check_p7;
  const DecompositionTree tree = build_tree(g, options);
  const BitStream bits = encode_tree(tree, g.order());
  save_stream(out, bits);
  std::cout << "n " << g.order() << "\nnodes " << tree.size() << "\nbits " << bits.size() << '\n';
  return 0;
}

int reconstruct(const std::string& in, const std::string& out) {
  const DecompositionTree tree = decode_stream(load_stream(in));
  save_graph(out, decode_tree(tree));
  return 0;
}

int verify(const std::string& in) {
  const BipartiteGraph g = load_graph(in);
  const GraphReport r = verify_graph(g);
  std::cout << "n " << g.order() << "\nnodes " << r.nodes << "\nleaves " << r.leaves << "\nchain_nodes "
            << r.chain_nodes << "\nbits " << r.bits << '\n';
  for (const auto& f : r.failures) std::cout << "FAIL " << f << '\n';
  std::cout << (r.ok() ? "OK" : "FAILED") << '\n';
  return r.ok() ? 0 : kFailure;
}

int enumerate(std::size_t n, bool count_only, bool json, const OracleOptions& options) {
  if (count_only) {
    std::cout << count_class(n, options).value << '\n';
    return 0;
  }
  const ClassReport r = verify_class(n, options);
  std::cout << (json ? r.to_json() + "\n" : r.to_text());
  return r.ok() ? 0 : kFailure;
}

int gen(std::size_t n, double p, std::uint64_t seed, std::size_t budget, const std::string& out) {
  const BipartiteGraph g = random_p7free(n, p, seed, budget);
  if (out.empty() || out == "-") {
    write_graph(std::cout, g);
  } else {
    save_graph(out, g);
  }
  return 0;
}

int stats(const std::string& in) {
  const BipartiteGraph g = load_graph(in);
  const DecompositionTree tree = build_tree(g);
  const TreeMetrics m = tree_metrics(tree);
  const std::size_t n = g.order();
  const std::size_t bits = encode_tree(tree, n).size();
  std::cout << "n " << n << "\nm " << g.edge_count() << "\nnodes " << m.nodes << "\nleaves " << m.leaves
            << "\nnode_bound " << node_bound(n) << "\nbits " << bits;
  if (n >= 3) {
    const std::size_t envelope = encoding_envelope(n);
    std::cout << "\nenvelope " << envelope << "\nslack " << static_cast<long long>(envelope) - static_cast<long long>(bits);
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain decomposition trees for P7-free bipartite graphs"};
  app.require_subcommand(1);

  std::string input, output;
  bool check_p7 = false;
  auto* dec = app.add_subcommand("decompose", "build and serialize the decomposition tree of a .bg graph");
  dec->add_option("-i,--input", input, "input .bg graph")->required();
  dec->add_option("-o,--output", output, "output .bct stream")->required();
  dec->add_flag("--check-p7", check_p7, "reject inputs with an induced P7 before decomposing");

  auto* rec = app.add_subcommand("reconstruct", "decode a .bct stream back to a .bg graph");
  rec->add_option("-i,--input", input, "input .bct stream")->required();
  rec->add_option("-o,--output", output, "output .bg graph")->required();

  auto* ver = app.add_subcommand("verify", "run every structural check on one graph");
  ver->add_option("-i,--input", input, "input .bg graph")->required();

  std::size_t n = 0;
  bool count_only = false, json = false;
  OracleOptions oracle;
  auto* en = app.add_subcommand("enumerate", "count or verify all P7-free bipartite graphs on n vertices");
  en->add_option("-n", n, "number of vertices")->required();
  en->add_flag("--count-only", count_only, "print only the class count");
  en->add_flag("--json", json, "machine-readable summary");
  en->add_option("--workers", oracle.workers, "worker threads")->check(CLI::PositiveNumber);
  en->add_option("--cap", oracle.cap, "largest n accepted");

  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t budget = 100000;
  auto* gn = app.add_subcommand("gen", "sample a random P7-free bipartite graph");
  gn->add_option("-n", n, "number of vertices")->required();
  gn->add_option("-p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
  gn->add_option("--seed", seed, "random seed");
  gn->add_option("--budget", budget, "rejection budget");
  gn->add_option("-o,--output", output, "output .bg graph (stdout when omitted)");

  auto* st = app.add_subcommand("stats", "tree size and encoding length against their bounds");
  st->add_option("-i,--input", input, "input .bg graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*dec) return decompose(input, output, check_p7);
    if (*rec) return reconstruct(input, output);
    if (*ver) return verify(input);
    if (*en) return enumerate(n, count_only, json, oracle);
    if (*gn) return gen(n, p, seed, budget, output);
    if (*st) return stats(input);
  } catch (const Error& e) {
    std::cerr << "chaindec: " << e.what() << '\n';
    return is_class_failure(e.code()) ? kFailure : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "chaindec: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
