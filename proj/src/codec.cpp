#include "chaindec/codec.hpp"

#include <bit>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace chaindec {

BitStream BitStream::from_bytes(std::vector<std::uint8_t> bytes) {
  BitStream s;
  s.bits_ = bytes.size() * 8;
  s.bytes_ = std::move(bytes);
  return s;
}

void BitStream::push(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if ((value >> i) & 1U) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (bits_ % 8));
    ++bits_;
  }
}

bool BitStream::bit(std::size_t i) const {
  if (i >= bits_) throw Error(ErrorCode::TruncatedStream, "bit index past the end");
  return ((bytes_[i / 8] >> (7 - i % 8)) & 1U) != 0;
}

std::uint64_t BitReader::read(unsigned width) {
  if (stream_.size() - pos_ < width)
    throw Error(ErrorCode::TruncatedStream, "needed " + std::to_string(width) + " bits at offset " +
                                                std::to_string(pos_) + ", stream has " +
                                                std::to_string(stream_.size()));
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (stream_.bit(pos_++) ? 1U : 0U);
  return v;
}

unsigned label_width(std::size_t n) {
  return n <= 2 ? 1U : static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

std::size_t encoding_envelope(std::size_t n) {
  return kHeaderBits + node_bound(n) * (4 + 3 * static_cast<std::size_t>(label_width(n)));
}

namespace {

void push_label(BitStream& out, std::uint64_t value, std::size_t n, unsigned width, const char* what) {
  if (value == 0 || value > n)
    throw Error(ErrorCode::LabelOverflow,
                std::string(what) + " " + std::to_string(value) + " outside 1.." + std::to_string(n));
  out.push(value - 1, width);
}

std::uint64_t read_label(BitReader& in, std::size_t n, unsigned width, const char* what) {
  const std::uint64_t value = in.read(width) + 1;
  if (value > n)
    throw Error(ErrorCode::LabelOverflow,
                std::string(what) + " " + std::to_string(value) + " exceeds the header bound " + std::to_string(n));
  return value;
}

void push_chain(BitStream& out, const ChainLabel& label, std::size_t n, unsigned width) {
  push_label(out, label.k, n, width, "k");
  push_label(out, label.v1, n, width, "marker");
  push_label(out, label.v2, n, width, "marker");
  out.push(label.handedness == Handedness::Left ? 0 : 1, 1);
}

ChainLabel read_chain(BitReader& in, std::size_t n, unsigned width) {
  ChainLabel label;
  label.k = static_cast<std::uint32_t>(read_label(in, n, width, "k"));
  label.v1 = static_cast<VertexId>(read_label(in, n, width, "marker"));
  label.v2 = static_cast<VertexId>(read_label(in, n, width, "marker"));
  label.handedness = in.read(1) == 0 ? Handedness::Left : Handedness::Right;
  return label;
}

}  // namespace

BitStream encode_tree(const DecompositionTree& t, std::size_t n) {
  if (t.empty()) throw Error(ErrorCode::MalformedTree, "cannot encode an empty tree");
  if (n == 0 || n > 0xFFFFFFFFULL) throw Error(ErrorCode::LabelOverflow, "label bound must fit 32 bits");
  const unsigned width = label_width(n);
  BitStream out;
  out.push(kTreeMagic, 32);
  out.push(n, 32);

  std::vector<DecompositionTree::NodeId> stack{t.root()};
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    const auto& node = t.node(id);
    std::visit(
        [&](const auto& label) {
          using L = std::decay_t<decltype(label)>;
          if constexpr (std::is_same_v<L, LeafLabel>) {
            out.push(static_cast<unsigned>(NodeTag::Leaf), 3);
            push_label(out, label.vertex, n, width, "vertex");
            out.push(label.side == Side::Left ? 0 : 1, 1);
          } else if constexpr (std::is_same_v<L, UnionLabel>) {
            out.push(static_cast<unsigned>(NodeTag::Union), 3);
          } else if constexpr (std::is_same_v<L, CoUnionLabel>) {
            out.push(static_cast<unsigned>(NodeTag::CoUnion), 3);
          } else if constexpr (std::is_same_v<L, ChainLabel>) {
            out.push(static_cast<unsigned>(NodeTag::Chain), 3);
            push_chain(out, label, n, width);
          } else {
            out.push(static_cast<unsigned>(NodeTag::CoChain), 3);
            push_chain(out, label, n, width);
          }
        },
        node.label);
    if (!is_leaf(node.label)) {
      if (node.first == DecompositionTree::npos || node.second == DecompositionTree::npos)
        throw Error(ErrorCode::MalformedTree, "internal node without two children");
      stack.push_back(node.second);
      stack.push_back(node.first);
    }
  }
  return out;
}

std::size_t stream_label_bound(const BitStream& bits) {
  BitReader in(bits);
  if (in.read(32) != kTreeMagic) throw Error(ErrorCode::BadMagic, "stream does not start with BCT1");
  return static_cast<std::size_t>(in.read(32));
}

DecompositionTree decode_stream(const BitStream& bits) {
  const std::size_t n = stream_label_bound(bits);
  if (n == 0) throw Error(ErrorCode::LabelOverflow, "header label bound is zero");
  const unsigned width = label_width(n);
  BitReader in(bits);
  in.read(64);

  DecompositionTree t;
  // Internal nodes still waiting for a child.
  std::vector<DecompositionTree::NodeId> open;
  do {
    const auto tag = in.read(3);
    NodeLabel label;
    switch (tag) {
      case static_cast<unsigned>(NodeTag::Leaf): {
        const auto v = static_cast<VertexId>(read_label(in, n, width, "vertex"));
        label = LeafLabel{v, in.read(1) == 0 ? Side::Left : Side::Right};
        break;
      }
      case static_cast<unsigned>(NodeTag::Union): label = UnionLabel{}; break;
      case static_cast<unsigned>(NodeTag::CoUnion): label = CoUnionLabel{}; break;
      case static_cast<unsigned>(NodeTag::Chain): label = read_chain(in, n, width); break;
      case static_cast<unsigned>(NodeTag::CoChain): label = CoChainLabel{read_chain(in, n, width)}; break;
      default:
        throw Error(ErrorCode::InvalidTag, "tag " + std::to_string(tag) + " at bit " +
                                               std::to_string(in.position() - 3));
    }
    const bool internal = !is_leaf(label);
    const auto id = t.add(std::move(label));
    if (!open.empty()) {
      const auto parent = open.back();
      const auto& p = t.node(parent);
      if (p.first == DecompositionTree::npos) {
        t.set_children(parent, id, DecompositionTree::npos);
      } else {
        t.set_children(parent, p.first, id);
        open.pop_back();
      }
    }
    if (internal) open.push_back(id);
  } while (!open.empty());
  return t;
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what, {}, line);
}

}  // namespace

BipartiteGraph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0, m = 0, edges_seen = 0;
  enum class Expect { Header, Sides, Edges } expect = Expect::Header;
  std::vector<Side> sides;
  std::set<std::pair<VertexId, VertexId>> seen;
  GraphBuilder builder;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string keyword;
    if (!(line >> keyword)) continue;
    std::string extra;

    switch (expect) {
      case Expect::Header: {
        long long nn = -1, mm = -1;
        if (keyword != "bigraph" || !(line >> nn >> mm) || (line >> extra) || nn < 0 || mm < 0)
          parse_error(line_no, "expected 'bigraph <n> <m>'");
        n = static_cast<std::size_t>(nn);
        m = static_cast<std::size_t>(mm);
        expect = Expect::Sides;
        break;
      }
      case Expect::Sides: {
        std::string s;
        if (keyword != "sides") parse_error(line_no, "expected 'sides <string>'");
        if (n > 0 && (!(line >> s) || (line >> extra))) parse_error(line_no, "expected 'sides <string>'");
        if (s.size() != n) parse_error(line_no, "sides string has length " + std::to_string(s.size()) +
                                                    ", expected " + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i) {
          if (s[i] != 'L' && s[i] != 'R') parse_error(line_no, "side must be L or R");
          builder.add_vertex(static_cast<VertexId>(i + 1), s[i] == 'L' ? Side::Left : Side::Right);
        }
        expect = Expect::Edges;
        break;
      }
      case Expect::Edges: {
        long long u = 0, v = 0;
        if (keyword != "e" || !(line >> u >> v) || (line >> extra)) parse_error(line_no, "expected 'e <u> <v>'");
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
          parse_error(line_no, "vertex out of range 1.." + std::to_string(n));
        if (u == v) parse_error(line_no, "loop at vertex " + std::to_string(u));
        auto a = static_cast<VertexId>(u);
        auto b = static_cast<VertexId>(v);
        if (builder.peek().side(a) == builder.peek().side(b))
          throw Error(ErrorCode::SameSideEdge,
                      "line " + std::to_string(line_no) + ": edge " + std::to_string(a) + "-" + std::to_string(b),
                      {a, b}, line_no);
        if (builder.peek().side(a) == Side::Right) std::swap(a, b);
        if (!seen.insert({a, b}).second) parse_error(line_no, "duplicate edge");
        builder.add_edge(a, b);
        ++edges_seen;
        break;
      }
    }
  }
  if (expect != Expect::Edges) parse_error(line_no, "missing header or sides line");
  if (edges_seen != m)
    parse_error(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges_seen));
  return std::move(builder).build();
}

BipartiteGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  const std::size_t n = g.order();
  if (n > 0 && g.vertices().back() != n)
    throw Error(ErrorCode::InvalidArgument, "graph labels must be exactly 1..n to be written");
  std::string sides;
  for (VertexId v : g.vertices()) sides += g.side(v) == Side::Left ? 'L' : 'R';
  const auto edges = g.edges();
  out << "bigraph " << n << ' ' << edges.size() << '\n';
  out << "sides " << sides << '\n';
  for (const Edge& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const BipartiteGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

BipartiteGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const BipartiteGraph& g) {
  const std::string text = format_graph(g);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

BitStream load_stream(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return BitStream::from_bytes(std::move(bytes));
}

void save_stream(const std::filesystem::path& path, const BitStream& bits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bits.bytes().data()), static_cast<std::streamsize>(bits.bytes().size()));
}

}  // namespace chaindec
