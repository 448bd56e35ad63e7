#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chaindec/bigraph.hpp"
#include "chaindec/dectree.hpp"

namespace chaindec {

// Append-only bit sequence, most significant bit first within each byte.
// Unused bits of the final byte are zero.
class BitStream {
 public:
  BitStream() = default;
  // All 8*bytes.size() bits, as read back from a file.
  static BitStream from_bytes(std::vector<std::uint8_t> bytes);

  // The low `width` bits of value, most significant first. width <= 64.
  void push(std::uint64_t value, unsigned width);

  std::size_t size() const noexcept { return bits_; }
  bool bit(std::size_t i) const;
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(const BitStream& stream) : stream_(stream) {}
  // Throws TruncatedStream when fewer than `width` bits remain.
  std::uint64_t read(unsigned width);
  std::size_t position() const noexcept { return pos_; }

 private:
  const BitStream& stream_;
  std::size_t pos_ = 0;
};

inline constexpr std::uint32_t kTreeMagic = 0x42435431;  // "BCT1"
inline constexpr std::size_t kHeaderBits = 64;

enum class NodeTag : std::uint8_t { Leaf = 0, Union = 1, CoUnion = 2, Chain = 3, CoChain = 4 };

// max(1, ceil(log2 n)): width of every label and k field.
unsigned label_width(std::size_t n);

// Largest |encode_tree(T(G), n)| allowed for a graph on n >= 3 vertices:
// 64 + (8n - 17) * (4 + 3 * label_width(n)).
std::size_t encoding_envelope(std::size_t n);

// Header "BCT1" + n (32-bit big-endian), then the nodes in pre-order, each a
// 3-bit tag followed by its fixed-width payload.
BitStream encode_tree(const DecompositionTree& t, std::size_t n);
DecompositionTree decode_stream(const BitStream& bits);
// Label bound n stored in the header of a stream.
std::size_t stream_label_bound(const BitStream& bits);

// .bg text format.
BipartiteGraph read_graph(std::istream& in);
BipartiteGraph parse_graph(std::string_view text);
// Requires the vertex set to be exactly {1, ..., n}.
void write_graph(std::ostream& out, const BipartiteGraph& g);
std::string format_graph(const BipartiteGraph& g);

BipartiteGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const BipartiteGraph& g);
BitStream load_stream(const std::filesystem::path& path);
void save_stream(const std::filesystem::path& path, const BitStream& bits);

}  // namespace chaindec
