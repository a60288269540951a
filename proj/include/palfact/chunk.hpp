#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "palfact/types.hpp"

namespace palfact {

enum class OpMode { Table, Direct };

struct ChunkConfig {
  int t = 2;
  OpMode mode = OpMode::Direct;
};

inline constexpr int kMaxChunk = 16;

// Four explicit values (A0[0], A1[0], A0[1], A1[1]) plus two 2-bit codes per
// later index, one per track:
//   0: other track one step back, plus 1
//   1: other track one step back, minus 1
//   2: other track two steps back, plus 1 (a drop)
//   3: unused slot
struct Chunk {
  std::array<ExtLen, 4> seeds{};
  std::uint64_t codes = ~std::uint64_t{0};
  std::uint8_t len = 0;
  bool smoothed = false;

  int code(int i, int j) const { return static_cast<int>((codes >> shift(i, j)) & 3u); }
  void set_code(int i, int j, int c) {
    codes = (codes & ~(std::uint64_t{3} << shift(i, j))) | (std::uint64_t(c) << shift(i, j));
  }
  static int shift(int i, int j) { return ((i - 2) * 2 + j) * 2; }

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

using ChunkValues = std::array<PlPair, kMaxChunk>;

class ChunkCodec {
 public:
  explicit ChunkCodec(ChunkConfig cfg);

  const ChunkConfig& config() const { return cfg_; }
  int t() const { return cfg_.t; }

  Chunk encode(std::span<const PlPair> values) const;
  std::vector<PlPair> decode(const Chunk& c) const;
  void decode_into(const Chunk& c, PlPair* out) const;

  Chunk increment(const Chunk& c) const;
  Chunk swap_parity(const Chunk& c) const;
  PlPair extract(const Chunk& c, int l) const;
  // (AB)[l .. min(l + d - 1, |AB| - 1)]; b may be null.
  Chunk extract_range(const Chunk& a, const Chunk* b, int l, int d) const;
  Chunk reverse(const Chunk& c) const;
  std::pair<Chunk, std::optional<Chunk>> concat(const Chunk& a, const Chunk& b) const;
  Chunk extend(const Chunk& c, int l, int r) const;
  Chunk min_pointwise(const Chunk& a, const Chunk& b) const;
  Chunk smooth(const Chunk& c) const;

  // Convenience builders.
  Chunk all_inf(int len) const;
  Chunk single(PlPair v) const { return encode(std::span<const PlPair>(&v, 1)); }

 private:
  struct Ref {
    std::int8_t slot;
    std::int8_t off;
  };
  struct Block {
    std::array<Ref, 8> out;
  };

  Chunk encode_raw(const PlPair* v, int len) const;
  void decode_direct(const Chunk& c, PlPair* out) const;
  void decode_table(const Chunk& c, PlPair* out) const;
  void build_tables();

  ChunkConfig cfg_;
  // tables_[b - 1] covers blocks of b indices.
  std::array<std::vector<Block>, 4> tables_;
};

// Pointwise reference helpers shared with tests.
bool is_smooth_values(std::span<const PlPair> v);
void smooth_values(std::span<PlPair> v);

}  // namespace palfact
