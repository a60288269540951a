#include "palfact/chunk.hpp"

#include <algorithm>
#include <stdexcept>

namespace palfact {

namespace {

ExtLen shifted(ExtLen x, int off) {
  if (x.is_inf()) return x;
  return ExtLen(static_cast<std::uint32_t>(static_cast<std::int64_t>(x.value()) + off));
}

// Lowest code describing v[i][j], or -1.
int pick_code(const PlPair* v, int i, int j) {
  const int l = 1 - j;
  const ExtLen x = v[i][j];
  const ExtLen a = v[i - 1][l];
  if (x == a + 1) return 0;
  if (!a.is_inf() && a.value() >= 1 && x == a - 1) return 1;
  if (x == v[i - 2][l] + 1) return 2;
  return -1;
}

bool chain_ok(const PlPair* v, int len) {
  for (int i = 2; i < len; ++i)
    for (int j = 0; j < 2; ++j)
      if (pick_code(v, i, j) < 0) return false;
  return true;
}

}  // namespace

bool is_smooth_values(std::span<const PlPair> v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    for (int j = 0; j < 2; ++j)
      if (v[i][j] > v[i + 1][1 - j] + 1) return false;
  return true;
}

void smooth_values(std::span<PlPair> v) {
  for (std::size_t i = v.size(); i-- > 1;)
    for (int j = 0; j < 2; ++j) v[i - 1][j] = min(v[i - 1][j], v[i][1 - j] + 1);
}

ChunkCodec::ChunkCodec(ChunkConfig cfg) : cfg_(cfg) {
  if (cfg_.t < 2 || cfg_.t > kMaxChunk) throw std::invalid_argument("chunk width must be in 2..16");
  if (cfg_.mode == OpMode::Table) build_tables();
}

void ChunkCodec::build_tables() {
  for (int b = 1; b <= 4; ++b) {
    auto& tab = tables_[static_cast<std::size_t>(b - 1)];
    tab.resize(std::size_t{1} << (4 * b));
    for (std::uint32_t w = 0; w < tab.size(); ++w) {
      // slots 0,1: two steps back; 2,3: one step back
      Ref prev2[2] = {{0, 0}, {1, 0}};
      Ref prev1[2] = {{2, 0}, {3, 0}};
      Block blk{};
      for (int k = 0; k < b; ++k) {
        Ref cur[2];
        for (int j = 0; j < 2; ++j) {
          const int c = static_cast<int>((w >> ((k * 2 + j) * 2)) & 3u);
          const int l = 1 - j;
          switch (c) {
            case 0: cur[j] = {prev1[l].slot, static_cast<std::int8_t>(prev1[l].off + 1)}; break;
            case 1: cur[j] = {prev1[l].slot, static_cast<std::int8_t>(prev1[l].off - 1)}; break;
            case 2: cur[j] = {prev2[l].slot, static_cast<std::int8_t>(prev2[l].off + 1)}; break;
            default: cur[j] = {-1, 0}; break;
          }
          blk.out[static_cast<std::size_t>(k * 2 + j)] = cur[j];
        }
        prev2[0] = prev1[0];
        prev2[1] = prev1[1];
        prev1[0] = cur[0];
        prev1[1] = cur[1];
      }
      tab[w] = blk;
    }
  }
}

Chunk ChunkCodec::encode_raw(const PlPair* v, int len) const {
  if (len < 1 || len > cfg_.t) throw std::length_error("chunk width overflow");
  Chunk c;
  c.len = static_cast<std::uint8_t>(len);
  c.seeds = {v[0].even, v[0].odd, kInf, kInf};
  if (len > 1) {
    c.seeds[2] = v[1].even;
    c.seeds[3] = v[1].odd;
  }
  for (int i = 2; i < len; ++i)
    for (int j = 0; j < 2; ++j) {
      const int code = pick_code(v, i, j);
      if (code < 0) throw std::invalid_argument("not chunk-encodable");
      c.set_code(i, j, code);
    }
  c.smoothed = is_smooth_values(std::span<const PlPair>(v, static_cast<std::size_t>(len)));
  return c;
}

Chunk ChunkCodec::encode(std::span<const PlPair> values) const {
  if (values.size() > static_cast<std::size_t>(cfg_.t)) throw std::length_error("chunk width overflow");
  return encode_raw(values.data(), static_cast<int>(values.size()));
}

void ChunkCodec::decode_direct(const Chunk& c, PlPair* out) const {
  out[0] = {c.seeds[0], c.seeds[1]};
  if (c.len > 1) out[1] = {c.seeds[2], c.seeds[3]};
  std::uint64_t w = c.codes;
  for (int i = 2; i < c.len; ++i) {
    for (int j = 0; j < 2; ++j, w >>= 2) {
      const int l = 1 - j;
      switch (w & 3u) {
        case 0: out[i][j] = out[i - 1][l] + 1; break;
        case 1: out[i][j] = out[i - 1][l] - 1; break;
        default: out[i][j] = out[i - 2][l] + 1; break;
      }
    }
  }
}

void ChunkCodec::decode_table(const Chunk& c, PlPair* out) const {
  out[0] = {c.seeds[0], c.seeds[1]};
  if (c.len > 1) out[1] = {c.seeds[2], c.seeds[3]};
  for (int i = 2; i < c.len;) {
    const int b = std::min(4, c.len - i);
    const auto w = static_cast<std::uint32_t>((c.codes >> Chunk::shift(i, 0)) & ((std::uint64_t{1} << (4 * b)) - 1));
    const Block& blk = tables_[static_cast<std::size_t>(b - 1)][w];
    const ExtLen state[4] = {out[i - 2].even, out[i - 2].odd, out[i - 1].even, out[i - 1].odd};
    for (int k = 0; k < 2 * b; ++k) {
      const Ref r = blk.out[static_cast<std::size_t>(k)];
      out[i + k / 2][k % 2] = shifted(state[r.slot], r.off);
    }
    i += b;
  }
}

void ChunkCodec::decode_into(const Chunk& c, PlPair* out) const {
  if (cfg_.mode == OpMode::Table) decode_table(c, out);
  else decode_direct(c, out);
}

std::vector<PlPair> ChunkCodec::decode(const Chunk& c) const {
  std::vector<PlPair> v(c.len);
  decode_into(c, v.data());
  return v;
}

Chunk ChunkCodec::increment(const Chunk& c) const {
  Chunk r = c;
  for (auto& s : r.seeds) s = s + 1;
  return r;
}

Chunk ChunkCodec::swap_parity(const Chunk& c) const {
  Chunk r = c;
  std::swap(r.seeds[0], r.seeds[1]);
  std::swap(r.seeds[2], r.seeds[3]);
  constexpr std::uint64_t lo = 0x3333333333333333ull;
  r.codes = ((c.codes & lo) << 2) | ((c.codes >> 2) & lo);
  return r;
}

PlPair ChunkCodec::extract(const Chunk& c, int l) const {
  if (l < 0 || l >= c.len) throw std::out_of_range("chunk index out of range");
  ChunkValues v;
  decode_into(c, v.data());
  return v[static_cast<std::size_t>(l)];
}

Chunk ChunkCodec::extract_range(const Chunk& a, const Chunk* b, int l, int d) const {
  std::array<PlPair, 2 * kMaxChunk> v;
  decode_into(a, v.data());
  int total = a.len;
  if (b) {
    decode_into(*b, v.data() + a.len);
    total += b->len;
  }
  if (l < 0 || l >= total || d < 1) throw std::out_of_range("chunk range out of range");
  const int r = std::min(l + d - 1, total - 1);
  if (b && l < a.len && r >= a.len) {
    const int lo = std::max(l, a.len - 2);
    const int hi = std::min(r, a.len + 1);
    if (!chain_ok(v.data() + lo, hi - lo + 1)) throw std::invalid_argument("seam incompatibility");
  }
  return encode_raw(v.data() + l, r - l + 1);
}

Chunk ChunkCodec::reverse(const Chunk& c) const {
  ChunkValues v;
  decode_into(c, v.data());
  std::reverse(v.begin(), v.begin() + c.len);
  return encode_raw(v.data(), c.len);
}

std::pair<Chunk, std::optional<Chunk>> ChunkCodec::concat(const Chunk& a, const Chunk& b) const {
  std::array<PlPair, 2 * kMaxChunk> v;
  decode_into(a, v.data());
  decode_into(b, v.data() + a.len);
  const int total = a.len + b.len;
  const int lo = std::max(0, a.len - 2);
  const int hi = std::min(total - 1, a.len + 1);
  if (!chain_ok(v.data() + lo, hi - lo + 1)) throw std::invalid_argument("seam incompatibility");
  if (total <= cfg_.t) return {encode_raw(v.data(), total), std::nullopt};
  return {encode_raw(v.data(), cfg_.t), encode_raw(v.data() + cfg_.t, total - cfg_.t)};
}

Chunk ChunkCodec::extend(const Chunk& c, int l, int r) const {
  if (l < 0 || r < 0 || c.len + l + r > cfg_.t) throw std::length_error("chunk width overflow");
  ChunkValues v;
  decode_into(c, v.data() + l);
  for (int i = l - 1; i >= 0; --i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i + 1)].plus_one_swapped();
  const int end = l + c.len;
  for (int i = end; i < end + r; ++i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)].plus_one_swapped();
  return encode_raw(v.data(), end + r);
}

Chunk ChunkCodec::min_pointwise(const Chunk& a, const Chunk& b) const {
  if (a.len != b.len) throw std::invalid_argument("length mismatch");
  if (!a.smoothed || !b.smoothed) throw std::invalid_argument("min_pointwise needs smoothed inputs");
  ChunkValues va, vb;
  decode_into(a, va.data());
  decode_into(b, vb.data());
  for (int i = 0; i < a.len; ++i) va[static_cast<std::size_t>(i)] = min(va[static_cast<std::size_t>(i)], vb[static_cast<std::size_t>(i)]);
  smooth_values(std::span<PlPair>(va.data(), a.len));
  return encode_raw(va.data(), a.len);
}

Chunk ChunkCodec::smooth(const Chunk& c) const {
  ChunkValues v;
  decode_into(c, v.data());
  smooth_values(std::span<PlPair>(v.data(), c.len));
  return encode_raw(v.data(), c.len);
}

Chunk ChunkCodec::all_inf(int len) const {
  ChunkValues v;
  v.fill(PlPair{kInf, kInf});
  return encode_raw(v.data(), len);
}

}  // namespace palfact
