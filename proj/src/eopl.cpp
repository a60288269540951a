#include "palfact/eopl.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace palfact {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

EoplEngine::EoplEngine(EoplConfig cfg) : cfg_(cfg), codec_(ChunkConfig{cfg.t, cfg.mode}) {
  if (cfg.t < 2 || cfg.t > kMaxChunk) throw std::invalid_argument("chunk width out of range");
}

PlPair EoplEngine::push(Letter a) {
  const std::uint64_t before = stats_.ops;
  const bool inside = j_ + 1 < len_;
  if (inside && a == it_.at(a0_ - (j_ + 1))) {
    ++j_;
    it_.add(a);
    new_centers();
  } else {
    if (inside) {
      ++stats_.aborts;
      if (cfg_.record_phases) log_.back().aborted = true;
    }
    it_.add(a);
    start_phase();
  }
  ++stats_.ops;
  const PlPair v = w_[static_cast<std::size_t>(j_)];
  commit(v);
  if (cfg_.record_phases) {
    log_.back().iterations = j_ + 1;
    log_.back().ops += stats_.ops - before;
  }
  return v;
}

void EoplEngine::start_phase() {
  n0_ = it_.size() - 1;
  a0_ = it_.start(it_.max_pal());
  len_ = phase_length(cfg_.t, a0_);
  j_ = 0;
  w_.fill(PlPair{kInf, kInf});
  ++stats_.phases;
  if (cfg_.record_phases) log_.push_back(PhaseRecord{n0_, 0, 0, 0, false});
  bool first = true;
  for_each_series(it_, [&](const SeriesDesc& sd) {
    if (first && cfg_.record_phases) log_.back().period = sd.period;
    first = false;
    process_series(sd);
  });
}

// Palindromes born inside the phase: the odd center at the new letter and the
// even one before it.
void EoplEngine::new_centers() {
  const std::int64_t n = n0_ + j_;
  const std::int64_t hz = len_ - 1 - j_;
  cover(n - 1, j_, pttl(2 * n, hz, it_));
  if (it_.is_suffix_center(2 * n - 1)) cover(n - 2, j_, pttl(2 * n - 1, hz, it_));
}

void EoplEngine::process_series(const SeriesDesc& sd) {
  const std::int64_t n = n0_;
  const std::int64_t hz = len_ - 1;
  const std::int64_t p = sd.period;
  const std::int64_t head = sd.head_len;
  const std::int64_t tail = sd.tail_len;
  const std::int64_t tail_life = pttl(cntr(tail, n), hz, it_);
  ++stats_.ops;

  cover(n - head, 0, pttl(sd.head_center, hz, it_));
  if (tail != head) cover(n - tail, 0, tail_life);
  if ((head - tail) / p + 1 < 3) return;

  // A member reaching the left end of the periodic run may outlive the period.
  const std::int64_t left = sd.left;
  for (std::int64_t len = head - p; len > tail && n - len - left <= hz; len -= p)
    cover(n - len, 0, pttl(cntr(len, n), hz, it_));

  // Other inner members, through the class minima of PRE[p].
  const std::int64_t d =
      p >= cfg_.t ? std::min(ttl_prime(sd, hz, it_), tail_life) : std::min(tail_life, n - tail - left);
  Pre& pre = pre_for(p, left);
  const std::int64_t i = n - head - left;
  assert(i >= 0 && i < p);

  pending_.clear();
  for (std::int64_t j = 0; j <= d; ++j) {
    const std::int64_t r = mod(i - j, p);
    const std::int64_t hi_pos = n - tail - j;
    std::int64_t lo_pos = n - head - j;
    if (lo_pos < left) lo_pos += (left - lo_pos + p - 1) / p * p;
    if (lo_pos > hi_pos) continue;
    SlotChunk& sc = slot_chunk(pre, r);
    const auto off = static_cast<std::size_t>(r % cfg_.t);
    const auto want_lo = static_cast<std::int32_t>((lo_pos - left - r) / p);
    const auto want_hi = static_cast<std::int32_t>((hi_pos - left - r) / p);
    std::int32_t& lo = sc.lo[off];
    std::int32_t& hi = sc.hi[off];
    if (lo > hi) {
      for (std::int32_t l = want_lo; l <= want_hi; ++l) pending_.push_back(left + r + l * p);
      lo = want_lo;
      hi = want_hi;
      continue;
    }
    for (std::int32_t l = want_lo; l < lo; ++l) pending_.push_back(left + r + l * p);
    for (std::int32_t l = hi + 1; l <= want_hi; ++l) pending_.push_back(left + r + l * p);
    lo = std::min(lo, want_lo);
    hi = std::max(hi, want_hi);
  }
  std::sort(pending_.begin(), pending_.end());
  for (std::size_t a = 0; a < pending_.size();) {
    std::size_t b = a;
    while (b + 1 < pending_.size() && pending_[b + 1] == pending_[b] + 1) ++b;
    fold_run(pre, pending_[a], pending_[b]);
    a = b + 1;
  }

  ChunkValues vals{};
  std::int64_t cached = -1;
  for (std::int64_t j = 0; j <= d; ++j) {
    const std::int64_t r = mod(i - j, p);
    const std::int64_t ci = r / cfg_.t;
    const auto found = pre.chunks.find(ci);
    if (found == pre.chunks.end()) continue;
    if (ci != cached) {
      codec_.decode_into(found->second.values, vals.data());
      cached = ci;
      ++stats_.ops;
    }
    const auto off = static_cast<std::size_t>(r % cfg_.t);
    if (found->second.lo[off] > found->second.hi[off]) continue;
    PlPair& w = w_[static_cast<std::size_t>(j)];
    w = min(w, vals[off].plus_one_swapped());
  }
}

// W[j0 + x] takes PL[q0 - x] + 1 for x in [0, life].
void EoplEngine::cover(std::int64_t q0, std::int64_t j0, std::int64_t life) {
  assert(q0 - life >= -1 && j0 + life < len_);
  std::array<PlPair, kMaxChunk> buf;
  read_pl(q0 - life, q0, buf.data());
  for (std::int64_t x = 0; x <= life; ++x) {
    PlPair& w = w_[static_cast<std::size_t>(j0 + x)];
    w = min(w, buf[static_cast<std::size_t>(life - x)].plus_one_swapped());
  }
}

void EoplEngine::read_pl(std::int64_t a, std::int64_t b, PlPair* out) {
  ChunkValues vals{};
  std::int64_t cached = -1;
  for (std::int64_t q = a; q <= b; ++q) {
    if (q < 0) {
      *out++ = kEmptyPl;
      continue;
    }
    const std::int64_t ci = q / cfg_.t;
    if (ci != cached) {
      codec_.decode_into(plc_[static_cast<std::size_t>(ci)], vals.data());
      cached = ci;
      ++stats_.ops;
    }
    *out++ = vals[static_cast<std::size_t>(q % cfg_.t)];
  }
}

Chunk EoplEngine::pl_piece(std::int64_t a, std::int64_t len) {
  const std::int64_t c1 = a / cfg_.t;
  const std::int64_t c2 = (a + len - 1) / cfg_.t;
  const Chunk* second = c2 != c1 ? &plc_[static_cast<std::size_t>(c2)] : nullptr;
  return codec_.extract_range(plc_[static_cast<std::size_t>(c1)], second, static_cast<int>(a % cfg_.t),
                              static_cast<int>(len));
}

void EoplEngine::commit(PlPair v) {
  out_.push_back(v);
  const auto q = static_cast<std::int64_t>(out_.size()) - 1;
  if (q % cfg_.t == 0) {
    plc_.push_back(codec_.single(v));
  } else {
    ChunkValues vals{};
    Chunk& last = plc_.back();
    codec_.decode_into(last, vals.data());
    vals[last.len] = v;
    last = codec_.encode(std::span<const PlPair>(vals.data(), last.len + 1u));
  }
  ++stats_.ops;
}

EoplEngine::Pre& EoplEngine::pre_for(std::int64_t p, std::int64_t left) {
  Pre& pre = pre_[p];
  if (pre.p == 0 || pre.left != left) {
    if (pre.p != 0) ++stats_.pre_resets;
    pre.p = p;
    pre.left = left;
    pre.chunks.clear();
  }
  return pre;
}

EoplEngine::SlotChunk& EoplEngine::slot_chunk(Pre& pre, std::int64_t r) {
  const std::int64_t ci = r / cfg_.t;
  auto [pos, fresh] = pre.chunks.try_emplace(ci);
  if (fresh) {
    const auto width = static_cast<int>(std::min<std::int64_t>(cfg_.t, pre.p - ci * cfg_.t));
    pos->second.values = codec_.all_inf(width);
    pos->second.lo.fill(1);
    pos->second.hi.fill(0);
  }
  return pos->second;
}

// Folds PL[a..b] into the slots of its classes. Each piece is padded out to its
// slot chunk by extrapolation.
void EoplEngine::fold_run(Pre& pre, std::int64_t a, std::int64_t b) {
  const std::int64_t t = cfg_.t;
  if (pre.p < t) return fold_wrapped(pre, a, b);
  for (std::int64_t q = a; q <= b;) {
    const std::int64_t r = mod(q - pre.left, pre.p);
    const std::int64_t start = r / t * t;
    const std::int64_t width = std::min(t, pre.p - start);
    const std::int64_t len = q < 0 ? 1 : std::min(b - q + 1, start + width - r);
    Chunk piece = q < 0 ? codec_.single(kEmptyPl) : pl_piece(q, len);
    piece = codec_.smooth(piece);
    const Chunk ext = codec_.extend(piece, static_cast<int>(r - start), static_cast<int>(width - (r - start) - len));
    SlotChunk& sc = slot_chunk(pre, r);
    sc.values = codec_.min_pointwise(sc.values, ext);
    stats_.ops += 4;
    stats_.folded += static_cast<std::uint64_t>(len);
    q += len;
  }
}

// p < t: the whole PRE is one chunk, and up to t positions wrap around it
// several times. Each piece is reduced into the p slots in one pass.
void EoplEngine::fold_wrapped(Pre& pre, std::int64_t a, std::int64_t b) {
  const std::int64_t p = pre.p;
  for (std::int64_t q = a; q <= b;) {
    const std::int64_t len = q < 0 ? 1 : std::min<std::int64_t>(b - q + 1, cfg_.t);
    ChunkValues vals{};
    codec_.decode_into(codec_.smooth(q < 0 ? codec_.single(kEmptyPl) : pl_piece(q, len)), vals.data());
    ChunkValues acc;
    acc.fill(PlPair{kInf, kInf});
    for (std::int64_t x = 0; x < len; ++x) {
      const std::int64_t r = mod(q + x - pre.left, p);
      PlPair v = vals[static_cast<std::size_t>(x)];
      for (std::int64_t y = r; y >= 0; --y, v = v.plus_one_swapped())
        acc[static_cast<std::size_t>(y)] = min(acc[static_cast<std::size_t>(y)], v);
      v = vals[static_cast<std::size_t>(x)];
      for (std::int64_t y = r; y < p; ++y, v = v.plus_one_swapped())
        acc[static_cast<std::size_t>(y)] = min(acc[static_cast<std::size_t>(y)], v);
    }
    SlotChunk& sc = slot_chunk(pre, 0);
    sc.values = codec_.min_pointwise(sc.values, codec_.encode(std::span<const PlPair>(acc.data(), p)));
    stats_.ops += 4;
    stats_.folded += static_cast<std::uint64_t>(len);
    q += len;
  }
}

std::vector<PreElement> EoplEngine::pre_snapshot(std::int64_t p) const {
  std::vector<PreElement> out(static_cast<std::size_t>(std::max<std::int64_t>(p, 0)));
  const auto found = pre_.find(p);
  if (found == pre_.end()) return out;
  for (const auto& [ci, sc] : found->second.chunks) {
    const auto vals = codec_.decode(sc.values);
    for (std::size_t off = 0; off < vals.size(); ++off) {
      if (sc.lo[off] > sc.hi[off]) continue;
      PreElement& e = out[static_cast<std::size_t>(ci * cfg_.t) + off];
      e.value = vals[off];
      e.defined = true;
    }
  }
  return out;
}

std::int64_t EoplEngine::pre_left(std::int64_t p) const {
  const auto found = pre_.find(p);
  if (found == pre_.end()) throw std::out_of_range("unknown period");
  return found->second.left;
}

std::pair<std::int64_t, std::int64_t> EoplEngine::pre_range(std::int64_t p, std::int64_t r) const {
  const auto found = pre_.find(p);
  if (found == pre_.end() || r < 0 || r >= p) return {1, 0};
  const Pre& pre = found->second;
  const auto sc = pre.chunks.find(r / cfg_.t);
  if (sc == pre.chunks.end()) return {1, 0};
  const auto off = static_cast<std::size_t>(r % cfg_.t);
  if (sc->second.lo[off] > sc->second.hi[off]) return {1, 0};
  return {pre.left + r + sc->second.lo[off] * p, pre.left + r + sc->second.hi[off] * p};
}

}  // namespace palfact
