#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "palfact/chunk.hpp"
#include "palfact/nlogn.hpp"
#include "palfact/pal_iterator.hpp"
#include "palfact/series.hpp"
#include "palfact/types.hpp"

namespace palfact {

struct EoplConfig {
  int t = 2;
  OpMode mode = OpMode::Direct;
  // Keep one PhaseRecord per phase.
  bool record_phases = false;
};

struct PhaseRecord {
  std::int64_t start = 0;
  std::int64_t iterations = 0;
  // Minimal period of the longest suffix-palindrome at the phase start.
  std::int64_t period = 0;
  std::uint64_t ops = 0;
  bool aborted = false;
};

struct EoplStats {
  std::uint64_t phases = 0;
  std::uint64_t aborts = 0;
  std::uint64_t ops = 0;
  std::uint64_t folded = 0;
  std::uint64_t pre_resets = 0;
};

// Phase length for a prefix whose longest suffix-palindrome starts at a0.
inline std::int64_t phase_length(int t, std::int64_t a0) { return std::min<std::int64_t>(t, a0 + 1); }

// Linear-time online engine. PL is kept in chunks of width t; every phase of at
// most t letters is prepared once from the series of its first prefix.
class EoplEngine {
 public:
  explicit EoplEngine(EoplConfig cfg = {});

  PlPair push(Letter a);

  const std::vector<PlPair>& pl() const { return out_; }
  const PalIterator& iterator() const { return it_; }
  const ChunkCodec& codec() const { return codec_; }
  const EoplStats& stats() const { return stats_; }
  const std::vector<PhaseRecord>& phase_log() const { return log_; }

  // Decoded PRE[p]; a slot is defined once some position of its class was folded.
  std::vector<PreElement> pre_snapshot(std::int64_t p) const;
  std::int64_t pre_left(std::int64_t p) const;
  // Folded positions of slot r as [lo, hi] (class step p), or {1, 0} if none.
  std::pair<std::int64_t, std::int64_t> pre_range(std::int64_t p, std::int64_t r) const;

  // Committed PL chunks.
  const std::vector<Chunk>& pl_chunks() const { return plc_; }

 private:
  struct SlotChunk {
    Chunk values;
    // Folded levels per slot: positions left + r + level * p, lo..hi.
    std::array<std::int32_t, kMaxChunk> lo{};
    std::array<std::int32_t, kMaxChunk> hi{};
  };
  struct Pre {
    std::int64_t p = 0;
    std::int64_t left = 0;
    std::unordered_map<std::int64_t, SlotChunk> chunks;
  };

  void start_phase();
  void new_centers();
  void process_series(const SeriesDesc& sd);
  void cover(std::int64_t q0, std::int64_t j0, std::int64_t life);
  void commit(PlPair v);

  void read_pl(std::int64_t a, std::int64_t b, PlPair* out);
  Chunk pl_piece(std::int64_t a, std::int64_t len);

  Pre& pre_for(std::int64_t p, std::int64_t left);
  SlotChunk& slot_chunk(Pre& pre, std::int64_t r);
  void fold_run(Pre& pre, std::int64_t a, std::int64_t b);
  void fold_wrapped(Pre& pre, std::int64_t a, std::int64_t b);

  EoplConfig cfg_;
  ChunkCodec codec_;
  PalIterator it_;
  std::vector<Chunk> plc_;
  std::vector<PlPair> out_;
  std::unordered_map<std::int64_t, Pre> pre_;

  // Current phase.
  std::int64_t n0_ = 0;
  std::int64_t a0_ = 0;
  std::int64_t len_ = 0;
  std::int64_t j_ = 0;
  ChunkValues w_{};

  EoplStats stats_;
  std::vector<PhaseRecord> log_;
  std::vector<std::int64_t> pending_;
};

}  // namespace palfact
