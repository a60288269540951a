#pragma once

#include <cstdint>
#include <vector>

#include "palfact/pal_iterator.hpp"
#include "palfact/series.hpp"
#include "palfact/types.hpp"

namespace palfact {

struct PreElement {
  PlPair value{kInf, kInf};
  bool defined = false;
};

// Online O(n log n) engine: one Algorithm-1 style pass over series heads per letter.
class NlognEngine {
 public:
  PlPair push(Letter a);

  const std::vector<PlPair>& pl() const { return pl_; }
  const PalIterator& iterator() const { return it_; }

  std::vector<PreElement> pre_snapshot(std::int64_t p) const;
  std::int64_t pre_left(std::int64_t p) const;

  // Series heads visited so far.
  std::uint64_t series_visits() const { return visits_; }

 private:
  struct Slot {
    PlPair v;
    std::uint32_t gen = 0;
  };
  struct Pre {
    std::int64_t left = 0;
    std::uint32_t gen = 0;
    std::vector<Slot> slots;
  };

  PlPair at(std::int64_t i) const { return i < 0 ? kEmptyPl : pl_[static_cast<std::size_t>(i)]; }

  PalIterator it_;
  std::vector<PlPair> pl_;
  std::vector<Pre> pre_;
  std::uint64_t visits_ = 0;
};

}  // namespace palfact
