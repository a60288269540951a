#pragma once

#include <cstdint>
#include <vector>

#include "palfact/pal_iterator.hpp"

namespace palfact {

struct SeriesDesc {
  std::int64_t period = 0;
  CenterIdx head_center = 0;
  std::int64_t head_len = 0;
  std::int64_t tail_len = 0;
  // -1 means the p-periodic suffix reaches the string start.
  std::int64_t left = -1;
  std::int64_t u_len = 0;

  friend bool operator==(const SeriesDesc&, const SeriesDesc&) = default;
};

struct TtlInfo {
  std::int64_t ttl_prime = 0;
  std::int64_t pttl_prime = 0;
};

// Center of the length-d suffix of s[0..n].
constexpr CenterIdx cntr(std::int64_t d, std::int64_t n) { return 2 * n - d + 1; }

// Period and tail length of the series whose head is at x.
void series_at(const PalIterator& it, CenterIdx x, std::int64_t& p, std::int64_t& d);

std::int64_t compute_left(std::int64_t p, CenterIdx head, const PalIterator& it);

// Calls f(SeriesDesc) for each series, head to tail.
template <class F>
void for_each_series(const PalIterator& it, F&& f) {
  const std::int64_t n = it.size() - 1;
  CenterIdx x = it.max_pal();
  while (x != it.end()) {
    SeriesDesc sd;
    series_at(it, x, sd.period, sd.tail_len);
    sd.head_center = x;
    sd.head_len = it.len(x);
    sd.u_len = sd.head_len % sd.period;
    sd.left = compute_left(sd.period, x, it);
    f(sd);
    x = it.next_pal(cntr(sd.tail_len, n));
  }
}

std::vector<SeriesDesc> enumerate_series(const PalIterator& it);

// Time-to-live of the series period, clipped to t_prime. Valid at a phase
// start where the next t_prime letters are predicted to extend maxPal.
std::int64_t ttl_prime(const SeriesDesc& sd, std::int64_t t_prime, const PalIterator& it);
std::vector<TtlInfo> ttl_batch(const std::vector<SeriesDesc>& series, std::int64_t t_prime,
                               const PalIterator& it);

// Number of predicted iterations a suffix center survives, clipped to t_prime.
std::int64_t pttl(CenterIdx center, std::int64_t t_prime, const PalIterator& it);

}  // namespace palfact
