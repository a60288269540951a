#include "palfact/series.hpp"

#include <algorithm>

namespace palfact {

void series_at(const PalIterator& it, CenterIdx x, std::int64_t& p, std::int64_t& d) {
  const std::int64_t n = it.size() - 1;
  const std::int64_t lx = it.len(x);
  p = lx - it.len(it.next_pal(x));
  d = p + lx % p;
  const CenterIdx c = cntr(d, n);
  if (it.len(c) - it.len(it.next_pal(c)) != p) d += p;
}

std::int64_t compute_left(std::int64_t p, CenterIdx head, const PalIterator& it) {
  const std::int64_t n = it.size() - 1;
  const std::int64_t lx = it.len(head);
  const std::int64_t u = lx % p;
  const CenterIdx x1 = 2 * head - cntr(u, n);
  const std::int64_t z = x1 < 0 ? 0 : (it.len(x1) - u) / 2;
  return n - lx - z;
}

std::vector<SeriesDesc> enumerate_series(const PalIterator& it) {
  std::vector<SeriesDesc> out;
  for_each_series(it, [&](const SeriesDesc& sd) { out.push_back(sd); });
  return out;
}

// The predicted text is the mirror of the current one around maxPal, so
// questions about the future become radius queries on mirrored centers.
std::int64_t ttl_prime(const SeriesDesc& sd, std::int64_t t_prime, const PalIterator& it) {
  if (t_prime <= 0) return 0;
  const std::int64_t n = it.size() - 1;
  const CenterIdx y = cntr(sd.u_len, n);
  const CenterIdx y1 = 2 * it.max_pal() - y;
  if (y1 < 0) return 0;
  const std::int64_t w1 = (it.len(y1) - sd.u_len) / 2;
  return std::min(w1, t_prime);
}

std::vector<TtlInfo> ttl_batch(const std::vector<SeriesDesc>& series, std::int64_t t_prime,
                               const PalIterator& it) {
  std::vector<TtlInfo> out;
  out.reserve(series.size());
  const std::int64_t n = it.size() - 1;
  for (const SeriesDesc& sd : series)
    out.push_back({ttl_prime(sd, t_prime, it), pttl(cntr(sd.tail_len, n), t_prime, it)});
  return out;
}

std::int64_t pttl(CenterIdx center, std::int64_t t_prime, const PalIterator& it) {
  if (t_prime <= 0) return 0;
  const CenterIdx m = it.max_pal();
  if (center == m) return t_prime;
  const CenterIdx mirror = 2 * m - center;
  if (mirror < 0) return 0;
  return std::min((it.len(mirror) - it.len(center)) / 2, t_prime);
}

}  // namespace palfact
