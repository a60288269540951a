#include "palfact/oracle.hpp"

#include <stdexcept>

namespace palfact::oracle {

bool is_pal(const Text& s, std::int64_t i, std::int64_t j) {
  while (i < j) {
    if (s[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(j)]) return false;
    ++i;
    --j;
  }
  return true;
}

std::int64_t min_period(const Text& s, std::int64_t i, std::int64_t j) {
  const std::int64_t len = j - i + 1;
  for (std::int64_t p = 1; p < len; ++p) {
    bool ok = true;
    for (std::int64_t k = i; k + p <= j && ok; ++k)
      ok = s[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(k + p)];
    if (ok) return p;
  }
  return len;
}

std::vector<std::int64_t> suffix_pal_lengths(const Text& s) {
  const auto n = static_cast<std::int64_t>(s.size());
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < n; ++i)
    if (is_pal(s, i, n - 1)) out.push_back(n - i);
  return out;
}

std::int64_t left_naive(const Text& s, std::int64_t p) {
  const auto n = static_cast<std::int64_t>(s.size()) - 1;
  std::int64_t len = p;
  while (len < n + 1 && s[static_cast<std::size_t>(n - len)] == s[static_cast<std::size_t>(n - len + p)])
    ++len;
  return n - len;
}

std::vector<PlPair> pl_pairs_naive(const Text& s) {
  const auto n = static_cast<std::int64_t>(s.size());
  std::vector<PlPair> pl(s.size(), PlPair{kInf, kInf});
  auto at = [&](std::int64_t i) { return i < 0 ? kEmptyPl : pl[static_cast<std::size_t>(i)]; };
  for (std::int64_t k = 0; k < n; ++k) {
    PlPair best{kInf, kInf};
    for (std::int64_t i = 0; i <= k; ++i)
      if (is_pal(s, i, k)) best = min(best, at(i - 1).plus_one_swapped());
    pl[static_cast<std::size_t>(k)] = best;
  }
  return pl;
}

bool has_k_factorization_exhaustive(const Text& s, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(s.size());
  if (n > 18) throw std::invalid_argument("input too large for exhaustive oracle");
  if (k < 0 || k > n) return false;
  // memo[pos][r]: can s[pos..] be split into r palindromes; 0 unknown, 1 no, 2 yes
  std::vector<std::vector<char>> memo(static_cast<std::size_t>(n + 1),
                                      std::vector<char>(static_cast<std::size_t>(k + 1), 0));
  auto go = [&](auto&& self, std::int64_t pos, std::int64_t r) -> bool {
    if (pos == n) return r == 0;
    if (r == 0 || n - pos < r) return false;
    char& m = memo[static_cast<std::size_t>(pos)][static_cast<std::size_t>(r)];
    if (m) return m == 2;
    bool ok = false;
    for (std::int64_t e = pos; e < n && !ok; ++e)
      ok = is_pal(s, pos, e) && self(self, e + 1, r - 1);
    m = ok ? 2 : 1;
    return ok;
  };
  return go(go, 0, k);
}

std::vector<SeriesDesc> series_naive(const Text& s) {
  const auto n = static_cast<std::int64_t>(s.size()) - 1;
  const auto lens = suffix_pal_lengths(s);
  std::vector<SeriesDesc> out;
  std::size_t k = 0;
  while (k < lens.size()) {
    const std::int64_t p = min_period(s, n - lens[k] + 1, n);
    std::size_t e = k;
    while (e + 1 < lens.size() && min_period(s, n - lens[e + 1] + 1, n) == p) ++e;
    SeriesDesc sd;
    sd.period = p;
    sd.head_len = lens[k];
    sd.head_center = 2 * n - lens[k] + 1;
    sd.tail_len = lens[e];
    sd.u_len = lens[k] % p;
    sd.left = left_naive(s, p);
    out.push_back(sd);
    k = e + 1;
  }
  return out;
}

}  // namespace palfact::oracle
