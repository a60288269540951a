#include "palfact/factorizer.hpp"

#include <cassert>
#include <stdexcept>

#include "palfact/eopl.hpp"

namespace palfact {

std::optional<Factorization> min_parity_factorization(const std::vector<PlPair>& pl, const PalIterator& it,
                                                      int parity, std::uint64_t* len_queries) {
  assert(static_cast<std::int64_t>(pl.size()) == it.size());
  const auto n = static_cast<std::int64_t>(pl.size());
  if (n == 0 || (parity != 0 && parity != 1)) return std::nullopt;
  const ExtLen kp = pl.back()[parity];
  if (kp.is_inf()) return std::nullopt;
  const auto k = static_cast<std::int64_t>(kp.value());

  // list[i]: positions j < n - 1 with pl^{i mod 2}[j] = i.
  std::vector<std::vector<std::int64_t>> list(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j + 1 < n; ++j)
    for (int q = 0; q < 2; ++q) {
      const ExtLen v = pl[static_cast<std::size_t>(j)][q];
      if (!v.is_inf() && v.value() < k && static_cast<int>(v.value() % 2) == q)
        list[v.value()].push_back(j);
    }

  std::uint64_t queries = 0;
  std::vector<std::int64_t> rev;
  std::int64_t end = n - 1;
  for (std::int64_t i = k - 1; i >= 1; --i) {
    std::int64_t found = -1;
    for (std::int64_t j : list[static_cast<std::size_t>(i)]) {
      if (j >= end) break;
      ++queries;
      if (it.len(j + 1 + end) >= end - j) {
        found = j;
        break;
      }
    }
    if (found < 0) throw std::logic_error("inconsistent palindromic lengths");
    rev.push_back(end);
    end = found;
  }
  ++queries;
  if (it.len(end) < end + 1) throw std::logic_error("inconsistent palindromic lengths");
  rev.push_back(end);
  if (len_queries) *len_queries = queries;

  Factorization f;
  f.boundaries.assign(rev.rbegin(), rev.rend());
  return f;
}

Factorization expand_to_k(const Factorization& f, std::int64_t k) {
  const auto have = static_cast<std::int64_t>(f.size());
  const std::int64_t n = f.boundaries.empty() ? 0 : f.boundaries.back() + 1;
  if (k < have || k > n || (k - have) % 2 != 0) throw std::invalid_argument("no k-factorization");

  std::int64_t extra = k - have;
  std::vector<std::int64_t> lens;
  lens.reserve(static_cast<std::size_t>(k));
  // aua -> a, u, a peels two letters per step.
  std::int64_t prev = -1;
  for (std::int64_t b : f.boundaries) {
    const std::int64_t len = b - prev;
    prev = b;
    const std::int64_t q = std::min((len - 1) / 2, extra / 2);
    extra -= 2 * q;
    for (std::int64_t r = 0; r < q; ++r) lens.push_back(1);
    lens.push_back(len - 2 * q);
    for (std::int64_t r = 0; r < q; ++r) lens.push_back(1);
  }

  // Two factors aa, bb -> a, a, b, b.
  std::vector<bool> split(lens.size(), false);
  std::int64_t pending = -1;
  for (std::size_t i = 0; i < lens.size() && extra > 0; ++i) {
    if (lens[i] != 2) continue;
    if (pending < 0) {
      pending = static_cast<std::int64_t>(i);
    } else {
      split[static_cast<std::size_t>(pending)] = split[i] = true;
      pending = -1;
      extra -= 2;
    }
  }
  if (extra != 0) throw std::invalid_argument("no k-factorization");

  Factorization out;
  std::int64_t pos = -1;
  for (std::size_t i = 0; i < lens.size(); ++i) {
    if (split[i]) out.boundaries.push_back(++pos);
    pos += lens[i] - (split[i] ? 1 : 0);
    out.boundaries.push_back(pos);
  }
  return out;
}

std::optional<Factorization> k_factorization(const Text& s, std::int64_t k, int chunk_width) {
  if (s.empty() || k < 1 || k > static_cast<std::int64_t>(s.size())) return std::nullopt;
  EoplEngine eng(EoplConfig{chunk_width});
  for (Letter a : s) eng.push(a);
  const int parity = static_cast<int>(k % 2);
  const ExtLen kp = eng.pl().back()[parity];
  if (kp.is_inf() || kp.value() > k) return std::nullopt;
  auto f = min_parity_factorization(eng.pl(), eng.iterator(), parity);
  if (!f) return std::nullopt;
  return expand_to_k(*f, k);
}

std::vector<Text> factors_of(const Text& s, const Factorization& f) {
  std::vector<Text> out;
  std::int64_t prev = -1;
  for (std::int64_t b : f.boundaries) {
    out.emplace_back(s.begin() + prev + 1, s.begin() + b + 1);
    prev = b;
  }
  return out;
}

}  // namespace palfact
