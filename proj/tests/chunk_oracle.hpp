#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "palfact/chunk.hpp"

namespace testutil {

using palfact::ExtLen;
using palfact::kInf;
using palfact::PlPair;
using Values = std::vector<PlPair>;

// Random sequence shaped like a PL segment: every track value is at most one
// more than the other track one step back, and each step picks one of the
// three alternatives.
inline Values random_chain(std::mt19937_64& rng, int len) {
  auto pick = [&](int parity) {
    return ExtLen(static_cast<std::uint32_t>(2 * (rng() % 20) + parity + (parity == 0 ? 2 : 0)));
  };
  // a value of the given parity not above cap
  auto below = [&](ExtLen cap, int parity) {
    if (cap.is_inf()) return pick(parity);
    std::uint32_t v = cap.value();
    const std::uint32_t lowest = parity == 0 ? 0 : 1;
    if (v < lowest) return ExtLen(v);
    v -= 2 * static_cast<std::uint32_t>(rng() % ((v - lowest) / 2 + 1));
    return ExtLen(v);
  };
  Values v;
  PlPair a{pick(0), pick(1)};
  const int r0 = static_cast<int>(rng() % 8);
  if (r0 == 0) a.even = kInf;
  if (r0 == 1) a.odd = kInf;
  if (r0 == 2) a = {kInf, kInf};
  v.push_back(a);
  for (int i = 1; i < len; ++i) {
    PlPair c;
    for (int j = 0; j < 2; ++j) {
      const ExtLen o1 = v[i - 1][1 - j];
      const int r = static_cast<int>(rng() % 5);
      if (r >= 3) {
        const ExtLen cand = i >= 2 ? v[i - 2][1 - j] + 1 : below(o1 + 1, j);
        c[j] = cand <= o1 + 1 ? cand : o1 + 1;
      } else if (r == 2 && !o1.is_inf() && o1.value() >= 2) {
        c[j] = o1 - 1;
      } else {
        c[j] = o1 + 1;
      }
    }
    v.push_back(c);
  }
  return v;
}

// Definitional smoothing: min over later positions with slope one.
inline Values smooth_def(const Values& v) {
  Values out = v;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int j = 0; j < 2; ++j)
      for (std::size_t k = i; k < v.size(); ++k)
        out[i][j] = min(out[i][j], v[k][(j + static_cast<int>(k - i)) % 2] + static_cast<std::uint32_t>(k - i));
  return out;
}

inline bool chain_valid(const Values& v) {
  for (std::size_t i = 2; i < v.size(); ++i)
    for (int j = 0; j < 2; ++j) {
      const ExtLen x = v[i][j], o1 = v[i - 1][1 - j], o2 = v[i - 2][1 - j];
      const bool ok = x == o1 + 1 || (!o1.is_inf() && o1.value() >= 1 && x == o1 - 1) || x == o2 + 1;
      if (!ok) return false;
    }
  return true;
}

// Reads codes directly from the packed word.
inline Values decode_def(const palfact::Chunk& c) {
  Values v;
  v.push_back({c.seeds[0], c.seeds[1]});
  if (c.len > 1) v.push_back({c.seeds[2], c.seeds[3]});
  for (int i = 2; i < c.len; ++i) {
    PlPair p;
    for (int j = 0; j < 2; ++j) {
      const int code = static_cast<int>((c.codes >> (((i - 2) * 2 + j) * 2)) & 3u);
      const ExtLen o1 = v[i - 1][1 - j], o2 = v[i - 2][1 - j];
      p[j] = code == 0 ? o1 + 1 : code == 1 ? o1 - 1 : o2 + 1;
    }
    v.push_back(p);
  }
  return v;
}

}  // namespace testutil
