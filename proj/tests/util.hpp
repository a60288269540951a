#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "palfact/types.hpp"

namespace testutil {

inline palfact::Text random_text(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  palfact::Text t(n);
  std::uniform_int_distribution<unsigned> d(0, sigma - 1);
  for (auto& c : t) c = 'a' + d(rng);
  return t;
}

// All strings of length n over the first sigma letters, as index k.
inline palfact::Text nth_string(std::uint64_t k, std::size_t n, unsigned sigma) {
  palfact::Text t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = 'a' + static_cast<unsigned>(k % sigma);
    k /= sigma;
  }
  return t;
}

inline std::uint64_t count_strings(std::size_t n, unsigned sigma) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= sigma;
  return c;
}

}  // namespace testutil
