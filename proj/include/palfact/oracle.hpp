#pragma once

#include <cstdint>
#include <vector>

#include "palfact/series.hpp"
#include "palfact/types.hpp"

namespace palfact::oracle {

bool is_pal(const Text& s, std::int64_t i, std::int64_t j);

// Minimal period of s[i..j].
std::int64_t min_period(const Text& s, std::int64_t i, std::int64_t j);

// Lengths of non-empty suffix-palindromes, longest first.
std::vector<std::int64_t> suffix_pal_lengths(const Text& s);

// left[p] by a direct scan over the whole string.
std::int64_t left_naive(const Text& s, std::int64_t p);

std::vector<PlPair> pl_pairs_naive(const Text& s);

bool has_k_factorization_exhaustive(const Text& s, std::int64_t k);

std::vector<SeriesDesc> series_naive(const Text& s);

}  // namespace palfact::oracle
