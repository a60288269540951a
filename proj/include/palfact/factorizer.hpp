#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palfact/pal_iterator.hpp"
#include "palfact/types.hpp"

namespace palfact {

// Inclusive end positions of the factors, increasing; the last one is |s| - 1.
struct Factorization {
  std::vector<std::int64_t> boundaries;

  std::size_t size() const { return boundaries.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Builds a factorization into exactly pl^parity(s) palindromes, right to left.
// len_queries, if given, receives the number of iterator len() calls.
std::optional<Factorization> min_parity_factorization(const std::vector<PlPair>& pl, const PalIterator& it,
                                                      int parity, std::uint64_t* len_queries = nullptr);

// Grows f to exactly k factors. Throws std::invalid_argument("no k-factorization").
Factorization expand_to_k(const Factorization& f, std::int64_t k);

std::optional<Factorization> k_factorization(const Text& s, std::int64_t k, int chunk_width = 2);

std::vector<Text> factors_of(const Text& s, const Factorization& f);

}  // namespace palfact
