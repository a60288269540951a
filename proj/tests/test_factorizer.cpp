#include <doctest.h>

#include "palfact/factorizer.hpp"
#include "palfact/nlogn.hpp"
#include "palfact/oracle.hpp"
#include "util.hpp"

using namespace palfact;

namespace {

bool valid(const Text& s, const Factorization& f, std::size_t k) {
  if (f.size() != k) return false;
  Text joined;
  for (const Text& w : factors_of(s, f)) {
    if (w.empty()) return false;
    if (!oracle::is_pal(w, 0, static_cast<std::int64_t>(w.size()) - 1)) return false;
    joined.insert(joined.end(), w.begin(), w.end());
  }
  return joined == s;
}

std::optional<Factorization> min_fact(const Text& s, int parity, std::uint64_t* q = nullptr) {
  NlognEngine eng;
  for (Letter a : s) eng.push(a);
  return min_parity_factorization(eng.pl(), eng.iterator(), parity, q);
}

}  // namespace

TEST_CASE("min parity factorization on small examples") {
  const Text abcba = to_text("abcba");
  auto f = min_fact(abcba, 1);
  REQUIRE(f);
  CHECK(f->boundaries == std::vector<std::int64_t>{4});
  CHECK_FALSE(min_fact(abcba, 0));

  const Text s = to_text("acaaba");
  auto g = min_fact(s, 0);
  REQUIRE(g);
  CHECK(valid(s, *g, 2));
  auto h = min_fact(s, 1);
  REQUIRE(h);
  CHECK(valid(s, *h, 5));
}

TEST_CASE("min parity factorization matches pl on random strings") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 300; ++rep) {
    const Text s = testutil::random_text(rng, 1 + rng() % 200, 2 + rep % 3);
    const auto pl = oracle::pl_pairs_naive(s);
    for (int parity = 0; parity < 2; ++parity) {
      std::uint64_t q = 0;
      auto f = min_fact(s, parity, &q);
      const ExtLen want = pl.back()[parity];
      REQUIRE(f.has_value() == !want.is_inf());
      if (!f) continue;
      CHECK(valid(s, *f, want.value()));
      CHECK(q <= 2 * s.size() + 1);
    }
  }
}

TEST_CASE("expand_to_k") {
  const Text abcba = to_text("abcba");
  const Factorization one{{4}};
  const Factorization three = expand_to_k(one, 3);
  CHECK(factors_of(abcba, three) == std::vector<Text>{to_text("a"), to_text("bcb"), to_text("a")});
  CHECK(expand_to_k(one, 1) == one);

  const Text aaaa = to_text("aaaa");
  const Factorization two{{1, 3}};
  CHECK(valid(aaaa, expand_to_k(two, 4), 4));
  CHECK_THROWS_WITH(expand_to_k(two, 3), "no k-factorization");
  CHECK_THROWS_WITH(expand_to_k(two, 6), "no k-factorization");
  CHECK_THROWS_WITH(expand_to_k(one, 0), "no k-factorization");

  // "abba" as one factor reaches at most 3: a, bb, a.
  const Text abba = to_text("abba");
  CHECK_THROWS_WITH(expand_to_k(Factorization{{3}}, 5), "no k-factorization");
  CHECK(valid(abba, expand_to_k(Factorization{{3}}, 3), 3));
}

TEST_CASE("k_factorization known values") {
  CHECK_FALSE(k_factorization(to_text("abcba"), 2));
  const Text s = to_text("acaaba");
  auto f = k_factorization(s, 5);
  REQUIRE(f);
  CHECK(valid(s, *f, 5));
}

TEST_CASE("k_factorization agrees with the exhaustive oracle") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t idx = 0; idx < testutil::count_strings(n, 2); ++idx) {
      const Text s = testutil::nth_string(idx, n, 2);
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) {
        const auto f = k_factorization(s, k);
        REQUIRE(f.has_value() == oracle::has_k_factorization_exhaustive(s, k));
        if (f) REQUIRE(valid(s, *f, static_cast<std::size_t>(k)));
      }
    }
  }
}
