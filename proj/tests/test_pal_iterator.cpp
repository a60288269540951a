#include <doctest.h>

#include <random>

#include "palfact/oracle.hpp"
#include "palfact/pal_iterator.hpp"
#include "util.hpp"

using namespace palfact;

namespace {

PalIterator feed(std::string_view s) {
  PalIterator it;
  for (unsigned char c : s) it.add(c);
  return it;
}

std::vector<CenterIdx> naive_centers(const Text& s) {
  std::vector<CenterIdx> out;
  const auto n = static_cast<std::int64_t>(s.size());
  for (std::int64_t i = 0; i < n; ++i)
    if (oracle::is_pal(s, i, n - 1)) out.push_back(i + n - 1);
  return out;
}

std::int64_t naive_len(const Text& s, CenterIdx c) {
  const auto n = static_cast<std::int64_t>(s.size());
  std::int64_t i = c / 2, j = c - c / 2;
  if (i != j && s[i] != s[j]) return 0;
  while (i > 0 && j < n - 1 && s[i - 1] == s[j + 1]) --i, ++j;
  return j - i + 1;
}

}  // namespace

TEST_CASE("iterator basic examples") {
  auto it = feed("aba");
  CHECK(it.max_pal() == 2);
  CHECK(it.len(2) == 3);

  PalIterator e;
  CHECK(e.add('a').empty());
  CHECK(e.suffix_centers() == std::vector<CenterIdx>{0});

  auto aa = feed("aa");
  const auto& dead = aa.add('b');
  REQUIRE(dead.size() >= 1);
  bool saw = false;
  for (auto& r : dead) saw |= r.center == 1;
  CHECK(saw);
  CHECK(aa.max_pal() == 4);
}

TEST_CASE("iterator rad and len") {
  auto it = feed("abcba");
  CHECK(it.rad(4) == 2);
  CHECK(it.len(4) == 5);
  CHECK(it.rad(1) == 0);
  CHECK(it.len(1) == 0);
  CHECK(feed("aaa").len(2) == 3);
}

TEST_CASE("iterator max_pal and next_pal") {
  CHECK(feed("abcba").max_pal() == 4);
  CHECK(feed("ab").max_pal() == 2);
  CHECK(feed("abaaba").max_pal() == 5);
  CHECK(feed("abaaba").next_pal(5) == 8);
  CHECK(feed("aaa").next_pal(2) == 3);
  auto it = feed("abc");
  CHECK(it.next_pal(4) == it.end());
  PalIterator empty;
  CHECK_THROWS_WITH(empty.max_pal(), "no palindrome");
}

TEST_CASE("iterator matches naive scan on random strings") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 400; ++rep) {
    const unsigned sigma = 1 + rep % 3;
    const Text s = testutil::random_text(rng, 1 + rep % 60, sigma);
    PalIterator it;
    Text pre;
    for (Letter c : s) {
      const std::vector<CenterIdx> before = pre.empty() ? std::vector<CenterIdx>{} : it.suffix_centers();
      std::vector<std::int64_t> before_len;
      for (CenterIdx c0 : before) before_len.push_back(it.len(c0));
      const auto dead = it.add(c);
      pre.push_back(c);
      REQUIRE(it.suffix_centers() == naive_centers(pre));
      for (CenterIdx c0 = 0; c0 <= 2 * static_cast<CenterIdx>(pre.size()) - 2; ++c0)
        REQUIRE(it.len(c0) == naive_len(pre, c0));
      // every center that left the list is reported with its old answers
      std::vector<CenterIdx> expect_dead;
      for (std::size_t k = 0; k < before.size(); ++k)
        if (!it.is_suffix_center(before[k])) expect_dead.push_back(before[k]);
      REQUIRE(dead.size() == expect_dead.size());
      for (std::size_t k = 0; k < dead.size(); ++k) {
        REQUIRE(dead[k].center == expect_dead[k]);
        auto pos = std::find(before.begin(), before.end(), dead[k].center) - before.begin();
        CHECK(dead[k].len == before_len[pos]);
        CHECK(dead[k].rad == before_len[pos] / 2);
        const std::int64_t nl = pos + 1 < static_cast<long>(before.size()) ? before_len[pos + 1] : 0;
        CHECK(dead[k].next_center_len == nl);
        CHECK(dead[k].next_center_len < dead[k].len);
      }
    }
  }
}

TEST_CASE("iterator work is linear") {
  std::mt19937_64 rng(11);
  for (unsigned sigma : {1u, 2u, 3u}) {
    const Text s = testutil::random_text(rng, 200000, sigma);
    PalIterator it;
    std::uint64_t deaths = 0;
    for (Letter c : s) deaths += it.add(c).size();
    CHECK(it.work() <= 5 * s.size());
    CHECK(deaths <= it.inserted());
    CHECK(it.inserted() <= 2 * s.size());
  }
}
