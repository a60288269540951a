#include <doctest.h>

#include <random>

#include "palfact/nlogn.hpp"
#include "palfact/oracle.hpp"
#include "util.hpp"

using namespace palfact;

namespace {

// Class minima of PRE[p] evaluated directly.
std::vector<PreElement> pre_direct(const Text& s, std::int64_t p, std::int64_t left) {
  const auto pl = oracle::pl_pairs_naive(s);
  const auto n = static_cast<std::int64_t>(s.size()) - 1;
  std::vector<PreElement> out(static_cast<std::size_t>(p));
  for (std::int64_t t = left; t <= n; ++t) {
    bool ok = false;
    for (std::int64_t e = t + 1; e <= n && !ok; ++e)
      ok = oracle::is_pal(s, t + 1, e) && oracle::min_period(s, t + 1, e) == p;
    if (!ok) continue;
    auto& slot = out[static_cast<std::size_t>((t - left) % p)];
    const PlPair v = t < 0 ? kEmptyPl : pl[static_cast<std::size_t>(t)];
    slot.value = slot.defined ? min(slot.value, v) : v;
    slot.defined = true;
  }
  return out;
}

}  // namespace

TEST_CASE("nlogn known values") {
  NlognEngine a;
  PlPair r;
  for (unsigned char c : std::string("abcba")) r = a.push(c);
  CHECK(r == PlPair{kInf, ExtLen(1)});
  NlognEngine b;
  for (unsigned char c : std::string("acaaba")) r = b.push(c);
  CHECK(r == PlPair{ExtLen(2), ExtLen(5)});
}

TEST_CASE("nlogn matches oracle on random strings") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 500; ++rep) {
    const Text s = testutil::random_text(rng, 1 + rng() % 120, 1 + rep % 3);
    NlognEngine e;
    for (Letter c : s) e.push(c);
    REQUIRE(e.pl() == oracle::pl_pairs_naive(s));
  }
}

TEST_CASE("pre arrays follow the direct definition") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 400; ++rep) {
    const Text s = testutil::random_text(rng, 1 + rng() % 30, 2 + rep % 2);
    NlognEngine e;
    for (Letter c : s) e.push(c);
    for (const auto& sd : oracle::series_naive(s)) {
      const auto got = e.pre_snapshot(sd.period);
      const auto want = pre_direct(s, sd.period, e.pre_left(sd.period));
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].defined == want[i].defined);
        if (got[i].defined) REQUIRE(got[i].value == want[i].value);
      }
    }
  }
}

TEST_CASE("freshly seeded series has one defined slot") {
  NlognEngine e;
  for (unsigned char c : std::string("abcb")) e.push(c);
  const auto snap = e.pre_snapshot(2);
  int defined = 0;
  for (auto& x : snap) defined += x.defined;
  CHECK(defined == 1);
  CHECK_THROWS(e.pre_snapshot(97));
}
