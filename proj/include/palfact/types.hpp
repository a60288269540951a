#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace palfact {

using Letter = std::uint32_t;
using Text = std::vector<Letter>;

// Doubled center coordinate: s[i..j] has center i + j.
using CenterIdx = std::int64_t;

// Length with a saturating infinity.
class ExtLen {
 public:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  constexpr ExtLen() : v_(kInf) {}
  constexpr explicit ExtLen(std::uint32_t v) : v_(v) {}
  static constexpr ExtLen inf() { return ExtLen(); }

  constexpr bool is_inf() const { return v_ == kInf; }
  constexpr std::uint32_t value() const { return v_; }

  constexpr ExtLen operator+(std::uint32_t k) const {
    return is_inf() ? *this : ExtLen(v_ + k);
  }
  constexpr ExtLen operator-(std::uint32_t k) const {
    return is_inf() ? *this : ExtLen(v_ - k);
  }

  friend constexpr bool operator==(ExtLen a, ExtLen b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(ExtLen a, ExtLen b) { return a.v_ <=> b.v_; }
  friend constexpr ExtLen min(ExtLen a, ExtLen b) { return a.v_ < b.v_ ? a : b; }

 private:
  std::uint32_t v_;
};

inline constexpr ExtLen kInf = ExtLen::inf();

inline std::ostream& operator<<(std::ostream& os, ExtLen x) {
  if (x.is_inf()) return os << "inf";
  return os << x.value();
}

// (pl0[i], pl1[i]); index 0 is the even track.
struct PlPair {
  ExtLen even;
  ExtLen odd;

  constexpr ExtLen operator[](int j) const { return j == 0 ? even : odd; }
  constexpr ExtLen& operator[](int j) { return j == 0 ? even : odd; }

  constexpr PlPair plus_one_swapped() const { return {odd + 1, even + 1}; }
  constexpr PlPair swapped() const { return {odd, even}; }

  friend constexpr bool operator==(const PlPair&, const PlPair&) = default;
};

inline constexpr PlPair min(const PlPair& a, const PlPair& b) {
  return {min(a.even, b.even), min(a.odd, b.odd)};
}

inline ExtLen pl_min(const PlPair& p) { return min(p.even, p.odd); }

// PL[-1] = (0, inf).
inline constexpr PlPair kEmptyPl{ExtLen(0), ExtLen::inf()};

inline std::ostream& operator<<(std::ostream& os, const PlPair& p) {
  return os << '(' << p.even << ',' << p.odd << ')';
}

// Bytes as letters.
inline Text to_text(std::string_view s) {
  Text t;
  t.reserve(s.size());
  for (unsigned char c : s) t.push_back(c);
  return t;
}

}  // namespace palfact
