#include "palfact/pal_iterator.hpp"

#include <cassert>
#include <stdexcept>

namespace palfact {

void PalIterator::grow() {
  const std::size_t m = text_.size();
  const std::size_t centers = 2 * m + 1;
  final_.resize(centers, 0);
  next_.resize(centers, kNil);
  prev_.resize(centers, kNil);
  bucket_next_.resize(centers, kNil);
  bucket_head_.resize(m + 1, kNil);
}

void PalIterator::unlink(CenterIdx c) {
  const auto i = static_cast<std::size_t>(c);
  const std::int32_t p = prev_[i];
  const std::int32_t n = next_[i];
  if (p == kNil) head_ = n; else next_[static_cast<std::size_t>(p)] = n;
  if (n == kNil) tail_ = p; else prev_[static_cast<std::size_t>(n)] = p;
  next_[i] = prev_[i] = kNil;
}

void PalIterator::push_back(CenterIdx c) {
  const auto i = static_cast<std::size_t>(c);
  final_[i] = -1;
  prev_[i] = tail_;
  next_[i] = kNil;
  if (tail_ == kNil) head_ = static_cast<std::int32_t>(c);
  else next_[static_cast<std::size_t>(tail_)] = static_cast<std::int32_t>(c);
  tail_ = static_cast<std::int32_t>(c);
  ++inserted_;
}

const std::vector<DeadRecord>& PalIterator::add(Letter a) {
  const std::int64_t m = size();
  dead_.clear();
  mirror_dead_.clear();
  grow();

  auto record = [&](CenterIdx c, std::vector<DeadRecord>& out) {
    const std::int64_t l = 2 * m - 1 - c;
    const std::int32_t nx = next_[static_cast<std::size_t>(c)];
    const std::int64_t nl = nx == kNil ? 0 : 2 * m - 1 - nx;
    out.push_back({c, l, l / 2, nl});
  };

  // Heads that cannot be extended die; the first one that can is the new maxPal.
  std::int32_t c = head_;
  while (c != kNil) {
    ++work_;
    const std::int64_t st = c - (m - 1);
    if (st >= 1 && text_[static_cast<std::size_t>(st - 1)] == a) break;
    record(c, dead_);
    c = next_[static_cast<std::size_t>(c)];
  }

  // Every other death mirrors, inside the extended palindrome, a finished
  // palindrome that starts exactly where the old one started.
  if (c != kNil) {
    const CenterIdx x = c;
    const std::int64_t i0 = x - (m - 1);
    for (std::int32_t z = bucket_head_[static_cast<std::size_t>(i0)]; z != kNil;
         z = bucket_next_[static_cast<std::size_t>(z)]) {
      ++work_;
      const CenterIdx y = 2 * x - z;
      assert(final_[static_cast<std::size_t>(y)] == -1);
      record(y, mirror_dead_);
    }
  }
  dead_.insert(dead_.end(), mirror_dead_.begin(), mirror_dead_.end());

  for (const DeadRecord& r : dead_) {
    unlink(r.center);
    const auto ci = static_cast<std::size_t>(r.center);
    final_[ci] = static_cast<std::int32_t>(r.len);
    const auto st = static_cast<std::size_t>(r.center - (m - 1));
    bucket_next_[ci] = bucket_head_[st];
    bucket_head_[st] = static_cast<std::int32_t>(r.center);
  }

  text_.push_back(a);
  if (m >= 1) {
    if (text_[static_cast<std::size_t>(m - 1)] == a) push_back(2 * m - 1);
    else final_[static_cast<std::size_t>(2 * m - 1)] = 0;
  }
  push_back(2 * m);
  return dead_;
}

std::int64_t PalIterator::len(CenterIdx c) const {
  assert(c >= 0 && c <= end());
  if (c >= end()) return 0;
  const std::int32_t f = final_[static_cast<std::size_t>(c)];
  return f < 0 ? end() - c : f;
}

CenterIdx PalIterator::max_pal() const {
  if (text_.empty()) throw std::logic_error("no palindrome");
  return head_;
}

CenterIdx PalIterator::next_pal(CenterIdx c) const {
  assert(is_suffix_center(c));
  const std::int32_t n = next_[static_cast<std::size_t>(c)];
  return n == kNil ? end() : n;
}

bool PalIterator::is_suffix_center(CenterIdx c) const {
  return c >= 0 && c < end() && final_[static_cast<std::size_t>(c)] < 0;
}

std::vector<CenterIdx> PalIterator::suffix_centers() const {
  std::vector<CenterIdx> out;
  for (std::int32_t c = head_; c != kNil; c = next_[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

}  // namespace palfact
