#pragma once

#include <cstdint>
#include <vector>

#include "palfact/types.hpp"

namespace palfact {

struct DeadRecord {
  CenterIdx center;
  std::int64_t len;
  std::int64_t rad;
  std::int64_t next_center_len;

  friend bool operator==(const DeadRecord&, const DeadRecord&) = default;
};

// Online Manacher-style iterator. Keeps the list of suffix-palindrome centers
// in increasing order and reports the centers that drop out on each add.
class PalIterator {
 public:
  PalIterator() = default;

  // Appends a letter. The returned records are in increasing center order and
  // stay valid until the next call.
  const std::vector<DeadRecord>& add(Letter a);

  std::int64_t size() const { return static_cast<std::int64_t>(text_.size()); }
  const Text& text() const { return text_; }
  Letter at(std::int64_t i) const { return text_[static_cast<std::size_t>(i)]; }

  std::int64_t len(CenterIdx c) const;
  std::int64_t rad(CenterIdx c) const { return len(c) / 2; }

  CenterIdx max_pal() const;
  CenterIdx next_pal(CenterIdx c) const;
  // The empty suffix: center m - 1/2.
  CenterIdx end() const { return 2 * size() - 1; }
  bool is_suffix_center(CenterIdx c) const;

  // Start of the palindrome of maximal radius at c.
  std::int64_t start(CenterIdx c) const { return (c - len(c) + 1) / 2; }

  std::vector<CenterIdx> suffix_centers() const;

  // Loop iterations spent inside add, for work-bound checks.
  std::uint64_t work() const { return work_; }
  std::uint64_t inserted() const { return inserted_; }

 private:
  static constexpr std::int32_t kNil = -1;

  void grow();
  void unlink(CenterIdx c);
  void push_back(CenterIdx c);

  Text text_;
  // final_[c] = -1 while c is a suffix center, otherwise its frozen length.
  std::vector<std::int32_t> final_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> prev_;
  // Finalized centers grouped by the start of their palindrome, newest first.
  std::vector<std::int32_t> bucket_head_;
  std::vector<std::int32_t> bucket_next_;
  std::int32_t head_ = kNil;
  std::int32_t tail_ = kNil;
  std::vector<DeadRecord> dead_;
  std::vector<DeadRecord> mirror_dead_;
  std::uint64_t work_ = 0;
  std::uint64_t inserted_ = 0;
};

}  // namespace palfact
