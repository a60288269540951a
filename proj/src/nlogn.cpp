#include "palfact/nlogn.hpp"

#include <stdexcept>

namespace palfact {

PlPair NlognEngine::push(Letter a) {
  it_.add(a);
  const std::int64_t n = it_.size() - 1;
  if (pre_.size() < static_cast<std::size_t>(n + 2)) pre_.resize(static_cast<std::size_t>(n + 2));
  PlPair res{kInf, kInf};
  for_each_series(it_, [&](const SeriesDesc& sd) {
    ++visits_;
    const std::int64_t p = sd.period;
    Pre& pre = pre_[static_cast<std::size_t>(p)];
    if (pre.gen == 0) {
      pre.slots.resize(static_cast<std::size_t>(p));
      pre.gen = 1;
    } else if (sd.left > pre.left) {
      ++pre.gen;
    }
    pre.left = sd.left;
    const auto i = static_cast<std::size_t>(n - sd.head_len - sd.left);
    Slot& e = pre.slots[i];
    const PlPair v = at(n - sd.tail_len);
    if (sd.head_len == sd.tail_len || e.gen != pre.gen) e.v = v;
    else e.v = min(e.v, v);
    e.gen = pre.gen;
    res = min(res, e.v.plus_one_swapped());
  });
  pl_.push_back(res);
  return res;
}

std::vector<PreElement> NlognEngine::pre_snapshot(std::int64_t p) const {
  if (p <= 0 || static_cast<std::size_t>(p) >= pre_.size() || pre_[static_cast<std::size_t>(p)].gen == 0)
    throw std::out_of_range("unknown period");
  const Pre& pre = pre_[static_cast<std::size_t>(p)];
  std::vector<PreElement> out(pre.slots.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (pre.slots[i].gen == pre.gen) out[i] = {pre.slots[i].v, true};
  return out;
}

std::int64_t NlognEngine::pre_left(std::int64_t p) const {
  if (p <= 0 || static_cast<std::size_t>(p) >= pre_.size() || pre_[static_cast<std::size_t>(p)].gen == 0)
    throw std::out_of_range("unknown period");
  return pre_[static_cast<std::size_t>(p)].left;
}

}  // namespace palfact
