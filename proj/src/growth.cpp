#include "treebij/growth.hpp"

#include <algorithm>
#include <string>

namespace treebij {

TwoPartition grow_partition(const TwoPartition& p, int x) {
  const int n = p.block_count() + 1;
  const int hi = 2 * n - 1;
  if (x < 1 || x > hi) {
    throw ValidationError("growth digit " + std::to_string(x) +
                          " out of range [1, " + std::to_string(hi) + "]");
  }

  std::vector<TwoPartition::Block> blocks = p.blocks();
  if (x == hi) {
    blocks.emplace_back(2 * n - 1, 2 * n);
  } else {
    // Rotation: {a,b} with b = x becomes {a,2n-1} and {b,2n}.
    auto it = std::find_if(blocks.begin(), blocks.end(), [x](const auto& b) {
      return b.first == x || b.second == x;
    });
    const int partner = it->first == x ? it->second : it->first;
    blocks.erase(it);
    blocks.emplace_back(partner, 2 * n - 1);
    blocks.emplace_back(x, 2 * n);
  }
  return TwoPartition::from_blocks(std::move(blocks));
}

std::pair<TwoPartition, int> shrink_partition(const TwoPartition& p) {
  if (p.empty()) {
    throw ValidationError("cannot shrink the empty partition");
  }
  const int n = p.block_count();
  const int last = 2 * n;

  std::vector<TwoPartition::Block> blocks = p.blocks();
  auto with_last = std::find_if(blocks.begin(), blocks.end(), [last](const auto& b) {
    return b.second == last;  // last is the maximum, so it sits second
  });
  const int b = with_last->first;
  blocks.erase(with_last);

  if (b == last - 1) {
    return {TwoPartition::from_blocks(std::move(blocks)), b};
  }

  auto with_prev = std::find_if(blocks.begin(), blocks.end(), [last](const auto& blk) {
    return blk.second == last - 1;
  });
  const int a = with_prev->first;
  blocks.erase(with_prev);
  blocks.emplace_back(a, b);
  return {TwoPartition::from_blocks(std::move(blocks)), b};
}

TwoPartition word_to_partition(const TrapezoidalWord& w) {
  TwoPartition p;
  for (int x : w.digits()) {
    p = grow_partition(p, x);
  }
  return p;
}

TrapezoidalWord partition_to_word(const TwoPartition& p) {
  std::vector<int> digits(static_cast<std::size_t>(p.block_count()));
  TwoPartition current = p;
  for (int i = p.block_count(); i > 0; --i) {
    auto [rest, x] = shrink_partition(current);
    digits[static_cast<std::size_t>(i) - 1] = x;
    current = std::move(rest);
  }
  return TrapezoidalWord::from_digits(std::move(digits));
}

}  // namespace treebij
