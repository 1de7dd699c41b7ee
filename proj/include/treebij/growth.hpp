#pragma once

#include <utility>

#include "treebij/types.hpp"

namespace treebij {

// Step bijection between 2-partitions and trapezoidal words. One growth step
// extends a partition of {1,...,2n-2} by the elements 2n-1, 2n, directed by a
// digit x with 1 <= x <= 2n-1:
//   x = 2n-1     the two new elements form a block {2n-1, 2n} of their own;
//   x = b < 2n-1 the block {a,b} containing b is rotated into {a,2n-1},{b,2n}.
TwoPartition grow_partition(const TwoPartition& p, int x);

// Exact inverse of grow_partition: strips the elements 2n-1, 2n and recovers
// the digit that placed them.
std::pair<TwoPartition, int> shrink_partition(const TwoPartition& p);

// Left fold of grow_partition over the digits, starting from the empty
// partition; the result has one block per digit.
TwoPartition word_to_partition(const TrapezoidalWord& w);

// Inverse fold: shrinks down to the empty partition, collecting digits.
TrapezoidalWord partition_to_word(const TwoPartition& p);

}  // namespace treebij
