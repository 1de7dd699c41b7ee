#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treebij/types.hpp"

namespace treebij {

// Counts exceed 64 bits from n = 18 on (35!! > 2^64), so everything rank- or
// count-valued is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// (m)!! = 1*3*...*m for odd m, with (-1)!! = 1. Throws on even or < -1 input.
BigInt double_factorial(long long m);

// (2n)! / (2^n n!), computed via factorials and cross-checked against
// double_factorial(2n-1).
BigInt count_objects(int n);

// Lexicographic rank of a word among all words of its length, first digit
// most significant: rank = sum_i (x_i - 1) * prod_{j>i} (2j-1).
BigInt rank(const TrapezoidalWord& w);

// Inverse of rank for length n (mixed-radix digits 1,3,5,...,2n-1).
TrapezoidalWord unrank(const BigInt& r, int n);

// Streams all (2n-1)!! words of length n in lexicographic order.
class WordEnumerator {
public:
  explicit WordEnumerator(int n);

  std::optional<TrapezoidalWord> next();

private:
  std::vector<int> digits_;
  bool started_ = false;
  bool done_ = false;
};

// Materializes the full stream; intended for small n only.
std::vector<TrapezoidalWord> all_words(int n);

// Deterministic uniform sampling: digit x_i is drawn uniformly from
// {1,...,2i-1} via SplitMix64 seeded with `seed` and unbiased rejection.
// Identical (n, seed) pairs yield identical words on every platform.
TrapezoidalWord sample_word(int n, std::uint64_t seed);

}  // namespace treebij
