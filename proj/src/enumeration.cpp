#include "treebij/enumeration.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace treebij {

namespace {

BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Mixed-radix weight of position i (1-based) in words of length n:
// the number of words sharing the prefix x_1..x_i.
BigInt place_weight(int i, int n) {
  BigInt w = 1;
  for (int j = i + 1; j <= n; ++j) w *= 2 * j - 1;
  return w;
}

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by rejection; no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t u;
    do {
      u = next();
    } while (u >= limit);
    return u % bound;
  }
};

}  // namespace

BigInt double_factorial(long long m) {
  if (m < -1 || m % 2 == 0) {
    throw ValidationError("double factorial requires an odd argument >= -1, got " +
                          std::to_string(m));
  }
  BigInt product = 1;
  for (long long k = 1; k <= m; k += 2) product *= k;
  return product;
}

BigInt count_objects(int n) {
  if (n < 0) {
    throw ValidationError("object count requires n >= 0, got " +
                          std::to_string(n));
  }
  const BigInt via_factorials = factorial(2 * n) / (BigInt(1) << n) / factorial(n);
  if (via_factorials != double_factorial(2LL * n - 1)) {
    throw std::logic_error("counting identity (2n)!/(2^n n!) = (2n-1)!! failed");
  }
  return via_factorials;
}

BigInt rank(const TrapezoidalWord& w) {
  const int n = w.length();
  BigInt r = 0;
  BigInt weight = 1;
  for (int i = n; i >= 1; --i) {
    r += (w.digits()[static_cast<std::size_t>(i) - 1] - 1) * weight;
    weight *= 2 * i - 1;
  }
  return r;
}

TrapezoidalWord unrank(const BigInt& r, int n) {
  if (n < 0 || r < 0 || r >= double_factorial(2LL * n - 1)) {
    throw ValidationError("rank " + r.str() + " out of range [0, " +
                          double_factorial(2LL * n - 1).str() + ") for n = " +
                          std::to_string(n));
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  BigInt rest = r;
  for (int i = 1; i <= n; ++i) {
    const BigInt weight = place_weight(i, n);
    digits[static_cast<std::size_t>(i) - 1] =
        static_cast<int>(rest / weight) + 1;
    rest %= weight;
  }
  return TrapezoidalWord::from_digits(std::move(digits));
}

WordEnumerator::WordEnumerator(int n)
    : digits_(static_cast<std::size_t>(n < 0 ? 0 : n), 1) {
  if (n < 0) done_ = true;
}

std::optional<TrapezoidalWord> WordEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return TrapezoidalWord::from_digits(digits_);
  }
  // Odometer step: bump the last digit that is below its bound 2i-1,
  // resetting everything after it.
  for (int i = static_cast<int>(digits_.size()); i >= 1; --i) {
    if (digits_[static_cast<std::size_t>(i) - 1] < 2 * i - 1) {
      ++digits_[static_cast<std::size_t>(i) - 1];
      return TrapezoidalWord::from_digits(digits_);
    }
    digits_[static_cast<std::size_t>(i) - 1] = 1;
  }
  done_ = true;
  return std::nullopt;
}

std::vector<TrapezoidalWord> all_words(int n) {
  std::vector<TrapezoidalWord> words;
  WordEnumerator it(n);
  while (auto w = it.next()) {
    words.push_back(std::move(*w));
  }
  return words;
}

TrapezoidalWord sample_word(int n, std::uint64_t seed) {
  SplitMix64 rng{seed};
  std::vector<int> digits(static_cast<std::size_t>(n < 0 ? 0 : n));
  for (int i = 1; i <= n; ++i) {
    digits[static_cast<std::size_t>(i) - 1] =
        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(2 * i - 1)));
  }
  return TrapezoidalWord::from_digits(std::move(digits));
}

}  // namespace treebij
