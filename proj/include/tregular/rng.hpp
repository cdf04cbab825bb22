#pragma once

// Deterministic counter-based random streams. Every draw is a pure function
// of (seed, counter), so splitting work across threads can never change the
// sampled sequence, and a report generated from a given seed is bit-stable.

#include "tregular/rational.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace tregular {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::uint64_t counter) const {
    return detail::mix64(detail::mix64(seed_) ^ detail::mix64(counter));
  }

  /// Uniform in the open interval (0,1); never exactly 0 or 1.
  double uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
  double gaussian(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Integer uniform on [lo, hi], inclusive.
  std::int64_t integer(std::uint64_t counter, std::int64_t lo, std::int64_t hi) const {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(bits(counter) % span);
  }

  /// Small exact rational with numerator in [-max_num, max_num] and
  /// denominator in [1, max_den]; consumes counters 2c and 2c+1.
  Rational rational(std::uint64_t counter, int max_num = 6, int max_den = 4) const {
    const std::int64_t num = integer(2 * counter, -max_num, max_num);
    const std::int64_t den = integer(2 * counter + 1, 1, max_den);
    return Rational(num, den);
  }

 private:
  std::uint64_t seed_;
};

/// A convenience cursor so call sites can pull consecutive seeded draws
/// without tracking counters by hand. Still fully deterministic.
class RngStream {
 public:
  explicit RngStream(const CounterRng& rng, std::uint64_t start = 0) : rng_(rng), next_(start) {}

  double uniform() { return rng_.uniform(next_++); }
  double gaussian() { return rng_.gaussian(next_++); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return rng_.integer(next_++, lo, hi); }
  Rational rational(int max_num = 6, int max_den = 4) { return rng_.rational(next_++, max_num, max_den); }

  std::vector<Rational> rational_vector(std::size_t n, int max_num = 6, int max_den = 4) {
    std::vector<Rational> v(n);
    for (auto& r : v) r = rational(max_num, max_den);
    return v;
  }

 private:
  CounterRng rng_;
  std::uint64_t next_;
};

}  // namespace tregular
