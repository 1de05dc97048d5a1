// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "csalg/rational.hpp"

namespace csalg {

/// Seeded source of small random rationals. Only the raw mt19937_64 stream
/// is used (never std:: distributions), so sequences are identical across
/// standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  /// Integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  /// p/q with p in [-9, 9], q in [1, 4].
  Rational rational() {
    const auto p = integer(-9, 9);
    const auto q = integer(1, 4);
    Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
    r.canonicalize();
    return r;
  }

  Vec vector(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  /// Vector with integer entries in [-bound, bound], never all zero.
  Vec nonzero_integer_vector(std::size_t n, std::int64_t bound) {
    for (;;) {
      Vec v(n);
      for (auto& x : v) x = static_cast<long>(integer(-bound, bound));
      if (n == 0 || !is_zero(v)) return v;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace csalg
