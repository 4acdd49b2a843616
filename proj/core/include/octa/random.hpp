#pragma once

// Deterministic fixtures. A single std::mt19937_64 stream; integers are
// drawn as lo + raw % (hi - lo + 1), which (unlike the std distributions)
// yields identical sequences on every platform.

#include <cstdint>
#include <random>

#include "octa/algebra.hpp"

namespace octa {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t raw() { return g_(); }

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(g_() % span);
  }

  // p/q with 1 <= p, q <= max.
  Rational positive_rational(long max) {
    long p = uniform(1, max);
    long q = uniform(1, max);
    return make_rational(p, q);
  }

  // p/q with lo <= p <= hi, 1 <= q <= den_max.
  Rational rational(long lo, long hi, long den_max) {
    long p = uniform(lo, hi);
    long q = uniform(1, den_max);
    return make_rational(p, q);
  }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace octa
