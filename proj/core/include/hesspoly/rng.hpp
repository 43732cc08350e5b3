#pragma once

#include <cstdint>
#include <random>

#include "hesspoly/rational.hpp"

namespace hesspoly {

/// Deterministic 64-bit generator.  mt19937_64 output is fully specified by
/// the standard, so seeded runs are reproducible across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t next() { return g_(); }

    /// Uniform-ish in [lo, hi]; modulo bias is irrelevant here.
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(g_() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Random rational with |numerator| <= max_num and denominator in [1, max_den].
    Rational next_rational(long max_num = 10000, long max_den = 10000) {
        return rat(next_in(-max_num, max_num), next_in(1, max_den));
    }

  private:
    std::mt19937_64 g_;
};

}  // namespace hesspoly
