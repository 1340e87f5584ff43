#pragma once

#include <cstdint>
#include <string>

#include "metaforge/core/numeric.hpp"

namespace metaforge {

// SplitMix64. Deterministic across platforms and standard libraries,
// which the report-determinism contract depends on; std::uniform_int_
// distribution is implementation-defined and unsuitable here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased
        std::uint64_t limit = ~0ull - (~0ull % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (next() & 1u) != 0; }

    // Small rationals keep the exact arithmetic in relation suites cheap.
    Rational small_rational(bool nonzero = false) {
        for (;;) {
            long long num = range(-9, 9);
            long long den = range(1, 3);
            if (nonzero && num == 0) continue;
            return Rational(num, den);
        }
    }

    Integer small_int(bool nonzero = false) {
        for (;;) {
            long long n = range(-9, 9);
            if (nonzero && n == 0) continue;
            return Integer(n);
        }
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Per-suite seed independent of execution order.
inline std::uint64_t suite_seed(std::uint64_t base, const std::string& suite_id) {
    Rng r(base ^ fnv1a(suite_id));
    return r.next();
}

}  // namespace metaforge
