#pragma once
#include <cstdint>

namespace kirillov {

/// splitmix64: tiny, fast, and identical on every platform.  std::mt19937_64
/// would also be portable, but the distribution adaptors around it are not,
/// so we keep the whole pipeline by hand.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound); bound = 0 is a caller bug, returns 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        // modulo bias is irrelevant for the tiny bounds used here, but easy
        // enough to remove with rejection.
        std::uint64_t limit = ~0ULL - (~0ULL % bound);
        std::uint64_t v;
        do { v = next(); } while (v > limit);
        return v % bound;
    }

    /// uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

} // namespace kirillov
