// Deterministic RNG for property tests and trial suites. splitmix64 keeps
// streams reproducible across platforms and standard-library versions, which
// std::uniform_int_distribution does not guarantee. Per-trial generators are
// derived from (seed, counter) so results are independent of scheduling.

#pragma once

#include <cstdint>

namespace hardyforge {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    // Uniform integer in [lo, hi], inclusive.
    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double next_signed() { return 2.0 * next_double() - 1.0; }

    bool next_bool() { return next_u64() & 1; }

    // Stream for trial `index` of a suite seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed);
        std::uint64_t a = mixer.next_u64();
        return Rng(a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    }

  private:
    std::uint64_t state_;
};

}  // namespace hardyforge
