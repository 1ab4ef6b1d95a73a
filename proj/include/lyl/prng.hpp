#pragma once

// splitmix64: the one generator used everywhere seeds appear, so seeded
// runs are reproducible across platforms and standard library versions.

#include <cstdint>

namespace lyl {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        // rejection keeps this unbiased and deterministic
        std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

    // uniform in [0, 1) with 53 random bits
    double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace lyl
