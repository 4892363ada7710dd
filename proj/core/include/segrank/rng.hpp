#pragma once

#include <cstdint>
#include <vector>

namespace segrank {

// Deterministic, platform-independent random number generation.
//
// Everything stochastic in this project (embedding initialisation, negative
// sampling, random-k sentence draws, synthetic corpora in the test suite)
// goes through Xoshiro256** seeded via SplitMix64. std::mt19937 would also
// be portable, but the standard <random> distributions are not, so we keep
// both the engine and the integer/real draws pinned here.

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : s_) s = sm.next();
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, n). Multiply-high reduction; the bias for n far below
    // 2^64 is immaterial and the result is identical on every platform.
    uint64_t bounded(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // k distinct values sampled without replacement from [lo, hi),
    // returned in ascending order. Partial Fisher-Yates.
    std::vector<int> sample_without_replacement(int lo, int hi, int k);

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

}  // namespace segrank
