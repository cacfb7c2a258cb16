#pragma once

#include <cstdint>
#include <random>

#include "icsim/bits.hpp"

namespace icsim {

inline uint64_t mix64(uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic across platforms: mt19937_64 output is fixed by the standard.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t u64() { return gen_(); }

    Bit bit() { return Bit(gen_() & 1); }

    // Uniform k-bit word, k in [1, 64].
    uint64_t word(int k) {
        uint64_t v = gen_();
        return k >= 64 ? v : v & ((uint64_t(1) << k) - 1);
    }

    uint64_t nonzero_word(int k) {
        for (;;) {
            uint64_t v = word(k);
            if (v != 0) return v;
        }
    }

    // Uniform in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % n;
        for (;;) {
            uint64_t v = gen_();
            if (v < lim) return v % n;
        }
    }

    double unit() { return double(gen_() >> 11) * 0x1.0p-53; }

    Bits random_bits(size_t n) {
        Bits b(n);
        for (auto& x : b) x = bit();
        return b;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace icsim
