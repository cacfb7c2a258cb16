#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace icsim {

// A bit string is a vector of 0/1 bytes in transmission order. Words are
// packed little-endian: bit 0 of the word is the first bit on the wire.
using Bit = uint8_t;
using Bits = std::vector<Bit>;

inline Bits xor_bits(const Bits& a, const Bits& b) {
    Bits r(a);
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    return r;
}

inline bool all_bits_equal(const Bits& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[0]) return false;
    return true;
}

// Number of adjacent positions i with w[i] != w[i+1]. Empty input counts 0.
inline size_t count_alternations(const Bits& w) {
    size_t n = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] != w[i + 1]) ++n;
    return n;
}

// Majority vote over exactly rho received bits; a tie decodes as 0.
inline Bit majority_decode(const Bits& w, size_t rho) {
    size_t ones = 0;
    for (size_t i = 0; i < rho; ++i) ones += w[i];
    return ones * 2 > rho ? 1 : 0;
}

inline uint64_t get_word(const Bits& bits, size_t pos, int width) {
    uint64_t v = 0;
    for (int i = 0; i < width; ++i)
        if (pos + i < bits.size() && bits[pos + i]) v |= uint64_t(1) << i;
    return v;
}

inline void put_word(Bits& bits, size_t pos, int width, uint64_t v) {
    for (int i = 0; i < width; ++i)
        bits[pos + i] = Bit((v >> i) & 1);
}

inline Bits word_to_bits(uint64_t v, int width) {
    Bits b(size_t(width), 0);
    put_word(b, 0, width, v);
    return b;
}

// "<bitlen>:<hex>"; hex nibbles hold 4 bits each, first wire bit in the
// low bit of the first nibble.
std::string to_hex(const Bits& bits);
Bits from_hex(const std::string& s);

inline int bits_for(uint64_t max_value) {  // width needed to store values in [0, max_value]
    int w = 1;
    while ((max_value >> w) != 0) ++w;
    return w;
}

inline int floor_log2(uint64_t x) {
    int e = 0;
    while (x >>= 1) ++e;
    return e;
}

inline int ceil_log2(uint64_t x) {  // smallest e with 2^e >= x, x >= 1
    int e = floor_log2(x);
    return (uint64_t(1) << e) == x ? e : e + 1;
}

inline int floor_log4(uint64_t x) { return floor_log2(x) / 2; }

inline bool is_power_of_two(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline bool is_power_of_four(uint64_t x) {
    return is_power_of_two(x) && (floor_log2(x) % 2 == 0);
}

inline uint64_t isqrt_u64(uint64_t x) {
    uint64_t r = 0;
    for (int s = 31; s >= 0; --s) {
        uint64_t c = r | (uint64_t(1) << s);
        if (c * c <= x) r = c;
    }
    return r;
}

}  // namespace icsim
