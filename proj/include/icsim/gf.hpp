#pragma once

#include <cstdint>
#include <vector>

#include "icsim/bits.hpp"

namespace icsim {

// GF(2)[x] helpers on bit-packed polynomials (bit i = coefficient of x^i).
namespace gf2poly {

int degree(uint64_t p);  // -1 for the zero polynomial

// a*b mod f, where f is monic of degree m and a, b have degree < m.
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t f, int m);

uint64_t gcd(uint64_t a, uint64_t b);

// Ben-Or style test: f monic of degree m over GF(2).
bool is_irreducible(uint64_t f, int m);

// Lexicographically smallest monic irreducible of degree m (m <= 60).
uint64_t smallest_irreducible(int m);

}  // namespace gf2poly

// GF(2^m) for 2 <= m <= 60, reduced by the canonical (smallest) irreducible
// polynomial of degree m. Elements are uint64_t values < 2^m; addition is XOR.
class Gf2m {
public:
    explicit Gf2m(int m);

    int m() const { return m_; }
    uint64_t modulus() const { return poly_; }  // includes the x^m term

    uint64_t mul(uint64_t a, uint64_t b) const {
        uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top_) a ^= poly_;
        }
        return r;
    }

    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

private:
    int m_;
    uint64_t poly_;  // full modulus, bit m set
    uint64_t top_;   // 1 << m
};

// Small field with log/exp tables, for Reed-Solomon symbol arithmetic.
// m in [2, 16]; alpha (the table generator) is the smallest primitive element.
class SmallGf {
public:
    explicit SmallGf(int m);

    int m() const { return m_; }
    int order() const { return n_; }  // multiplicative order, 2^m - 1
    uint16_t alpha() const { return alpha_; }
    uint64_t modulus() const { return poly_; }

    uint16_t mul(uint16_t a, uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    uint16_t inv(uint16_t a) const { return exp_[n_ - log_[a]]; }

    uint16_t div(uint16_t a, uint16_t b) const {
        if (a == 0) return 0;
        int d = log_[a] - log_[b];
        return exp_[d < 0 ? d + n_ : d];
    }

    // alpha^e for any integer exponent (e may exceed the order).
    uint16_t alpha_pow(int64_t e) const {
        int64_t r = e % n_;
        if (r < 0) r += n_;
        return exp_[r];
    }

    int log(uint16_t a) const { return log_[a]; }  // pre: a != 0

private:
    int m_, n_;
    uint64_t poly_;
    uint16_t alpha_;
    std::vector<uint16_t> exp_;  // size 2n to skip reductions
    std::vector<int> log_;
};

}  // namespace icsim
