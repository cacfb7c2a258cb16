#pragma once

#include <cstdint>

#include "icsim/bits.hpp"
#include "icsim/gf.hpp"
#include "icsim/rng.hpp"

namespace icsim {

// Seeded polynomial-evaluation fingerprint over GF(2^k).
//
// The transcript is split into k-bit chunks c_1..c_n (last chunk zero padded)
// and the digest is the evaluation of
//     c_1 s + c_2 s^2 + ... + c_n s^n + len s^(n+1)
// at the uniformly drawn seed s. The trailing length coefficient separates
// strings whose chunk padding would otherwise coincide, so for any fixed
// t != t' the digests collide for at most max_chunks + 1 seeds. The empty
// transcript hashes to 0 under every seed (zero constant term, zero length).
struct HashScheme {
    int k = 0;            // field size; seed and digest are k-bit words
    size_t max_bits = 0;  // upper bound on hashable transcript length
    int pexp = 0;         // collision target 2^-pexp

    bool valid_for(size_t nbits) const { return nbits <= max_bits; }
};

// Smallest k <= 60 with (ceil(max_bits/k) + 1) <= 2^(k - pexp), i.e. the
// root-counting collision bound stays below 2^-pexp. Returns 0 if none fits.
int pick_hash_k(size_t max_bits, int pexp);

struct Fingerprint {
    uint64_t seed = 0;
    uint64_t digest = 0;
};

uint64_t hash_digest(const HashScheme& h, uint64_t seed, const Bits& t);

Fingerprint make_fingerprint(const HashScheme& h, const Bits& t, Rng& rng);

inline bool matches_fp(const HashScheme& h, const Fingerprint& fp, const Bits& t) {
    return hash_digest(h, fp.seed, t) == fp.digest;
}

}  // namespace icsim
