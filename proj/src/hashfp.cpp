#include "icsim/hashfp.hpp"

#include <stdexcept>

namespace icsim {

int pick_hash_k(size_t max_bits, int pexp) {
    for (int k = 2; k <= 60; ++k) {
        if (k <= pexp) continue;
        uint64_t chunks = (max_bits + k - 1) / k + 1;
        if (chunks <= (uint64_t(1) << (k - pexp))) return k;
    }
    return 0;
}

uint64_t hash_digest(const HashScheme& h, uint64_t seed, const Bits& t) {
    if (!h.valid_for(t.size())) throw std::length_error("hash: transcript exceeds max_bits");
    Gf2m f(h.k);
    // Horner over coefficients [c_1 .. c_n, len], highest power first. The
    // length is reduced mod 2^k; lengths sharing a chunk count differ by
    // less than k, so distinct transcripts still get distinct coefficients.
    uint64_t acc = uint64_t(t.size()) & ((uint64_t(1) << h.k) - 1);
    size_t n = (t.size() + h.k - 1) / h.k;
    for (size_t i = n; i-- > 0;) {
        acc = f.mul(acc, seed);
        acc ^= get_word(t, i * size_t(h.k), h.k);
    }
    return f.mul(acc, seed);
}

Fingerprint make_fingerprint(const HashScheme& h, const Bits& t, Rng& rng) {
    Fingerprint fp;
    fp.seed = rng.word(h.k);
    fp.digest = hash_digest(h, fp.seed, t);
    return fp;
}

}  // namespace icsim
