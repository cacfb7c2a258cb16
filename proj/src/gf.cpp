#include "icsim/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace icsim {
namespace gf2poly {

int degree(uint64_t p) {
    if (p == 0) return -1;
    return floor_log2(p);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t f, int m) {
    uint64_t top = uint64_t(1) << m;
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= f;
    }
    return r;
}

uint64_t gcd(uint64_t a, uint64_t b) {
    while (b != 0) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        while (a != 0 && (da = degree(a)) >= db) a ^= b << (da - db);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(uint64_t f, int m) {
    if (m == 1) return true;
    if ((f & 1) == 0) return false;  // divisible by x
    // t = x^(2^i) mod f; f is irreducible iff x^(2^m) = x and for every prime
    // divisor q of m, gcd(x^(2^(m/q)) - x, f) = 1.
    std::vector<int> prime_divs;
    int mm = m;
    for (int q = 2; q * q <= mm; ++q)
        if (mm % q == 0) {
            prime_divs.push_back(q);
            while (mm % q == 0) mm /= q;
        }
    if (mm > 1) prime_divs.push_back(mm);

    uint64_t t = 2;  // the polynomial x
    for (int i = 1; i <= m; ++i) {
        t = mulmod(t, t, f, m);
        for (int q : prime_divs)
            if (i == m / q && gcd(t ^ 2, f) != 1) return false;
    }
    return t == 2;
}

uint64_t smallest_irreducible(int m) {
    if (m < 1 || m > 60) throw std::invalid_argument("gf2poly: degree out of range");
    static std::map<int, uint64_t> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    uint64_t base = uint64_t(1) << m;
    for (uint64_t low = 1;; low += 2) {
        if (is_irreducible(base | low, m)) {
            std::lock_guard<std::mutex> lk(mu);
            cache[m] = base | low;
            return base | low;
        }
    }
}

}  // namespace gf2poly

Gf2m::Gf2m(int m) : m_(m) {
    poly_ = gf2poly::smallest_irreducible(m);
    top_ = uint64_t(1) << m;
}

SmallGf::SmallGf(int m) : m_(m), n_((1 << m) - 1) {
    if (m < 2 || m > 16) throw std::invalid_argument("SmallGf: m out of range");
    poly_ = gf2poly::smallest_irreducible(m);
    Gf2m f(m);

    // Smallest primitive element: order of g equals 2^m - 1.
    std::vector<int> prime_divs;
    int nn = n_;
    for (int q = 2; q * q <= nn; ++q)
        if (nn % q == 0) {
            prime_divs.push_back(q);
            while (nn % q == 0) nn /= q;
        }
    if (nn > 1) prime_divs.push_back(nn);

    alpha_ = 0;
    for (uint16_t g = 2; g <= n_; ++g) {
        bool primitive = true;
        for (int q : prime_divs)
            if (f.pow(g, uint64_t(n_) / q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            alpha_ = g;
            break;
        }
    }

    exp_.resize(size_t(2) * n_);
    log_.assign(size_t(n_) + 1, 0);
    uint64_t v = 1;
    for (int i = 0; i < n_; ++i) {
        exp_[i] = uint16_t(v);
        exp_[i + n_] = uint16_t(v);
        log_[v] = i;
        v = f.mul(v, alpha_);
    }
}

}  // namespace icsim
