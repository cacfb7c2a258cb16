#include "icsim/bits.hpp"

#include <stdexcept>

namespace icsim {

static char nibble_char(unsigned v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

static unsigned char_nibble(char c) {
    if (c >= '0' && c <= '9') return unsigned(c - '0');
    if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit");
}

std::string to_hex(const Bits& bits) {
    std::string s = std::to_string(bits.size());
    s += ':';
    for (size_t i = 0; i < bits.size(); i += 4) {
        unsigned v = 0;
        for (size_t j = 0; j < 4 && i + j < bits.size(); ++j)
            if (bits[i + j]) v |= 1u << j;
        s += nibble_char(v);
    }
    return s;
}

Bits from_hex(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected <len>:<hex>");
    size_t len = std::stoull(s.substr(0, colon));
    Bits bits(len, 0);
    size_t need = (len + 3) / 4;
    if (s.size() - colon - 1 != need) throw std::invalid_argument("hex length mismatch");
    for (size_t i = 0; i < need; ++i) {
        unsigned v = char_nibble(s[colon + 1 + i]);
        for (size_t j = 0; j < 4 && i * 4 + j < len; ++j)
            bits[i * 4 + j] = Bit((v >> j) & 1);
    }
    return bits;
}

}  // namespace icsim
