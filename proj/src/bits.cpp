#include "ttskit/bits.hpp"

#include <sstream>

namespace ttskit {

std::vector<int> members(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) m |= bit(x);
    return m;
}

std::string render_mask(Mask m) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int x : members(m)) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ']';
    return os.str();
}

std::string render_tokens(const TokenSet& s) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto i = s.find_first(); i != TokenSet::npos; i = s.find_next(i)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << ']';
    return os.str();
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::full(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.row(i).set();
    return m;
}

}  // namespace ttskit
