#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ttskit {

// Subset of a carrier with at most 64 elements, bit i = element i.
using Mask = std::uint64_t;

using TokenSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }

std::vector<int> members(Mask m);
Mask mask_of(const std::vector<int>& xs);

// "[0,2,3]"
std::string render_mask(Mask m);
std::string render_tokens(const TokenSet& s);

// Square boolean matrix over tokens.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : rows_(n, TokenSet(n)) {}

    std::size_t size() const { return rows_.size(); }
    bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
    const TokenSet& row(std::size_t i) const { return rows_[i]; }
    TokenSet& row(std::size_t i) { return rows_[i]; }

    static BitMatrix identity(std::size_t n);
    static BitMatrix full(std::size_t n);

    bool operator==(const BitMatrix&) const = default;

private:
    std::vector<TokenSet> rows_;
};

}  // namespace ttskit
