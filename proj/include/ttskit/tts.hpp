#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ttskit/bits.hpp"
#include "ttskit/report.hpp"

namespace ttskit {

inline constexpr int kMaxTtsCarrier = 12;

// A topological type structure on a carrier of `carrier` points with `tokens`
// abstract process tokens. `table[A]` is the token set assigned to subset mask A;
// `xi` is the Cauchy relation on tokens.
struct Tts {
    int carrier = 1;
    int tokens = 1;
    std::vector<TokenSet> table;
    BitMatrix xi;
    std::vector<std::string> names;

    static Tts blank(int carrier, int tokens);

    const TokenSet& at(Mask a) const { return table[a]; }
    Mask full() const { return full_mask(carrier); }
    std::string token_name(int t) const;
    bool operator==(const Tts& o) const {
        return carrier == o.carrier && tokens == o.tokens && table == o.table && xi == o.xi;
    }
};

// A structure together with a pre-order on its tokens. leq.test(a, b) means a <= b.
struct Ttsr {
    Tts tts;
    BitMatrix leq;
};

// Throws InputError on shape errors (wrong table length, token index out of range).
void validate_shape(const Tts& s);
void validate_shape(const Ttsr& s);

Report check_axioms(const Tts& s);
Report check_axioms(const Ttsr& s);
Report check_leq_preorder(const BitMatrix& leq);

TokenSet cauchy_set(const Tts& s);
TokenSet conver_set(const Tts& s, int x);
// For each token, the mask of points it converges to.
std::vector<Mask> convergence_points(const Tts& s);
bool is_complete(const Tts& s);
Report check_chain(const Tts& s);
Report refine_monotonicity(const Ttsr& s);

struct CauchyExtension {
    Tts sigma;
    Report report;
};
// Throws InputError when xi does not contain the base relation or the result
// fails the axioms.
CauchyExtension extend_cauchy(const Tts& base, const BitMatrix& xi);
// Unordered token pairs (a < b) whose symmetric addition keeps the axioms.
std::vector<std::pair<int, int>> addable_pairs(const Tts& s);

// The support whose tokens are the filters of an n-point carrier: token t is the
// filter with core t + 1, and a subset A carries every filter whose core lies in A.
Tts filter_support(int n);
inline int filter_token(Mask core) { return static_cast<int>(core) - 1; }
inline Mask token_core(int t) { return static_cast<Mask>(t) + 1; }
// a <= b iff filter b refines filter a.
BitMatrix refinement_order(int n);

}  // namespace ttskit
