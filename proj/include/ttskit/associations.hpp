#pragma once

#include <vector>

#include "ttskit/derived_topology.hpp"
#include "ttskit/report.hpp"
#include "ttskit/tts.hpp"

namespace ttskit {

inline constexpr int kDefaultPowerTokenCap = 12;

// Structure on token sets of a base structure. Token k of the result is the set
// of base tokens whose bits are set in k (k = 0 is the empty token set).
// Order is reverse inclusion; two token sets are related when their union is a
// clique of the base relation.
struct PowerAssociation {
    Ttsr result;
    CompatibilityReport compatibility;
    // Structure axioms of the result plus findings about the empty token set.
    Report report;
};

PowerAssociation power_association(const Tts& base, int token_cap = kDefaultPowerTokenCap);

struct SupportOrder {
    // For each token, the nonempty subsets whose T contains it, ascending.
    std::vector<std::vector<Mask>> families;
    BitMatrix leq;
    // excludes_empty_nonvoid, superset_closed, intersection_condition, families_are_filters,
    // filters_iff_intersection_condition
    Report report;
    bool families_are_filters = false;
};

// Only the support (carrier, tokens, table) of the argument is read.
SupportOrder support_order(const Tts& support);

struct SecondAssociation {
    SupportOrder order;
    CompatibilityReport compatibility;
    bool compatible = false;
    // Convergent and Cauchy tokens up-closed under the support order.
    bool conditions = false;
    // T_up_closed, compatible_implies_conditions, conditions_imply_compatible
    Report report;
};

// Compatibility with the support order against the convergent/Cauchy conditions
// alone, each direction evaluated separately.
SecondAssociation check_second_association(const Tts& s);

}  // namespace ttskit
