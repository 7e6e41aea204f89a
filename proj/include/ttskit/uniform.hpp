#pragma once

#include <cstdint>
#include <vector>

#include "ttskit/bits.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/report.hpp"
#include "ttskit/tts.hpp"

namespace ttskit {

inline constexpr int kMaxUniformCarrier = 4;

// Relations are pair masks, pair (x, y) at bit x * carrier + y.
// Each generator R stands for the relation filter of all supersets of R.
struct UniformConvergenceStructure {
    int carrier = 1;
    // Sorted ascending, nonempty, no duplicates.
    std::vector<std::uint64_t> generators;

    bool contains(std::uint64_t r) const;
};

// Sorts and deduplicates; throws InputError on empty or out-of-range relations.
UniformConvergenceStructure make_ucs(int carrier, std::vector<std::uint64_t> generators);

// diagonal_points, meet_closed, refinement_closed, inverse_closed, composition_closed
Report check_ucs_axioms(const UniformConvergenceStructure& u);

// Filter support with F ~ G iff core F x core G is a generator.
Tts embed_ucs(const UniformConvergenceStructure& u);

// Finite uniformity given by its smallest entourage, an equivalence relation.
struct FiniteUniformity {
    int carrier = 1;
    std::uint64_t entourage = 0;

    // Equivalence class of x.
    Mask class_of(int x) const;
    // Distinct classes ordered by least element.
    std::vector<Mask> classes() const;
};

// reflexive, symmetric, transitive
Report check_uniformity(const FiniteUniformity& u);
FiniteUniformity make_uniformity(int carrier, std::uint64_t entourage);
FiniteUniformity uniformity_from_classes(int carrier, const std::vector<Mask>& classes);

// All nonempty subrelations of the entourage.
UniformConvergenceStructure ucs_from_uniformity(const FiniteUniformity& u);
// Opens are the unions of classes.
Topology uniform_topology(const FiniteUniformity& u);

struct SigmaUpsilon {
    Ttsr structure;
    // tts axioms (prefixed "tts."), ttsr axioms (prefixed "ttsr."), cauchy_criterion,
    // complete, transitive, separated_reading_agrees
    Report report;
};

// Filters related iff they share a limit in the uniform topology, so iff both
// cores lie in one class. The order is refinement.
SigmaUpsilon build_sigma_upsilon(const FiniteUniformity& u);

}  // namespace ttskit
