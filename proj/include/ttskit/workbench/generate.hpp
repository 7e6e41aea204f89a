#pragma once

#include <cstdint>
#include <random>

#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/tts.hpp"
#include "ttskit/uniform.hpp"

namespace ttskit::workbench {

// Seeded generator; streams derived from the same seed are independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    Rng split(std::uint64_t stream);
    // Uniform on [lo, hi].
    int uniform(int lo, int hi);
    std::uint64_t bits(int count);
    bool coin(double p = 0.5);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

Topology random_topology(int n, Rng& rng);
ConvergenceStructure random_convergence(int n, Rng& rng);
FiniteUniformity random_uniformity(int n, Rng& rng);
UniformConvergenceStructure random_ucs(int n, Rng& rng);

// Axiom-passing structure built from random up-closed token families and a
// symmetric relation containing all pairs based at a common point.
Tts random_tts(int carrier, int tokens, Rng& rng);
// Like random_tts with a random token pre-order; the order is kept only when the
// result passes the pre-order axioms, otherwise equality is used.
Ttsr random_ttsr(int carrier, int tokens, Rng& rng, int attempts = 64);

// Arbitrary shape-valid bodies, axioms not enforced.
Tts raw_tts(int carrier, int tokens, Rng& rng);
Ttsr raw_ttsr(int carrier, int tokens, Rng& rng);
FilterAssignment raw_assignment(int n, Rng& rng);
UniformConvergenceStructure raw_ucs(int n, Rng& rng);
Topology raw_topology(int n, Rng& rng);

// One random bit flipped.
Tts perturb(const Tts& s, Rng& rng);
FilterAssignment perturb(const FilterAssignment& a, Rng& rng);
UniformConvergenceStructure perturb(const UniformConvergenceStructure& u, Rng& rng);
Topology perturb(const Topology& t, Rng& rng);

}  // namespace ttskit::workbench
