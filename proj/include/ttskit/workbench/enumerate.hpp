#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/foundations.hpp"
#include "ttskit/tts.hpp"
#include "ttskit/uniform.hpp"
#include "ttskit/workbench/document.hpp"

namespace ttskit::workbench {

inline constexpr int kMaxEnumTopology = 4;
inline constexpr int kMaxEnumConvergence = 3;
inline constexpr int kMaxEnumUniformity = 6;
inline constexpr int kMaxEnumPreorder = 4;
inline constexpr int kMaxEnumTtsCarrier = 2;
inline constexpr int kMaxEnumTtsTokens = 3;

std::vector<Topology> enumerate_topologies(int n);
// Kernel maps in odometer order, point 0 most significant.
std::vector<ConvergenceStructure> enumerate_convergence(int n);
// Set partitions by restricted growth string.
std::vector<FiniteUniformity> enumerate_uniformities(int n);
std::vector<UniformConvergenceStructure> enumerate_ucs(int n);
std::vector<DirectedPreorder> enumerate_directed_preorders(int n);

// Every axiom-passing structure with exactly this many points and tokens. The
// visitor returns false to stop early.
void for_each_tts(int carrier, int tokens, const std::function<bool(const Tts&)>& visit);
std::vector<Tts> enumerate_tts(int carrier, int tokens);

// Every shape-valid body, axioms not enforced. Used for checker equivalence runs.
void for_each_raw_tts(int carrier, int tokens, const std::function<void(const Tts&)>& visit);

// kind: topology | convergence | uniformity | ucs | tts | directed-preorder
struct Enumeration {
    std::string kind;
    int n = 0;
    int tokens = 0;
    std::size_t count = 0;
    std::vector<Structure> items;
    // Directed pre-orders are not documents; they are listed as up-set masks.
    std::vector<std::vector<Mask>> preorders;
};

// Throws CapExceeded beyond the per-kind caps and InputError on unknown kinds.
Enumeration enumerate(const std::string& kind, int n, int tokens = 0, bool count_only = false);

}  // namespace ttskit::workbench
