#pragma once

#include <cstddef>
#include <vector>

#include "ttskit/bits.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/report.hpp"
#include "ttskit/tts.hpp"

namespace ttskit {

// Unvalidated assignment of convergent filters: lambda[x] holds filter tokens
// (token t is the filter with core t + 1).
struct FilterAssignment {
    int carrier = 1;
    std::vector<TokenSet> lambda;
};

// point_filter, meet_closed, refinement_closed
Report check_convergence_axioms(const FilterAssignment& a);

// A convergence structure that passes the axioms. On a finite carrier it is
// determined by one kernel per point: a filter converges to x iff its core lies
// inside kernel(x), and x is in kernel(x).
class ConvergenceStructure {
public:
    static ConvergenceStructure from_kernels(std::vector<Mask> kernel);
    // Throws InputError naming the first failing axiom.
    static ConvergenceStructure from_assignment(const FilterAssignment& a);
    static ConvergenceStructure discrete(int n);
    static ConvergenceStructure indiscrete(int n);

    int carrier() const { return static_cast<int>(kernel_.size()); }
    Mask kernel(int x) const { return kernel_[x]; }
    const std::vector<Mask>& kernels() const { return kernel_; }
    bool converges(Mask core, int x) const { return core != 0 && is_subset(core, kernel_[x]); }
    FilterAssignment assignment() const;
    bool operator==(const ConvergenceStructure&) const = default;

private:
    explicit ConvergenceStructure(std::vector<Mask> k) : kernel_(std::move(k)) {}
    std::vector<Mask> kernel_;
};

ConvergenceStructure topology_to_convergence(const Topology& t);
Topology induced_topology(const ConvergenceStructure& c);
bool is_topological(const ConvergenceStructure& c);

// Filter support with filters related when they share a limit.
Tts embed_convergence(const ConvergenceStructure& c);
Ttsr embed_convergence_ttsr(const ConvergenceStructure& c);

// Smallest (a, b, c) with a~b, b~c and not a~c.
Check relation_transitivity(const Tts& s);

struct SigmaTau {
    Ttsr structure;
    Report axioms;
    bool complete = false;
    Check transitive;
};

SigmaTau build_sigma_tau(const Topology& t);

using PointMap = std::vector<int>;

bool is_continuous(const ConvergenceStructure& x, const ConvergenceStructure& z, const PointMap& f);
// All continuous maps, in lexicographic order of their value tuples.
std::vector<PointMap> continuous_maps(const ConvergenceStructure& x, const ConvergenceStructure& z);

struct FunctionSpace {
    std::vector<PointMap> maps;
    ConvergenceStructure structure;
};

// Continuous convergence on the continuous maps; point k of the structure is maps[k].
FunctionSpace continuous_convergence(const ConvergenceStructure& x, const ConvergenceStructure& z);

// Point (a, b) of the product is a * |Y| + b.
ConvergenceStructure product(const ConvergenceStructure& x, const ConvergenceStructure& y);

struct ExponentialReport {
    std::size_t product_maps = 0;
    std::size_t curried_maps = 0;
    std::size_t function_space_size = 0;
    // sections_continuous, curried_continuous, injective, surjective, cardinalities_equal,
    // set_level_injective, and topological_count_agrees when all inputs are topological
    Report report;
};

ExponentialReport exponential_check(const ConvergenceStructure& x, const ConvergenceStructure& y,
                                    const ConvergenceStructure& z);

}  // namespace ttskit
