#pragma once

#include <optional>
#include <vector>

#include "ttskit/bits.hpp"
#include "ttskit/report.hpp"
#include "ttskit/tts.hpp"

namespace ttskit {

// Open-set topology on a finite carrier; `opens` sorted ascending by mask.
struct Topology {
    int carrier = 1;
    std::vector<Mask> opens;

    bool is_open(Mask a) const;
    std::vector<Mask> closed_sets() const;
    // Smallest open set containing each point.
    std::vector<Mask> minimal_neighbourhoods() const;
    bool operator==(const Topology&) const = default;
};

Report check_topology(const Topology& t);
// Sorts, deduplicates and validates; throws InputError when not a topology.
Topology make_topology(int carrier, std::vector<Mask> opens);
Topology discrete_topology(int n);
Topology indiscrete_topology(int n);
// Opens {}, {0}, {0,1}.
Topology sierpinski_topology();
// The topology whose opens are the sets containing the kernel of each of their points.
Topology topology_from_kernels(int carrier, const std::vector<Mask>& kernel);

// Every topology on n <= 5 points, sorted by open-set list.
std::vector<Topology> all_topologies(int n);

// Closed and open sets defined by convergence of tokens in a structure.
class SigmaClosure {
public:
    explicit SigmaClosure(const Tts& s);

    int carrier() const { return carrier_; }
    bool is_closed(Mask a) const { return closed_[a]; }
    bool is_open(Mask a) const { return closed_[full_mask(carrier_) & ~a]; }
    std::vector<Mask> closed_sets() const;
    std::vector<Mask> open_sets() const;
    Mask closure(Mask a) const;
    Mask interior(Mask a) const;
    std::vector<Mask> neighbourhoods(int x) const;
    bool is_neighbourhood(int x, Mask a) const;

private:
    int carrier_;
    std::vector<bool> closed_;
};

std::vector<Mask> closed_sets(const Tts& s);
Mask closure(const Tts& s, Mask a);
Mask interior(const Tts& s, Mask a);
std::vector<Mask> neighbourhoods(const Tts& s, int x);

// Asserts the lattice and operator laws that hold for every structure.
Report closure_law_audit(const Tts& s);

struct CompatibilityReport {
    Check t_up_closed;
    Check conver_up_closed;
    Check cauchy_up_closed;
    std::optional<Check> union_cover;
    // The token relation is up-closed; when it holds, cauchy_up_closed must hold too.
    bool xi_up_closed = false;

    bool compatible() const { return t_up_closed.holds && conver_up_closed.holds && cauchy_up_closed.holds; }
    bool strongly_compatible() const { return compatible() && union_cover && union_cover->holds; }
    Report as_report() const;
};

CompatibilityReport check_compatibility(const Tts& s, const BitMatrix& leq);
CompatibilityReport check_strong_compatibility(const Tts& s, const BitMatrix& leq);

// Tokens of T(b) lying below some token of T(a).
TokenSet adherence(const Tts& s, const BitMatrix& leq, Mask a, Mask b);

struct DerivedTopology {
    bool derived = false;
    CompatibilityReport compatibility;
    Topology topology;
    std::vector<Mask> closed;
    std::vector<Mask> minimal_neighbourhoods;
    // finite_union_closed, finite_intersection_open, neighbourhood_refinement
    Report self_check;
};

DerivedTopology derive_topology(const Tts& s, const BitMatrix& leq);
// The finite-union and neighbourhood properties evaluated directly, independent of compatibility.
Report proposition_check(const Tts& s, const BitMatrix& leq);

}  // namespace ttskit
