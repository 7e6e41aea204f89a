#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ttskit/bits.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/foundations.hpp"
#include "ttskit/report.hpp"

namespace ttskit {

inline constexpr int kMaxNetCarrier = 4;
inline constexpr int kMaxIndexSize = 3;
inline constexpr int kMaxDiagonalSize = 2;

struct Net {
    DirectedPreorder index;
    std::vector<int> values;

    bool operator==(const Net&) const = default;
};

// Throws InputError when the value list does not match the index or leaves the carrier.
Net make_net(DirectedPreorder index, std::vector<int> values, int carrier);
Net constant_net(const DirectedPreorder& index, int x);
// "[up sets] -> (values)"
std::string render_net(const Net& s);

// Values taken on the top cluster of the index: the core of the tail filter.
Mask tail_core(const Net& s);
PrincipalFilter tail_filter(const Net& s, int carrier);

// Every labeled directed pre-order on `size` points, ordered by up-set lists.
const std::vector<DirectedPreorder>& directed_preorders(int size);

enum class SubnetKind {
    // monotone with image meeting the top cluster
    willard,
    // eventually above every index: the top cluster maps into the top cluster
    kelley,
};

bool is_subnet_map(const DirectedPreorder& j, const DirectedPreorder& i, const std::vector<int>& phi, SubnetKind kind);

struct Subnet {
    Net net;
    std::vector<int> phi;
};

// Subnets on index sets of at most `bound` points, by index size, then index
// order, then the map in lexicographic order.
std::vector<Subnet> enumerate_subnets(const Net& s, int bound, SubnetKind kind = SubnetKind::willard);

struct ConvergenceClass {
    std::string name;
    int carrier = 1;
    std::function<bool(const Net&, int)> converges;
    // Set when convergence depends only on the tail filter.
    std::optional<ConvergenceStructure> filter_form;
};

// Nets whose tail filter refines the neighbourhood filter.
ConvergenceClass class_from_topology(const Topology& t);
// Nets whose tail filter converges in the structure.
ConvergenceClass class_from_convergence(const ConvergenceStructure& c);
// Eventually constant at x, on index sets of at least `min_size` points.
ConvergenceClass class_eventually_constant_min_size(int carrier, int min_size);
// Eventually constant at x, on index sets of at most `max_size` points.
ConvergenceClass class_eventually_constant_max_size(int carrier, int max_size);
// The value at a fixed index equals x.
ConvergenceClass class_value_at_index(int carrier, int index);

struct MsBounds {
    int index_size = 3;
    int diag = 2;
    SubnetKind subnets = SubnetKind::willard;
};

// Nets on index sets of at most k points, in enumeration order, with their subnets.
class NetUniverse {
public:
    NetUniverse(int carrier, int bound, SubnetKind kind);

    int carrier() const { return carrier_; }
    int bound() const { return bound_; }
    std::size_t size() const { return nets_.size(); }
    const Net& net(std::size_t id) const { return nets_[id]; }
    const std::vector<std::size_t>& subnets(std::size_t id) const { return subnets_[id]; }
    std::size_t id_of(const Net& s) const;

private:
    int carrier_;
    int bound_;
    std::vector<Net> nets_;
    std::vector<std::vector<std::size_t>> subnets_;
    // Global position of each pre-order, offset of its first net.
    std::vector<std::vector<Mask>> preorder_keys_;
    std::vector<std::size_t> offsets_;
};

// reflexive, transitive
Report subnet_preorder_check(const NetUniverse& u);

struct DiagonalFrame {
    DirectedPreorder lambda;
    std::vector<Net> nets;
    std::vector<int> limits;
};

// Index (l, f) of the product lives at l + |Lambda| * (mixed radix of f, f(0)
// least significant), ordered componentwise. Throws InputError on a bad frame.
Net diagonal_net(const DiagonalFrame& frame);
// The net l -> limits[l] on Lambda.
Net outer_net(const DiagonalFrame& frame);

enum class Verdict { violated, no_violation_up_to_bound };

struct MsWitness {
    int point = 0;
    Net net;
    std::optional<Subnet> subnet;
    std::optional<DiagonalFrame> frame;
};

struct MsCondition {
    // constant_nets, subnets, subnet_divergence, subnet_divergence_alt, diagonal
    std::string name;
    Verdict verdict = Verdict::no_violation_up_to_bound;
    std::optional<MsWitness> witness;
    std::string detail;
    bool revalidated = false;
};

struct MsReport {
    std::string class_name;
    MsBounds bounds;
    std::size_t nets_examined = 0;
    std::size_t frames_examined = 0;
    std::vector<MsCondition> conditions;

    const MsCondition& get(const std::string& name) const;
    bool any_violation() const;
    // One check per condition plus alt_form_agrees.
    Report as_report() const;
};

// Throws CapExceeded when bounds or carrier exceed the caps.
MsReport check_moore_smith(const ConvergenceClass& s, const MsBounds& bounds = {});
// Re-derives a violation from its witness alone.
bool revalidate(const ConvergenceClass& s, const MsBounds& bounds, const MsCondition& c);

// Convergence by tail filters read off the bounded universe. Throws InputError
// when some net's convergence is not a function of its tail filter, when some
// filter has no net within the bound, or when the filters fail the axioms.
ConvergenceStructure filter_representation(const ConvergenceClass& s, int bound = kMaxIndexSize);

struct TopBounds {
    // Finest topology under which every class-convergent net converges.
    Topology finest_minus;
    bool discrete_in_plus = false;
    bool indiscrete_in_minus = false;
    // discrete_in_plus, indiscrete_in_minus, induced_in_minus, and for n <= 4
    // induced_finest_minus by enumeration of all topologies
    Report report;
};

TopBounds top_bounds(const ConvergenceStructure& c);
TopBounds top_bounds(const ConvergenceClass& s, int bound = kMaxIndexSize);

}  // namespace ttskit
