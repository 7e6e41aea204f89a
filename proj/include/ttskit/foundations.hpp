#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ttskit/bits.hpp"
#include "ttskit/report.hpp"

namespace ttskit {

inline constexpr int kMaxCarrier = 64;
inline constexpr int kMaxRelationCarrier = 8;

class Carrier {
public:
    explicit Carrier(int size);
    int size() const { return size_; }
    Mask all() const { return full_mask(size_); }
    bool operator==(const Carrier&) const = default;

private:
    int size_;
};

class Subset {
public:
    Subset(Carrier carrier, Mask members);
    static Subset of(Carrier carrier, const std::vector<int>& xs);

    Carrier carrier() const { return carrier_; }
    Mask bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    bool contains(int x) const { return x >= 0 && x < carrier_.size() && (bits_ & bit(x)); }
    std::vector<int> elements() const { return members(bits_); }
    bool operator==(const Subset&) const = default;

private:
    Carrier carrier_;
    Mask bits_;
};

// Binary relation on a carrier of at most 8 points; pair (x, y) is bit x*n + y.
class Relation {
public:
    Relation(Carrier carrier, std::uint64_t pairs);
    static Relation of(Carrier carrier, const std::vector<std::pair<int, int>>& pairs);
    static Relation diagonal(Carrier carrier);
    static Relation all_pairs(Carrier carrier);

    Carrier carrier() const { return carrier_; }
    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    bool contains(int x, int y) const;
    std::vector<std::pair<int, int>> pairs() const;
    bool operator==(const Relation&) const = default;

private:
    Carrier carrier_;
    std::uint64_t bits_;
};

inline std::uint64_t pair_bit(int n, int x, int y) { return std::uint64_t{1} << (x * n + y); }

// Raw mask-level relation algebra, shared by the modules that work on relation masks.
std::uint64_t relation_inverse_bits(int n, std::uint64_t r);
std::uint64_t relation_compose_bits(int n, std::uint64_t a, std::uint64_t b);
std::uint64_t relation_product_bits(int n, Mask a, Mask b);

Relation relation_inverse(const Relation& r);
// (x,z) with some y such that (x,y) in a and (y,z) in b.
Relation relation_compose(const Relation& a, const Relation& b);

// Reflexive, transitive and directed relation on an index set, stored as up-sets:
// up(i) holds every j with i <= j.
class DirectedPreorder {
public:
    static DirectedPreorder from_up_sets(std::vector<Mask> up);
    static DirectedPreorder from_relation(const Relation& leq);
    static DirectedPreorder chain(int size);
    static DirectedPreorder point();

    int size() const { return static_cast<int>(up_.size()); }
    bool leq(int i, int j) const { return (up_[i] >> j) & 1; }
    Mask up(int i) const { return up_[i]; }
    const std::vector<Mask>& up_sets() const { return up_; }
    // Elements above every element; nonempty for a finite directed pre-order.
    Mask top() const;
    bool operator==(const DirectedPreorder&) const = default;

private:
    explicit DirectedPreorder(std::vector<Mask> up) : up_(std::move(up)) {}
    std::vector<Mask> up_;
};

// Validation used by DirectedPreorder construction and by the document parser.
Report check_directed_preorder(const std::vector<Mask>& up);

class PrincipalFilter {
public:
    Carrier carrier() const { return core_.carrier(); }
    const Subset& core() const { return core_; }
    Mask core_bits() const { return core_.bits(); }
    // All members A ⊇ core, ascending by mask.
    std::vector<Mask> members() const;
    bool operator==(const PrincipalFilter&) const = default;

private:
    friend PrincipalFilter make_principal_filter(const Subset& core);
    explicit PrincipalFilter(Subset core) : core_(std::move(core)) {}
    Subset core_;
};

class RelationFilter {
public:
    explicit RelationFilter(Relation core);
    const Relation& core() const { return core_; }
    bool operator==(const RelationFilter&) const = default;

private:
    Relation core_;
};

PrincipalFilter make_principal_filter(const Subset& core);
PrincipalFilter point_filter(Carrier carrier, int x);

// f refines g: every member of g is a member of f.
bool filter_refines(const PrincipalFilter& f, const PrincipalFilter& g);
PrincipalFilter filter_meet(const PrincipalFilter& f, const PrincipalFilter& g);
RelationFilter filter_product(const PrincipalFilter& f, const PrincipalFilter& g);

// Cayley table, table[a * n + b] = a * b.
struct GroupTable {
    int size = 0;
    std::vector<int> table;

    int op(int a, int b) const { return table[a * size + b]; }
    static GroupTable cyclic(int n);
};

Report check_group(const GroupTable& g);
PrincipalFilter extend_group_op(const GroupTable& g, const PrincipalFilter& f, const PrincipalFilter& h);
// Group axioms for the setwise extension of the operation to all filters on the carrier.
Report group_axiom_audit(const GroupTable& g);

}  // namespace ttskit
