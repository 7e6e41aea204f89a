#include "ttskit/foundations.hpp"

#include <algorithm>
#include <sstream>

#include "ttskit/error.hpp"

namespace ttskit {

namespace {

void require_same(Carrier a, Carrier b) {
    if (!(a == b)) throw InputError("carrier mismatch");
}

std::string filter_name(Mask core) { return "up" + render_mask(core); }

}  // namespace

Carrier::Carrier(int size) : size_(size) {
    if (size < 1) throw InputError("carrier size must be positive");
    if (size > kMaxCarrier) throw CapExceeded("carrier size exceeds 64");
}

Subset::Subset(Carrier carrier, Mask members) : carrier_(carrier), bits_(members) {
    if (!is_subset(members, carrier.all())) throw InputError("subset member out of carrier range");
}

Subset Subset::of(Carrier carrier, const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) {
        if (x < 0 || x >= carrier.size()) throw InputError("subset member out of carrier range");
        m |= bit(x);
    }
    return Subset(carrier, m);
}

Relation::Relation(Carrier carrier, std::uint64_t pairs) : carrier_(carrier), bits_(pairs) {
    const int n = carrier.size();
    if (n > kMaxRelationCarrier) throw CapExceeded("relations need a carrier of at most 8 points");
    if (n < kMaxRelationCarrier && (pairs >> (n * n)) != 0) throw InputError("pair out of carrier range");
}

Relation Relation::of(Carrier carrier, const std::vector<std::pair<int, int>>& pairs) {
    const int n = carrier.size();
    if (n > kMaxRelationCarrier) throw CapExceeded("relations need a carrier of at most 8 points");
    std::uint64_t bits = 0;
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= n || y >= n) throw InputError("pair out of carrier range");
        bits |= pair_bit(n, x, y);
    }
    return Relation(carrier, bits);
}

Relation Relation::diagonal(Carrier carrier) {
    std::vector<std::pair<int, int>> d;
    for (int x = 0; x < carrier.size(); ++x) d.emplace_back(x, x);
    return of(carrier, d);
}

Relation Relation::all_pairs(Carrier carrier) {
    const int n = carrier.size();
    return Relation(carrier, n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1);
}

bool Relation::contains(int x, int y) const {
    const int n = carrier_.size();
    if (x < 0 || y < 0 || x >= n || y >= n) return false;
    return bits_ & pair_bit(n, x, y);
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    const int n = carrier_.size();
    std::vector<std::pair<int, int>> out;
    for (int p : members(bits_)) out.emplace_back(p / n, p % n);
    return out;
}

std::uint64_t relation_inverse_bits(int n, std::uint64_t r) {
    std::uint64_t out = 0;
    while (r) {
        const int p = std::countr_zero(r);
        r &= r - 1;
        out |= pair_bit(n, p % n, p / n);
    }
    return out;
}

std::uint64_t relation_compose_bits(int n, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t row = (std::uint64_t{1} << n) - 1;
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x) {
        const std::uint64_t ax = (a >> (x * n)) & row;
        std::uint64_t reach = 0;
        for (int y : members(ax)) reach |= (b >> (y * n)) & row;
        out |= reach << (x * n);
    }
    return out;
}

std::uint64_t relation_product_bits(int n, Mask a, Mask b) {
    std::uint64_t out = 0;
    for (int x : members(a)) out |= static_cast<std::uint64_t>(b) << (x * n);
    return out;
}

Relation relation_inverse(const Relation& r) {
    return Relation(r.carrier(), relation_inverse_bits(r.carrier().size(), r.bits()));
}

Relation relation_compose(const Relation& a, const Relation& b) {
    require_same(a.carrier(), b.carrier());
    return Relation(a.carrier(), relation_compose_bits(a.carrier().size(), a.bits(), b.bits()));
}

Report check_directed_preorder(const std::vector<Mask>& up) {
    Report r;
    const int n = static_cast<int>(up.size());
    if (n == 0) {
        r.add(fail("nonempty", {}, "index set is empty"));
        return r;
    }
    if (n > kMaxCarrier) throw CapExceeded("index set exceeds 64 elements");
    Check in_range = pass("in_range");
    for (int i = 0; i < n && in_range.holds; ++i)
        if (!is_subset(up[i], full_mask(n))) in_range = fail("in_range", {i}, "row " + std::to_string(i) + " out of range");
    r.add(in_range);
    if (!in_range.holds) return r;

    Check refl = pass("reflexive");
    for (int i = 0; i < n; ++i) {
        if (!(up[i] & bit(i))) {
            refl = fail("reflexive", {i}, "not " + std::to_string(i) + "<=" + std::to_string(i));
            break;
        }
    }
    r.add(refl);

    Check trans = pass("transitive");
    for (int i = 0; i < n && trans.holds; ++i)
        for (int j : members(up[i]))
            if (!is_subset(up[j], up[i])) {
                const int k = std::countr_zero(up[j] & ~up[i]);
                std::ostringstream os;
                os << i << "<=" << j << "<=" << k << " but not " << i << "<=" << k;
                trans = fail("transitive", {i, j, k}, os.str());
                break;
            }
    r.add(trans);

    Check dir = pass("directed");
    for (int i = 0; i < n && dir.holds; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((up[i] & up[j]) == 0) {
                dir = fail("directed", {i, j}, std::to_string(i) + " and " + std::to_string(j) + " have no common upper bound");
                break;
            }
    r.add(dir);
    return r;
}

DirectedPreorder DirectedPreorder::from_up_sets(std::vector<Mask> up) {
    Report r = check_directed_preorder(up);
    if (!r.ok()) {
        for (const auto& c : r.checks)
            if (!c.holds) throw InputError("not a directed pre-order: " + c.name + " " + c.detail);
    }
    return DirectedPreorder(std::move(up));
}

DirectedPreorder DirectedPreorder::from_relation(const Relation& leq) {
    const int n = leq.carrier().size();
    std::vector<Mask> up(n, 0);
    for (auto [a, b] : leq.pairs()) up[a] |= bit(b);
    return from_up_sets(std::move(up));
}

DirectedPreorder DirectedPreorder::chain(int size) {
    std::vector<Mask> up(size);
    for (int i = 0; i < size; ++i) up[i] = full_mask(size) & ~full_mask(i);
    return from_up_sets(std::move(up));
}

DirectedPreorder DirectedPreorder::point() { return DirectedPreorder({1}); }

Mask DirectedPreorder::top() const {
    Mask t = full_mask(size());
    for (Mask u : up_) t &= u;
    return t;
}

std::vector<Mask> PrincipalFilter::members() const {
    const Mask free = carrier().all() & ~core_bits();
    if (popcount(free) > 20) throw CapExceeded("filter member family too large to materialize");
    std::vector<Mask> out;
    // Enumerate subsets of the free part in increasing order.
    Mask s = 0;
    do {
        out.push_back(core_bits() | s);
        s = (s - free) & free;
    } while (s != 0);
    std::sort(out.begin(), out.end());
    return out;
}

RelationFilter::RelationFilter(Relation core) : core_(std::move(core)) {
    if (core_.empty()) throw InputError("relation filter core must be nonempty");
}

PrincipalFilter make_principal_filter(const Subset& core) {
    if (core.empty()) throw InputError("filter core must be nonempty");
    return PrincipalFilter(core);
}

PrincipalFilter point_filter(Carrier carrier, int x) {
    if (x < 0 || x >= carrier.size()) throw InputError("point out of carrier range");
    return make_principal_filter(Subset(carrier, bit(x)));
}

bool filter_refines(const PrincipalFilter& f, const PrincipalFilter& g) {
    require_same(f.carrier(), g.carrier());
    return is_subset(f.core_bits(), g.core_bits());
}

PrincipalFilter filter_meet(const PrincipalFilter& f, const PrincipalFilter& g) {
    require_same(f.carrier(), g.carrier());
    return make_principal_filter(Subset(f.carrier(), f.core_bits() | g.core_bits()));
}

RelationFilter filter_product(const PrincipalFilter& f, const PrincipalFilter& g) {
    require_same(f.carrier(), g.carrier());
    const Carrier c = f.carrier();
    if (c.size() > kMaxRelationCarrier) throw CapExceeded("relations need a carrier of at most 8 points");
    return RelationFilter(Relation(c, relation_product_bits(c.size(), f.core_bits(), g.core_bits())));
}

GroupTable GroupTable::cyclic(int n) {
    GroupTable g;
    g.size = n;
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    return g;
}

Report check_group(const GroupTable& g) {
    Report r;
    const int n = g.size;
    if (n < 1 || static_cast<int>(g.table.size()) != n * n) {
        r.add(fail("shape", {}, "table must be size*size entries"));
        return r;
    }
    Check closure = pass("closure");
    for (int i = 0; i < n * n; ++i)
        if (g.table[i] < 0 || g.table[i] >= n) {
            closure = fail("closure", {i / n, i % n}, "product out of range");
            break;
        }
    r.add(closure);
    if (!closure.holds) return r;

    Check assoc = pass("associativity");
    for (int a = 0; a < n && assoc.holds; ++a)
        for (int b = 0; b < n && assoc.holds; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
                    assoc = fail("associativity", {a, b, c}, "(ab)c != a(bc)");
                    break;
                }
    r.add(assoc);

    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n; ++a) ok = ok && g.op(c, a) == a && g.op(a, c) == a;
        if (ok) e = c;
    }
    r.add(e >= 0 ? pass("identity") : fail("identity", {}, "no identity element"));

    Check inv = pass("inverses");
    if (e >= 0) {
        for (int a = 0; a < n; ++a) {
            bool found = false;
            for (int b = 0; b < n && !found; ++b) found = g.op(a, b) == e && g.op(b, a) == e;
            if (!found) {
                inv = fail("inverses", {a}, std::to_string(a) + " has no inverse");
                break;
            }
        }
    } else {
        inv = fail("inverses", {}, "no identity element");
    }
    r.add(inv);
    return r;
}

namespace {

Mask setwise(const GroupTable& g, Mask a, Mask b) {
    Mask out = 0;
    for (int x : members(a))
        for (int y : members(b)) out |= bit(g.op(x, y));
    return out;
}

void require_group(const GroupTable& g) {
    Report r = check_group(g);
    for (const auto& c : r.checks)
        if (!c.holds) throw InputError("not a group: " + c.name + " " + c.detail);
}

}  // namespace

PrincipalFilter extend_group_op(const GroupTable& g, const PrincipalFilter& f, const PrincipalFilter& h) {
    require_group(g);
    require_same(f.carrier(), h.carrier());
    if (f.carrier().size() != g.size) throw InputError("group and filters live on different carriers");
    return make_principal_filter(Subset(f.carrier(), setwise(g, f.core_bits(), h.core_bits())));
}

Report group_axiom_audit(const GroupTable& g) {
    require_group(g);
    const int n = g.size;
    if (n > 6) throw CapExceeded("group audit runs on at most 6 elements");
    const Mask cores = full_mask(n);
    Report r;

    Check closure = pass("closure");
    for (Mask a = 1; a <= cores && closure.holds; ++a)
        for (Mask b = 1; b <= cores; ++b)
            if (setwise(g, a, b) == 0) {
                closure = fail("closure", {static_cast<long long>(a), static_cast<long long>(b)}, "empty product");
                break;
            }
    r.add(closure);

    Check assoc = pass("associativity");
    for (Mask a = 1; a <= cores && assoc.holds; ++a)
        for (Mask b = 1; b <= cores && assoc.holds; ++b)
            for (Mask c = 1; c <= cores; ++c)
                if (setwise(g, setwise(g, a, b), c) != setwise(g, a, setwise(g, b, c))) {
                    assoc = fail("associativity",
                                 {static_cast<long long>(a), static_cast<long long>(b), static_cast<long long>(c)},
                                 filter_name(a) + " " + filter_name(b) + " " + filter_name(c));
                    break;
                }
    r.add(assoc);

    Mask e = 0;
    for (Mask c = 1; c <= cores && e == 0; ++c) {
        bool ok = true;
        for (Mask a = 1; a <= cores && ok; ++a) ok = setwise(g, c, a) == a && setwise(g, a, c) == a;
        if (ok) e = c;
    }
    r.add(e ? pass("identity") : fail("identity", {}, "no identity filter"));

    Check inv = e ? pass("inverses") : fail("inverses", {}, "no identity filter");
    for (Mask a = 1; e && a <= cores; ++a) {
        bool found = false;
        for (Mask b = 1; b <= cores && !found; ++b) found = setwise(g, a, b) == e && setwise(g, b, a) == e;
        if (!found) {
            inv = fail("inverses", {static_cast<long long>(a)},
                       filter_name(a) + " has no inverse for identity " + filter_name(e));
            break;
        }
    }
    r.add(inv);
    return r;
}

}  // namespace ttskit
