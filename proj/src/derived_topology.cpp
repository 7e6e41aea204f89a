#include "ttskit/derived_topology.hpp"

#include <algorithm>
#include <sstream>

#include "ttskit/error.hpp"

namespace ttskit {

namespace {

long long ll(Mask v) { return static_cast<long long>(v); }

bool contains_sorted(const std::vector<Mask>& v, Mask a) { return std::binary_search(v.begin(), v.end(), a); }

std::string m(Mask a) { return render_mask(a); }

}  // namespace

bool Topology::is_open(Mask a) const { return contains_sorted(opens, a); }

std::vector<Mask> Topology::closed_sets() const {
    std::vector<Mask> out;
    for (Mask o : opens) out.push_back(full_mask(carrier) & ~o);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> Topology::minimal_neighbourhoods() const {
    std::vector<Mask> out(carrier, full_mask(carrier));
    for (Mask o : opens)
        for (int x : ttskit::members(o)) out[x] &= o;
    return out;
}

Report check_topology(const Topology& t) {
    Report r;
    if (t.carrier < 1) throw InputError("carrier size must be positive");
    if (t.carrier > 16) throw CapExceeded("topology carrier exceeds 16 points");
    const Mask all = full_mask(t.carrier);
    Check range = pass("in_range");
    for (Mask o : t.opens)
        if (!is_subset(o, all)) {
            range = fail("in_range", {ll(o)}, "open set outside the carrier");
            break;
        }
    r.add(range);
    std::vector<Mask> sorted = t.opens;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    r.add(contains_sorted(sorted, 0) ? pass("contains_empty") : fail("contains_empty", {}, "empty set not open"));
    r.add(contains_sorted(sorted, all) ? pass("contains_full") : fail("contains_full", {}, "carrier not open"));
    Check uni = pass("union_closed");
    Check inter = pass("intersection_closed");
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Mask a = sorted[i], b = sorted[j];
            if (uni.holds && !contains_sorted(sorted, a | b))
                uni = fail("union_closed", {ll(a), ll(b)}, m(a) + " u " + m(b) + " not open");
            if (inter.holds && !contains_sorted(sorted, a & b))
                inter = fail("intersection_closed", {ll(a), ll(b)}, m(a) + " n " + m(b) + " not open");
        }
    r.add(uni);
    r.add(inter);
    return r;
}

Topology make_topology(int carrier, std::vector<Mask> opens) {
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    Topology t{carrier, std::move(opens)};
    Report r = check_topology(t);
    for (const auto& c : r.checks)
        if (!c.holds) throw InputError("not a topology: " + c.name + " " + c.detail);
    return t;
}

Topology discrete_topology(int n) {
    std::vector<Mask> opens;
    for (Mask a = 0; a <= full_mask(n); ++a) opens.push_back(a);
    return make_topology(n, std::move(opens));
}

Topology indiscrete_topology(int n) { return make_topology(n, {0, full_mask(n)}); }

Topology sierpinski_topology() { return make_topology(2, {0, 1, 3}); }

Topology topology_from_kernels(int carrier, const std::vector<Mask>& kernel) {
    if (static_cast<int>(kernel.size()) != carrier) throw InputError("kernel map has wrong length");
    if (carrier > 16) throw CapExceeded("topology carrier exceeds 16 points");
    std::vector<Mask> opens;
    for (Mask a = 0; a <= full_mask(carrier); ++a) {
        bool open = true;
        for (int x : members(a)) open = open && is_subset(kernel[x], a);
        if (open) opens.push_back(a);
    }
    return Topology{carrier, std::move(opens)};
}

std::vector<Topology> all_topologies(int n) {
    if (n < 1) throw InputError("carrier size must be positive");
    if (n > 5) throw CapExceeded("topology enumeration needs a carrier of at most 5 points");
    // Minimal neighbourhood maps are exactly the transitive kernel maps.
    std::vector<Topology> out;
    std::vector<Mask> kernel(n);
    const Mask free = full_mask(n - 1);
    std::vector<Mask> code(n, 0);
    auto expand = [n](int x, Mask c) {
        const Mask low = c & full_mask(x);
        return low | bit(x) | ((c & ~full_mask(x)) << 1);
    };
    while (true) {
        for (int x = 0; x < n; ++x) kernel[x] = expand(x, code[x]) & full_mask(n);
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (int y : members(kernel[x])) transitive = transitive && is_subset(kernel[y], kernel[x]);
        if (transitive) out.push_back(topology_from_kernels(n, kernel));
        int i = n - 1;
        while (i >= 0 && code[i] == free) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
    std::sort(out.begin(), out.end(), [](const Topology& a, const Topology& b) { return a.opens < b.opens; });
    return out;
}

SigmaClosure::SigmaClosure(const Tts& s) : carrier_(s.carrier) {
    const std::vector<Mask> limits = convergence_points(s);
    const Mask all = s.full();
    closed_.assign(std::size_t{all} + 1, false);
    for (Mask a = 0; a <= all; ++a) {
        bool closed = true;
        const TokenSet& ta = s.at(a);
        for (auto t = ta.find_first(); t != TokenSet::npos && closed; t = ta.find_next(t))
            closed = is_subset(limits[t], a);
        closed_[a] = closed;
    }
}

std::vector<Mask> SigmaClosure::closed_sets() const {
    std::vector<Mask> out;
    for (Mask a = 0; a < closed_.size(); ++a)
        if (closed_[a]) out.push_back(a);
    return out;
}

std::vector<Mask> SigmaClosure::open_sets() const {
    std::vector<Mask> out;
    for (Mask a = 0; a < closed_.size(); ++a)
        if (is_open(a)) out.push_back(a);
    return out;
}

Mask SigmaClosure::closure(Mask a) const {
    Mask out = full_mask(carrier_);
    for (Mask b = 0; b < closed_.size(); ++b)
        if (closed_[b] && is_subset(a, b)) out &= b;
    return out;
}

Mask SigmaClosure::interior(Mask a) const {
    Mask out = 0;
    for (Mask b = 0; b < closed_.size(); ++b)
        if (is_open(b) && is_subset(b, a)) out |= b;
    return out;
}

bool SigmaClosure::is_neighbourhood(int x, Mask a) const {
    for (Mask b = 0; b < closed_.size(); ++b)
        if (is_open(b) && (b & bit(x)) && is_subset(b, a)) return true;
    return false;
}

std::vector<Mask> SigmaClosure::neighbourhoods(int x) const {
    if (x < 0 || x >= carrier_) throw InputError("point out of carrier range");
    std::vector<Mask> out;
    for (Mask a = 0; a < closed_.size(); ++a)
        if (is_neighbourhood(x, a)) out.push_back(a);
    return out;
}

std::vector<Mask> closed_sets(const Tts& s) { return SigmaClosure(s).closed_sets(); }
Mask closure(const Tts& s, Mask a) { return SigmaClosure(s).closure(a); }
Mask interior(const Tts& s, Mask a) { return SigmaClosure(s).interior(a); }
std::vector<Mask> neighbourhoods(const Tts& s, int x) { return SigmaClosure(s).neighbourhoods(x); }

Report closure_law_audit(const Tts& s) {
    const SigmaClosure sc(s);
    const int n = s.carrier;
    const Mask all = full_mask(n);
    std::vector<Mask> cl(all + 1), in(all + 1);
    for (Mask a = 0; a <= all; ++a) {
        cl[a] = sc.closure(a);
        in[a] = sc.interior(a);
    }
    Report r;

    Check inter = pass("closed_under_intersection");
    Check uni = pass("open_under_union");
    for (Mask a = 0; a <= all; ++a)
        for (Mask b = a + 1; b <= all; ++b) {
            if (inter.holds && sc.is_closed(a) && sc.is_closed(b) && !sc.is_closed(a & b))
                inter = fail("closed_under_intersection", {ll(a), ll(b)}, m(a) + " n " + m(b) + " not closed");
            if (uni.holds && sc.is_open(a) && sc.is_open(b) && !sc.is_open(a | b))
                uni = fail("open_under_union", {ll(a), ll(b)}, m(a) + " u " + m(b) + " not open");
        }
    r.add(inter);
    r.add(uni);

    const bool clopen = sc.is_closed(0) && sc.is_closed(all) && sc.is_open(0) && sc.is_open(all);
    r.add(clopen ? pass("empty_and_full_clopen") : fail("empty_and_full_clopen", {}, "empty set or carrier not clopen"));

    Check cfix = pass("closed_iff_fixed"), ofix = pass("open_iff_fixed");
    Check cext = pass("closure_extensive_idempotent"), oext = pass("interior_contractive_idempotent");
    Check nb = pass("open_iff_neighbourhood");
    for (Mask a = 0; a <= all; ++a) {
        if (cfix.holds && sc.is_closed(a) != (cl[a] == a)) cfix = fail("closed_iff_fixed", {ll(a)}, m(a));
        if (ofix.holds && sc.is_open(a) != (in[a] == a)) ofix = fail("open_iff_fixed", {ll(a)}, m(a));
        if (cext.holds && !(is_subset(a, cl[a]) && cl[cl[a]] == cl[a]))
            cext = fail("closure_extensive_idempotent", {ll(a)}, m(a));
        if (oext.holds && !(is_subset(in[a], a) && in[in[a]] == in[a]))
            oext = fail("interior_contractive_idempotent", {ll(a)}, m(a));
        if (nb.holds) {
            bool all_nb = true;
            for (int x : members(a)) all_nb = all_nb && (in[a] & bit(x));
            if (sc.is_open(a) != all_nb) nb = fail("open_iff_neighbourhood", {ll(a)}, m(a));
        }
    }
    r.add(cfix);
    r.add(cext);
    r.add(ofix);
    r.add(oext);

    Check mono = pass("operators_monotone");
    for (Mask b = 0; b <= all && mono.holds; ++b)
        for (Mask a = b;; a = (a - 1) & b) {
            if (!is_subset(cl[a], cl[b]) || !is_subset(in[a], in[b])) {
                mono = fail("operators_monotone", {ll(a), ll(b)}, m(a) + " in " + m(b));
                break;
            }
            if (a == 0) break;
        }
    r.add(mono);

    const bool boundary = cl[0] == 0 && in[0] == 0 && cl[all] == all && in[all] == all;
    r.add(boundary ? pass("operator_boundary") : fail("operator_boundary", {}, "operators move the empty set or carrier"));
    r.add(nb);
    return r;
}

Report CompatibilityReport::as_report() const {
    Report r;
    r.add(t_up_closed);
    r.add(conver_up_closed);
    r.add(cauchy_up_closed);
    if (union_cover) r.add(*union_cover);
    if (xi_up_closed && !cauchy_up_closed.holds)
        r.add(fail("xi_up_closed_implies_cauchy_up_closed", cauchy_up_closed.witness, cauchy_up_closed.detail));
    return r;
}

namespace {

void require_order_shape(const Tts& s, const BitMatrix& leq) {
    validate_shape(s);
    if (leq.size() != static_cast<std::size_t>(s.tokens)) throw InputError("token order has wrong size");
}

Check union_cover_check(const Tts& s, const BitMatrix& leq) {
    const Mask all = s.full();
    // below[A]: tokens lying below some token of T(A).
    std::vector<TokenSet> below(all + 1, TokenSet(s.tokens));
    for (Mask a = 0; a <= all; ++a)
        for (int x = 0; x < s.tokens; ++x)
            if (leq.row(x).intersects(s.at(a))) below[a].set(x);
    for (Mask a = 0; a <= all; ++a)
        for (Mask b = 0; b <= all; ++b) {
            const TokenSet rest = s.at(a | b) - below[a] - below[b];
            if (rest.any()) {
                const auto t = rest.find_first();
                return fail("union_cover", {ll(a), ll(b), ll(t)},
                            "A=" + m(a) + " B=" + m(b) + " token " + s.token_name(static_cast<int>(t)) +
                                " of T(AuB) below no token of T(A) or T(B)");
            }
        }
    return pass("union_cover");
}

}  // namespace

CompatibilityReport check_compatibility(const Tts& s, const BitMatrix& leq) {
    require_order_shape(s, leq);
    CompatibilityReport out;
    const Mask all = s.full();

    out.t_up_closed = pass("T_up_closed");
    for (Mask a = 0; a <= all && out.t_up_closed.holds; ++a)
        for (auto x = s.at(a).find_first(); x != TokenSet::npos; x = s.at(a).find_next(x)) {
            const TokenSet d = leq.row(x) - s.at(a);
            if (d.any()) {
                const auto y = d.find_first();
                out.t_up_closed = fail("T_up_closed", {ll(a), ll(x), ll(y)},
                                       s.token_name(static_cast<int>(x)) + " in T(" + m(a) + ") but " +
                                           s.token_name(static_cast<int>(y)) + " above it is not");
                break;
            }
        }

    out.conver_up_closed = pass("conver_up_closed");
    for (int x = 0; x < s.carrier && out.conver_up_closed.holds; ++x) {
        const TokenSet c = conver_set(s, x);
        for (auto a = c.find_first(); a != TokenSet::npos; a = c.find_next(a)) {
            const TokenSet d = leq.row(a) - c;
            if (d.any()) {
                const auto b = d.find_first();
                out.conver_up_closed = fail("conver_up_closed", {x, ll(a), ll(b)},
                                            s.token_name(static_cast<int>(a)) + " converges to " + std::to_string(x) +
                                                " but " + s.token_name(static_cast<int>(b)) + " above it does not");
                break;
            }
        }
    }

    out.cauchy_up_closed = pass("cauchy_up_closed");
    const TokenSet cauchy = cauchy_set(s);
    for (auto a = cauchy.find_first(); a != TokenSet::npos; a = cauchy.find_next(a)) {
        const TokenSet d = leq.row(a) - (cauchy & s.xi.row(a));
        if (d.any()) {
            const auto b = d.find_first();
            out.cauchy_up_closed = fail("cauchy_up_closed", {ll(a), ll(b)},
                                        s.token_name(static_cast<int>(a)) + " Cauchy, " +
                                            s.token_name(static_cast<int>(b)) +
                                            " above it is not Cauchy or not related to it");
            break;
        }
    }

    Ttsr probe{s, leq};
    for (const auto& c : check_axioms(probe).checks)
        if (c.name == "xi_up_closed") out.xi_up_closed = c.holds;
    return out;
}

CompatibilityReport check_strong_compatibility(const Tts& s, const BitMatrix& leq) {
    CompatibilityReport out = check_compatibility(s, leq);
    out.union_cover = union_cover_check(s, leq);
    return out;
}

TokenSet adherence(const Tts& s, const BitMatrix& leq, Mask a, Mask b) {
    require_order_shape(s, leq);
    if (!is_subset(a | b, s.full())) throw InputError("subset out of carrier range");
    TokenSet out(s.tokens);
    const TokenSet& tb = s.at(b);
    for (auto x = tb.find_first(); x != TokenSet::npos; x = tb.find_next(x))
        if (leq.row(x).intersects(s.at(a))) out.set(x);
    return out;
}

Report proposition_check(const Tts& s, const BitMatrix& leq) {
    require_order_shape(s, leq);
    const SigmaClosure sc(s);
    const Mask all = s.full();
    Report r;
    Check uni = pass("finite_union_closed");
    Check inter = pass("finite_intersection_open");
    for (Mask a = 0; a <= all; ++a)
        for (Mask b = a + 1; b <= all; ++b) {
            if (uni.holds && sc.is_closed(a) && sc.is_closed(b) && !sc.is_closed(a | b))
                uni = fail("finite_union_closed", {ll(a), ll(b)}, m(a) + " u " + m(b) + " not closed");
            if (inter.holds && sc.is_open(a) && sc.is_open(b) && !sc.is_open(a & b))
                inter = fail("finite_intersection_open", {ll(a), ll(b)}, m(a) + " n " + m(b) + " not open");
        }
    r.add(uni);
    r.add(inter);

    Check nb = pass("neighbourhood_refinement");
    for (int x = 0; x < s.carrier && nb.holds; ++x) {
        const TokenSet c = conver_set(s, x);
        const std::vector<Mask> hoods = sc.neighbourhoods(x);
        for (auto t = c.find_first(); t != TokenSet::npos && nb.holds; t = c.find_next(t))
            for (Mask a : hoods) {
                const TokenSet reach = leq.row(t) & c & s.at(a);
                if (reach.none()) {
                    nb = fail("neighbourhood_refinement", {x, ll(t), ll(a)},
                              s.token_name(static_cast<int>(t)) + " converges to " + std::to_string(x) +
                                  " but nothing above it converges there inside " + m(a));
                    break;
                }
            }
    }
    r.add(nb);
    return r;
}

DerivedTopology derive_topology(const Tts& s, const BitMatrix& leq) {
    DerivedTopology out;
    out.compatibility = check_strong_compatibility(s, leq);
    if (!out.compatibility.strongly_compatible()) return out;
    const SigmaClosure sc(s);
    out.closed = sc.closed_sets();
    out.topology = Topology{s.carrier, sc.open_sets()};
    out.self_check = proposition_check(s, leq);
    for (const auto& c : check_topology(out.topology).checks)
        if (!c.holds) out.self_check.add(fail("topology_" + c.name, c.witness, c.detail));
    out.minimal_neighbourhoods = out.topology.minimal_neighbourhoods();
    out.derived = true;
    return out;
}

}  // namespace ttskit
