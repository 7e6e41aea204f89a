#include "ttskit/uniform.hpp"

#include <algorithm>

#include "ttskit/convergence.hpp"
#include "ttskit/error.hpp"
#include "ttskit/foundations.hpp"

namespace ttskit {

namespace {

long long ll(std::uint64_t v) { return static_cast<long long>(v); }

std::string render_relation(int n, std::uint64_t r) {
    std::string out = "{";
    bool first = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r & pair_bit(n, x, y)) {
                out += (first ? "" : ",") + std::string("(") + std::to_string(x) + "," + std::to_string(y) + ")";
                first = false;
            }
    return out + "}";
}

std::uint64_t all_pairs_bits(int n) { return n * n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1; }

}  // namespace

bool UniformConvergenceStructure::contains(std::uint64_t r) const {
    return std::binary_search(generators.begin(), generators.end(), r);
}

UniformConvergenceStructure make_ucs(int carrier, std::vector<std::uint64_t> generators) {
    if (carrier < 1) throw InputError("carrier size must be positive");
    if (carrier > kMaxUniformCarrier) throw CapExceeded("uniform structures need a carrier of at most 4 points");
    const std::uint64_t all = all_pairs_bits(carrier);
    for (auto r : generators) {
        if (r == 0) throw InputError("generator relations must be nonempty");
        if (r & ~all) throw InputError("generator relation outside the carrier");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    return UniformConvergenceStructure{carrier, std::move(generators)};
}

Report check_ucs_axioms(const UniformConvergenceStructure& u) {
    const int n = u.carrier;
    const auto& g = u.generators;
    Report r;

    Check diag = pass("diagonal_points");
    for (int x = 0; x < n; ++x)
        if (!u.contains(pair_bit(n, x, x))) {
            diag = fail("diagonal_points", {x}, "missing {(" + std::to_string(x) + "," + std::to_string(x) + ")}");
            break;
        }

    // First generator with a missing proper nonempty subrelation. Every smaller
    // generator is already down-closed, so one missing pair removal detects it.
    Check down = pass("refinement_closed");
    for (auto a : g) {
        bool broken = false;
        for (std::uint64_t rest = a; rest; rest &= rest - 1) {
            const std::uint64_t sub = a & ~(rest & -rest);
            if (sub && !u.contains(sub)) broken = true;
        }
        if (!broken) continue;
        for (std::uint64_t sub = 1; sub < a; ++sub)
            if ((sub & ~a) == 0 && !u.contains(sub)) {
                down = fail("refinement_closed", {ll(a), ll(sub)},
                            render_relation(n, a) + " present but " + render_relation(n, sub) + " missing");
                break;
            }
        break;
    }

    std::uint64_t top = 0;
    for (auto a : g) top |= a;
    const bool top_in = u.contains(top);

    Check meet = pass("meet_closed");
    if (!(down.holds && top_in)) {
        for (std::size_t i = 0; i < g.size() && meet.holds; ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (!u.contains(g[i] | g[j])) {
                    meet = fail("meet_closed", {ll(g[i]), ll(g[j])},
                                "union of " + render_relation(n, g[i]) + " and " + render_relation(n, g[j]) + " missing");
                    break;
                }
    }

    Check inv = pass("inverse_closed");
    for (auto a : g)
        if (!u.contains(relation_inverse_bits(n, a))) {
            inv = fail("inverse_closed", {ll(a)}, "inverse of " + render_relation(n, a) + " missing");
            break;
        }

    Check comp = pass("composition_closed");
    const bool fast = down.holds && top_in && (relation_compose_bits(n, top, top) & ~top) == 0;
    if (!fast) {
        for (std::size_t i = 0; i < g.size() && comp.holds; ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                const std::uint64_t c = relation_compose_bits(n, g[i], g[j]);
                if (c && !u.contains(c)) {
                    comp = fail("composition_closed", {ll(g[i]), ll(g[j])},
                                "composite of " + render_relation(n, g[i]) + " and " + render_relation(n, g[j]) +
                                    " missing");
                    break;
                }
            }
    }

    r.add(diag);
    r.add(meet);
    r.add(down);
    r.add(inv);
    r.add(comp);
    return r;
}

Tts embed_ucs(const UniformConvergenceStructure& u) {
    const int n = u.carrier;
    Tts s = filter_support(n);
    const Mask all = full_mask(n);
    for (Mask f = 1; f <= all; ++f)
        for (Mask h = 1; h <= all; ++h)
            if (u.contains(relation_product_bits(n, f, h))) s.xi.set(filter_token(f), filter_token(h));
    return s;
}

Mask FiniteUniformity::class_of(int x) const {
    Mask m = 0;
    for (int y = 0; y < carrier; ++y)
        if (entourage & pair_bit(carrier, x, y)) m |= bit(y);
    return m;
}

std::vector<Mask> FiniteUniformity::classes() const {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int x = 0; x < carrier; ++x)
        if (!(seen & bit(x))) {
            out.push_back(class_of(x));
            seen |= class_of(x);
        }
    return out;
}

Report check_uniformity(const FiniteUniformity& u) {
    const int n = u.carrier;
    const std::uint64_t e = u.entourage;
    Report r;
    Check refl = pass("reflexive");
    for (int x = 0; x < n; ++x)
        if (!(e & pair_bit(n, x, x))) {
            refl = fail("reflexive", {x}, "missing (" + std::to_string(x) + "," + std::to_string(x) + ")");
            break;
        }
    r.add(refl);
    Check sym = pass("symmetric");
    for (int x = 0; x < n && sym.holds; ++x)
        for (int y = 0; y < n; ++y)
            if ((e & pair_bit(n, x, y)) && !(e & pair_bit(n, y, x))) {
                sym = fail("symmetric", {x, y}, "(" + std::to_string(x) + "," + std::to_string(y) + ") without its inverse");
                break;
            }
    r.add(sym);
    Check tr = pass("transitive");
    for (int x = 0; x < n && tr.holds; ++x)
        for (int y = 0; y < n && tr.holds; ++y)
            for (int z = 0; z < n; ++z)
                if ((e & pair_bit(n, x, y)) && (e & pair_bit(n, y, z)) && !(e & pair_bit(n, x, z))) {
                    tr = fail("transitive", {x, y, z},
                              "(" + std::to_string(x) + "," + std::to_string(y) + ") and (" + std::to_string(y) + "," +
                                  std::to_string(z) + ") without (" + std::to_string(x) + "," + std::to_string(z) + ")");
                    break;
                }
    r.add(tr);
    return r;
}

FiniteUniformity make_uniformity(int carrier, std::uint64_t entourage) {
    if (carrier < 1) throw InputError("carrier size must be positive");
    if (carrier > kMaxRelationCarrier) throw CapExceeded("relations need a carrier of at most 8 points");
    if (entourage & ~all_pairs_bits(carrier)) throw InputError("entourage outside the carrier");
    FiniteUniformity u{carrier, entourage};
    for (const auto& c : check_uniformity(u).checks)
        if (!c.holds) throw InputError("entourage is not an equivalence relation: " + c.detail);
    return u;
}

FiniteUniformity uniformity_from_classes(int carrier, const std::vector<Mask>& classes) {
    std::uint64_t e = 0;
    for (Mask c : classes) e |= relation_product_bits(carrier, c, c);
    return make_uniformity(carrier, e);
}

UniformConvergenceStructure ucs_from_uniformity(const FiniteUniformity& u) {
    if (u.carrier > kMaxUniformCarrier) throw CapExceeded("uniform structures need a carrier of at most 4 points");
    std::vector<std::uint64_t> gens;
    for (std::uint64_t r = u.entourage; r; r = (r - 1) & u.entourage) gens.push_back(r);
    return make_ucs(u.carrier, std::move(gens));
}

Topology uniform_topology(const FiniteUniformity& u) {
    std::vector<Mask> kernel(u.carrier);
    for (int x = 0; x < u.carrier; ++x) kernel[x] = u.class_of(x);
    return topology_from_kernels(u.carrier, kernel);
}

SigmaUpsilon build_sigma_upsilon(const FiniteUniformity& u) {
    const int n = u.carrier;
    if (n > kMaxTtsCarrier) throw CapExceeded("structure carrier exceeds 12 points");
    const Topology top = uniform_topology(u);
    const ConvergenceStructure lim = topology_to_convergence(top);

    SigmaUpsilon out;
    out.structure.tts = embed_convergence(lim);
    out.structure.leq = refinement_order(n);
    const Tts& s = out.structure.tts;
    const Mask all = full_mask(n);

    out.report.append(check_axioms(s), "tts.");
    out.report.append(check_axioms(out.structure), "ttsr.");

    const TokenSet cauchy = cauchy_set(s);
    Check crit = pass("cauchy_criterion");
    for (Mask a = 1; a <= all; ++a) {
        const bool uniform_cauchy = (relation_product_bits(n, a, a) & ~u.entourage) == 0;
        if (cauchy.test(filter_token(a)) != uniform_cauchy) {
            crit = fail("cauchy_criterion", {ll(a)}, "filter up" + render_mask(a) + " disagrees");
            break;
        }
    }
    out.report.add(crit);
    out.report.add(is_complete(s) ? pass("complete") : fail("complete", {}, "a Cauchy token does not converge"));
    out.report.add(relation_transitivity(s));

    // Separated quotient: classes become points of a discrete space.
    const std::vector<Mask> cls = u.classes();
    auto image = [&](Mask a) {
        Mask q = 0;
        for (std::size_t c = 0; c < cls.size(); ++c)
            if (a & cls[c]) q |= bit(static_cast<int>(c));
        return q;
    };
    Check sep = pass("separated_reading_agrees");
    for (Mask f = 1; f <= all && sep.holds; ++f)
        for (Mask h = 1; h <= all; ++h) {
            const Mask qf = image(f), qh = image(h);
            const bool related = popcount(qf) == 1 && qf == qh;
            if (related != s.xi.test(filter_token(f), filter_token(h))) {
                sep = fail("separated_reading_agrees", {ll(f), ll(h)},
                           "up" + render_mask(f) + " and up" + render_mask(h) + " disagree");
                break;
            }
        }
    out.report.add(sep);
    return out;
}

}  // namespace ttskit
