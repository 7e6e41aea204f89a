#include "ttskit/associations.hpp"

#include <sstream>

#include "ttskit/error.hpp"

namespace ttskit {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

std::uint64_t as_word(const TokenSet& s) {
    std::uint64_t w = 0;
    for (auto t = s.find_first(); t != TokenSet::npos; t = s.find_next(t)) w |= std::uint64_t{1} << t;
    return w;
}

void require_support_axioms(const Tts& s) {
    validate_shape(s);
    for (const auto& c : check_axioms(s).checks) {
        if (c.name == "empty_set_maps_empty" || c.name == "monotone_nonempty" || c.name == "full_set_covers_tokens")
            if (!c.holds) throw InputError("support fails " + c.name + ": " + c.detail);
    }
}

}  // namespace

PowerAssociation power_association(const Tts& base, int token_cap) {
    validate_shape(base);
    const int m = base.tokens;
    if (m > token_cap || m > 16) throw CapExceeded("power association refuses more than " + std::to_string(token_cap) + " tokens");
    const std::size_t count = std::size_t{1} << m;

    std::vector<bool> clique(count, true);
    for (std::size_t k = 0; k < count; ++k)
        for (int i = 0; i < m && clique[k]; ++i)
            if (k >> i & 1)
                for (int j = 0; j < m; ++j)
                    if ((k >> j & 1) && !base.xi.test(i, j)) {
                        clique[k] = false;
                        break;
                    }

    PowerAssociation out;
    Tts& p = out.result.tts;
    p = Tts::blank(base.carrier, static_cast<int>(count));
    for (Mask a = 1; a <= base.full(); ++a) {
        const std::uint64_t ta = as_word(base.at(a));
        for (std::uint64_t k = ta;; k = (k - 1) & ta) {
            p.table[a].set(k);
            if (k == 0) break;
        }
    }
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t l = 0; l < count; ++l)
            if (clique[k | l]) p.xi.set(k, l);
    p.names.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (int i = 0; i < m; ++i)
            if (k >> i & 1) {
                os << (first ? "" : ",") << base.token_name(i);
                first = false;
            }
        os << '}';
        p.names.push_back(os.str());
    }

    BitMatrix& leq = out.result.leq;
    leq = BitMatrix(count);
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t l = k;; l = (l - 1) & k) {
            leq.set(k, l);
            if (l == 0) break;
        }

    out.report = check_axioms(out.result);
    Check anti = pass("order_antisymmetric");
    for (std::size_t k = 0; k < count && anti.holds; ++k)
        for (std::size_t l = k + 1; l < count; ++l)
            if (leq.test(k, l) && leq.test(l, k)) {
                anti = fail("order_antisymmetric", {ll(k), ll(l)}, "distinct token sets below each other");
                break;
            }
    out.report.add(anti);

    // The empty token set sits in every point set, so every clique converges everywhere.
    Check conv = pass("conver_equals_cliques");
    for (int x = 0; x < base.carrier && conv.holds; ++x) {
        const TokenSet c = conver_set(p, x);
        for (std::size_t k = 0; k < count; ++k)
            if (c.test(k) != clique[k]) {
                conv = fail("conver_equals_cliques", {x, ll(k)}, p.names[k]);
                break;
            }
    }
    out.report.add(conv);
    Check empty_tok = pass("empty_token_in_point_sets");
    for (int x = 0; x < base.carrier; ++x)
        if (!p.at(bit(x)).test(0)) {
            empty_tok = fail("empty_token_in_point_sets", {x}, "empty token set missing at " + std::to_string(x));
            break;
        }
    empty_tok.detail = empty_tok.holds ? "empty token set is based at every point and converges to every point"
                                       : empty_tok.detail;
    out.report.add(empty_tok);

    out.compatibility = check_compatibility(p, leq);
    return out;
}

SupportOrder support_order(const Tts& support) {
    require_support_axioms(support);
    const Mask all = support.full();
    const int m = support.tokens;
    SupportOrder out;
    out.families.assign(m, {});
    for (Mask a = 1; a <= all; ++a)
        for (auto t = support.at(a).find_first(); t != TokenSet::npos; t = support.at(a).find_next(t))
            out.families[t].push_back(a);

    // Membership table: in[t][a].
    std::vector<std::vector<bool>> in(m, std::vector<bool>(all + 1, false));
    for (int t = 0; t < m; ++t)
        for (Mask a : out.families[t]) in[t][a] = true;

    Check nonvoid = pass("excludes_empty_nonvoid");
    for (int t = 0; t < m; ++t)
        if (out.families[t].empty() || in[t][0]) {
            nonvoid = fail("excludes_empty_nonvoid", {t}, support.token_name(t) + " has an empty family");
            break;
        }
    out.report.add(nonvoid);

    Check up = pass("superset_closed");
    for (int t = 0; t < m && up.holds; ++t)
        for (Mask a : out.families[t]) {
            bool done = false;
            for (int x = 0; x < support.carrier; ++x)
                if (!(a & bit(x)) && !in[t][a | bit(x)]) {
                    up = fail("superset_closed", {t, static_cast<long long>(a), static_cast<long long>(a | bit(x))},
                              support.token_name(t) + " family has " + render_mask(a) + " but not " +
                                  render_mask(a | bit(x)));
                    done = true;
                    break;
                }
            if (done) break;
        }
    out.report.add(up);

    // Evaluated over every pair of nonempty sets, disjoint pairs included.
    Check inter = pass("intersection_condition");
    for (Mask a = 1; a <= all && inter.holds; ++a)
        for (Mask b = 1; b <= all; ++b) {
            const TokenSet d = (support.at(a) & support.at(b)) - support.at(a & b);
            if (d.any()) {
                const auto t = d.find_first();
                inter = fail("intersection_condition",
                             {static_cast<long long>(a), static_cast<long long>(b), ll(t)},
                             support.token_name(static_cast<int>(t)) + " in T(" + render_mask(a) + ") and T(" +
                                 render_mask(b) + ") but not T(" + render_mask(a & b) + ")");
                break;
            }
        }
    out.report.add(inter);

    Check filt = pass("families_are_filters");
    for (int t = 0; t < m && filt.holds; ++t) {
        const auto& fam = out.families[t];
        if (fam.empty()) {
            filt = fail("families_are_filters", {t}, support.token_name(t) + " has an empty family");
            break;
        }
        for (std::size_t i = 0; i < fam.size() && filt.holds; ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                const Mask c = fam[i] & fam[j];
                if (c == 0 || !in[t][c]) {
                    filt = fail("families_are_filters",
                                {t, static_cast<long long>(fam[i]), static_cast<long long>(fam[j])},
                                support.token_name(t) + " family not closed under " + render_mask(fam[i]) + " n " +
                                    render_mask(fam[j]));
                    break;
                }
            }
    }
    out.families_are_filters = filt.holds && up.holds && nonvoid.holds;
    out.report.add(filt);
    out.report.add(out.families_are_filters == inter.holds
                       ? pass("filters_iff_intersection_condition")
                       : fail("filters_iff_intersection_condition", {}, "filter property and intersection condition disagree"));

    out.leq = BitMatrix(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool sub = true;
            for (Mask x : out.families[a]) sub = sub && in[b][x];
            if (sub) out.leq.set(a, b);
        }
    return out;
}

SecondAssociation check_second_association(const Tts& s) {
    SecondAssociation out;
    out.order = support_order(s);
    out.compatibility = check_compatibility(s, out.order.leq);
    const CompatibilityReport& c = out.compatibility;

    // Both directions are decided from separately computed truth values.
    out.compatible = c.t_up_closed.holds && c.conver_up_closed.holds && c.cauchy_up_closed.holds;
    out.conditions = c.conver_up_closed.holds && c.cauchy_up_closed.holds;

    out.report.add(c.t_up_closed);
    out.report.add(!out.compatible || out.conditions
                       ? pass("compatible_implies_conditions")
                       : fail("compatible_implies_conditions", {}, "compatible but a condition fails"));
    out.report.add(!out.conditions || out.compatible
                       ? pass("conditions_imply_compatible")
                       : fail("conditions_imply_compatible", c.t_up_closed.witness, c.t_up_closed.detail));
    for (const auto& chk : check_leq_preorder(out.order.leq).checks) out.report.add(chk);
    return out;
}

}  // namespace ttskit
