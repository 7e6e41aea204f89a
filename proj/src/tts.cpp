#include "ttskit/tts.hpp"

#include <sstream>

#include "ttskit/error.hpp"

namespace ttskit {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

std::size_t first_of(const TokenSet& s) { return s.find_first(); }

std::string tok(const Tts& s, std::size_t t) { return s.token_name(static_cast<int>(t)); }

TokenSet difference(const TokenSet& a, const TokenSet& b) { return a - b; }

Check check_empty_maps_empty(const Tts& s) {
    const TokenSet& e = s.at(0);
    if (e.none()) return pass("empty_set_maps_empty");
    const auto t = first_of(e);
    return fail("empty_set_maps_empty", {ll(t)}, "token " + tok(s, t) + " assigned to the empty set");
}

Check check_monotone(const Tts& s) {
    const Mask all = s.full();
    // Decide on covering pairs first; scan for the smallest witness only on failure.
    bool ok = true;
    for (Mask a = 1; a <= all && ok; ++a) {
        if (s.at(a).none()) ok = false;
        for (int x = 0; x < s.carrier && ok; ++x)
            if (!(a & bit(x)) && !s.at(a).is_subset_of(s.at(a | bit(x)))) ok = false;
    }
    if (ok) return pass("monotone_nonempty");
    for (Mask a = 1; a <= all; ++a) {
        if (s.at(a).none())
            return fail("monotone_nonempty", {ll(a)}, "T(" + render_mask(a) + ") is empty");
        for (Mask b = a; b <= all; ++b) {
            if (!is_subset(a, b)) continue;
            const TokenSet d = difference(s.at(a), s.at(b));
            if (d.any()) {
                const auto t = first_of(d);
                return fail("monotone_nonempty", {ll(a), ll(b), ll(t)},
                            "token " + tok(s, t) + " in T(" + render_mask(a) + ") but not T(" + render_mask(b) + ")");
            }
        }
    }
    return pass("monotone_nonempty");
}

Check check_full_covers(const Tts& s) {
    TokenSet missing = s.at(s.full());
    missing.flip();
    if (missing.none()) return pass("full_set_covers_tokens");
    const auto t = first_of(missing);
    return fail("full_set_covers_tokens", {ll(t)}, "token " + tok(s, t) + " missing from T(E)");
}

Check check_point_tokens_related(const Tts& s) {
    for (int x = 0; x < s.carrier; ++x) {
        const TokenSet& p = s.at(bit(x));
        for (auto a = p.find_first(); a != TokenSet::npos; a = p.find_next(a)) {
            const TokenSet d = difference(p, s.xi.row(a));
            if (d.any()) {
                const auto b = first_of(d);
                return fail("point_tokens_related", {x, ll(a), ll(b)},
                            "tokens " + tok(s, a) + "," + tok(s, b) + " based at " + std::to_string(x) + " are not related");
            }
        }
    }
    return pass("point_tokens_related");
}

Check check_symmetric(const Tts& s) {
    for (std::size_t a = 0; a < s.xi.size(); ++a)
        for (auto b = s.xi.row(a).find_first(); b != TokenSet::npos; b = s.xi.row(a).find_next(b))
            if (!s.xi.test(b, a))
                return fail("symmetric", {ll(a), ll(b)}, "(" + tok(s, a) + "," + tok(s, b) + ") without its reverse");
    return pass("symmetric");
}

Check check_diagonal_closed(const Tts& s) {
    for (std::size_t a = 0; a < s.xi.size(); ++a)
        if (s.xi.row(a).any() && !s.xi.test(a, a)) {
            const auto b = first_of(s.xi.row(a));
            return fail("diagonal_closed", {ll(a), ll(b)},
                        tok(s, a) + " related to " + tok(s, b) + " but not to itself");
        }
    return pass("diagonal_closed");
}

Check check_T_up_closed(const Tts& s, const BitMatrix& leq) {
    const Mask all = s.full();
    for (Mask a = 0; a <= all; ++a) {
        const TokenSet& ta = s.at(a);
        for (auto x = ta.find_first(); x != TokenSet::npos; x = ta.find_next(x)) {
            const TokenSet d = difference(leq.row(x), ta);
            if (d.any()) {
                const auto y = first_of(d);
                return fail("T_up_closed", {ll(a), ll(x), ll(y)},
                            tok(s, x) + " in T(" + render_mask(a) + "), " + tok(s, x) + "<=" + tok(s, y) +
                                " but " + tok(s, y) + " not in T(" + render_mask(a) + ")");
            }
        }
    }
    return pass("T_up_closed");
}

Check check_xi_up_closed(const Tts& s, const BitMatrix& leq) {
    const std::size_t m = s.xi.size();
    for (std::size_t x = 0; x < m; ++x)
        for (auto y = s.xi.row(x).find_first(); y != TokenSet::npos; y = s.xi.row(x).find_next(y))
            for (auto u = leq.row(x).find_first(); u != TokenSet::npos; u = leq.row(x).find_next(u)) {
                const TokenSet d = difference(leq.row(y), s.xi.row(u));
                if (d.any()) {
                    const auto v = first_of(d);
                    std::ostringstream os;
                    os << tok(s, x) << " xi " << tok(s, y) << ", " << tok(s, x) << "<=" << tok(s, u) << ", "
                       << tok(s, y) << "<=" << tok(s, v) << " but not " << tok(s, u) << " xi " << tok(s, v);
                    return fail("xi_up_closed", {ll(x), ll(y), ll(u), ll(v)}, os.str());
                }
            }
    return pass("xi_up_closed");
}

}  // namespace

Tts Tts::blank(int carrier, int tokens) {
    if (carrier < 1) throw InputError("carrier size must be positive");
    if (carrier > kMaxTtsCarrier) throw CapExceeded("structure carrier exceeds 12 points");
    if (tokens < 1) throw InputError("token set must be nonempty");
    Tts s;
    s.carrier = carrier;
    s.tokens = tokens;
    s.table.assign(std::size_t{1} << carrier, TokenSet(tokens));
    s.xi = BitMatrix(tokens);
    return s;
}

std::string Tts::token_name(int t) const {
    if (t >= 0 && t < static_cast<int>(names.size()) && !names[t].empty()) return names[t];
    return "#" + std::to_string(t);
}

void validate_shape(const Tts& s) {
    if (s.carrier < 1) throw InputError("carrier size must be positive");
    if (s.carrier > kMaxTtsCarrier) throw CapExceeded("structure carrier exceeds 12 points");
    if (s.tokens < 1) throw InputError("token set must be nonempty");
    if (s.table.size() != (std::size_t{1} << s.carrier)) throw InputError("incomplete T table");
    for (const auto& t : s.table)
        if (t.size() != static_cast<std::size_t>(s.tokens)) throw InputError("T table row has wrong token width");
    if (s.xi.size() != static_cast<std::size_t>(s.tokens)) throw InputError("Cauchy relation has wrong size");
    for (std::size_t i = 0; i < s.xi.size(); ++i)
        if (s.xi.row(i).size() != static_cast<std::size_t>(s.tokens)) throw InputError("Cauchy relation has wrong size");
}

void validate_shape(const Ttsr& s) {
    validate_shape(s.tts);
    if (s.leq.size() != static_cast<std::size_t>(s.tts.tokens)) throw InputError("token order has wrong size");
    for (std::size_t i = 0; i < s.leq.size(); ++i)
        if (s.leq.row(i).size() != static_cast<std::size_t>(s.tts.tokens)) throw InputError("token order has wrong size");
}

Report check_axioms(const Tts& s) {
    validate_shape(s);
    Report r;
    r.add(check_empty_maps_empty(s));
    r.add(check_monotone(s));
    r.add(check_full_covers(s));
    r.add(check_point_tokens_related(s));
    r.add(check_symmetric(s));
    r.add(check_diagonal_closed(s));
    return r;
}

Report check_leq_preorder(const BitMatrix& leq) {
    Report r;
    Check refl = pass("leq_reflexive");
    for (std::size_t a = 0; a < leq.size(); ++a)
        if (!leq.test(a, a)) {
            refl = fail("leq_reflexive", {ll(a)}, "#" + std::to_string(a) + " not below itself");
            break;
        }
    r.add(refl);
    Check trans = pass("leq_transitive");
    for (std::size_t a = 0; a < leq.size() && trans.holds; ++a)
        for (auto b = leq.row(a).find_first(); b != TokenSet::npos; b = leq.row(a).find_next(b)) {
            const TokenSet d = difference(leq.row(b), leq.row(a));
            if (d.any()) {
                const auto c = first_of(d);
                std::ostringstream os;
                os << '#' << a << "<=#" << b << "<=#" << c << " but not #" << a << "<=#" << c;
                trans = fail("leq_transitive", {ll(a), ll(b), ll(c)}, os.str());
                break;
            }
        }
    r.add(trans);
    return r;
}

Report check_axioms(const Ttsr& s) {
    validate_shape(s);
    Report r = check_axioms(s.tts);
    r.append(check_leq_preorder(s.leq));
    r.add(check_T_up_closed(s.tts, s.leq));
    r.add(check_xi_up_closed(s.tts, s.leq));
    return r;
}

TokenSet cauchy_set(const Tts& s) {
    TokenSet c(s.tokens);
    for (int t = 0; t < s.tokens; ++t) c.set(t, s.xi.test(t, t));
    return c;
}

TokenSet conver_set(const Tts& s, int x) {
    if (x < 0 || x >= s.carrier) throw InputError("point out of carrier range");
    TokenSet c(s.tokens);
    const TokenSet& base = s.at(bit(x));
    for (auto t = base.find_first(); t != TokenSet::npos; t = base.find_next(t)) c |= s.xi.row(t);
    return c;
}

std::vector<Mask> convergence_points(const Tts& s) {
    std::vector<Mask> out(s.tokens, 0);
    for (int x = 0; x < s.carrier; ++x) {
        const TokenSet c = conver_set(s, x);
        for (auto t = c.find_first(); t != TokenSet::npos; t = c.find_next(t)) out[t] |= bit(x);
    }
    return out;
}

bool is_complete(const Tts& s) {
    TokenSet u(s.tokens);
    for (int x = 0; x < s.carrier; ++x) u |= conver_set(s, x);
    const TokenSet c = cauchy_set(s);
    if (!u.is_subset_of(c)) throw std::logic_error("convergent token outside the Cauchy set");
    return u == c;
}

Report check_chain(const Tts& s) {
    Report r;
    const TokenSet cauchy = cauchy_set(s);
    Check nonempty = pass("point_tokens_nonempty");
    Check based = pass("point_tokens_converge");
    Check conv = pass("convergent_are_cauchy");
    for (int x = 0; x < s.carrier; ++x) {
        const TokenSet& base = s.at(bit(x));
        const TokenSet c = conver_set(s, x);
        if (nonempty.holds && base.none())
            nonempty = fail("point_tokens_nonempty", {x}, "no token based at " + std::to_string(x));
        if (based.holds && !base.is_subset_of(c)) {
            const auto t = first_of(base - c);
            based = fail("point_tokens_converge", {x, ll(t)},
                         tok(s, t) + " based at " + std::to_string(x) + " does not converge there");
        }
        if (conv.holds && !c.is_subset_of(cauchy)) {
            const auto t = first_of(c - cauchy);
            conv = fail("convergent_are_cauchy", {x, ll(t)},
                        tok(s, t) + " converges to " + std::to_string(x) + " but is not Cauchy");
        }
    }
    r.add(nonempty);
    r.add(based);
    r.add(conv);
    return r;
}

Report refine_monotonicity(const Ttsr& s) {
    Report r;
    const TokenSet cauchy = cauchy_set(s.tts);
    Check cup = pass("cauchy_up_closed");
    for (auto a = cauchy.find_first(); a != TokenSet::npos; a = cauchy.find_next(a)) {
        const TokenSet d = s.leq.row(a) - cauchy;
        if (d.any()) {
            const auto b = first_of(d);
            cup = fail("cauchy_up_closed", {ll(a), ll(b)},
                       tok(s.tts, a) + " Cauchy, " + tok(s.tts, a) + "<=" + tok(s.tts, b) + " not Cauchy");
            break;
        }
    }
    r.add(cup);
    Check vup = pass("conver_up_closed");
    for (int x = 0; x < s.tts.carrier && vup.holds; ++x) {
        const TokenSet c = conver_set(s.tts, x);
        for (auto a = c.find_first(); a != TokenSet::npos; a = c.find_next(a)) {
            const TokenSet d = s.leq.row(a) - c;
            if (d.any()) {
                const auto b = first_of(d);
                vup = fail("conver_up_closed", {x, ll(a), ll(b)},
                           tok(s.tts, a) + " converges to " + std::to_string(x) + ", " + tok(s.tts, a) + "<=" +
                               tok(s.tts, b) + " does not");
                break;
            }
        }
    }
    r.add(vup);
    return r;
}

CauchyExtension extend_cauchy(const Tts& base, const BitMatrix& xi) {
    validate_shape(base);
    if (xi.size() != base.xi.size()) throw InputError("extension relation has wrong size");
    for (std::size_t a = 0; a < xi.size(); ++a)
        if (!base.xi.row(a).is_subset_of(xi.row(a)))
            throw InputError("extension relation does not contain the base relation");
    CauchyExtension out{base, {}};
    out.sigma.xi = xi;
    Report ax = check_axioms(out.sigma);
    for (const auto& c : ax.checks)
        if (!c.holds) throw InputError("extended structure fails " + c.name + ": " + c.detail);

    const TokenSet c0 = cauchy_set(base), c1 = cauchy_set(out.sigma);
    out.report.add(c0.is_subset_of(c1) ? pass("cauchy_grows")
                                       : fail("cauchy_grows", {ll(first_of(c0 - c1))}, "Cauchy token lost"));
    Check grows = pass("conver_grows");
    for (int x = 0; x < base.carrier; ++x) {
        const TokenSet v0 = conver_set(base, x), v1 = conver_set(out.sigma, x);
        if (!v0.is_subset_of(v1)) {
            grows = fail("conver_grows", {x, ll(first_of(v0 - v1))}, "convergent token lost at " + std::to_string(x));
            break;
        }
    }
    out.report.add(grows);
    return out;
}

std::vector<std::pair<int, int>> addable_pairs(const Tts& s) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < s.tokens; ++a)
        for (int b = a + 1; b < s.tokens; ++b) {
            if (s.xi.test(a, b)) continue;
            // Symmetric addition keeps every axiom exactly when both ends are already Cauchy.
            if (s.xi.test(a, a) && s.xi.test(b, b)) out.emplace_back(a, b);
        }
    return out;
}

Tts filter_support(int n) {
    if (n > kMaxTtsCarrier) throw CapExceeded("structure carrier exceeds 12 points");
    const Mask all = full_mask(n);
    Tts s = Tts::blank(n, static_cast<int>(all));
    for (Mask a = 1; a <= all; ++a)
        for (Mask core = a;; core = (core - 1) & a) {
            if (core == 0) break;
            s.table[a].set(filter_token(core));
        }
    s.names.reserve(all);
    for (Mask core = 1; core <= all; ++core) s.names.push_back("up" + render_mask(core));
    return s;
}

BitMatrix refinement_order(int n) {
    const Mask all = full_mask(n);
    BitMatrix leq(all);
    for (Mask a = 1; a <= all; ++a)
        for (Mask b = 1; b <= all; ++b)
            if (is_subset(b, a)) leq.set(filter_token(a), filter_token(b));
    return leq;
}

}  // namespace ttskit
