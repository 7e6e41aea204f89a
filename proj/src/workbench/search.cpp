#include "ttskit/workbench/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ttskit/associations.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/workbench/enumerate.hpp"
#include "ttskit/workbench/generate.hpp"

namespace ttskit::workbench {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

struct Finding {
    Structure witness;
    std::optional<Structure> partner;
    Report evidence;
};

using TtsTest = std::function<std::optional<Finding>(const Tts&)>;
using TopologyTest = std::function<std::optional<Finding>(const Topology&)>;
using ConvergenceTest = std::function<std::optional<Finding>(const ConvergenceStructure&)>;

std::string mode_tag(const SearchSpec& spec) {
    if (spec.mode == SearchMode::exhaustive) return "exhaustive";
    return std::to_string(spec.samples) + " random samples, seed " + std::to_string(spec.seed);
}

void finish(SearchResult& r, std::optional<Finding> f) {
    if (!f) return;
    r.status = SearchStatus::found;
    r.witness = std::move(f->witness);
    r.partner = std::move(f->partner);
    r.evidence = std::move(f->evidence);
}

// Exhaustive runs cover the enumerable part of the bounds.
void run_tts(SearchResult& r, const SearchSpec& spec, const TtsTest& test) {
    if (spec.mode == SearchMode::exhaustive) {
        const int cmax = std::min(spec.max_carrier, 3);
        std::ostringstream u;
        u << "axiom-passing tts, ";
        bool first = true;
        for (int c = 1; c <= cmax && r.status != SearchStatus::found; ++c) {
            const int tmax = std::min(spec.max_tokens, c <= 2 ? kMaxEnumTtsTokens : 2);
            u << (first ? "" : "; ") << "carrier " << c << " tokens 1.." << tmax;
            first = false;
            for (int t = 1; t <= tmax && r.status != SearchStatus::found; ++t)
                for_each_tts(c, t, [&](const Tts& s) {
                    ++r.examined;
                    finish(r, test(s));
                    return r.status != SearchStatus::found;
                });
        }
        r.universe = u.str() + " (exhaustive)";
        return;
    }
    if (spec.max_carrier > kMaxTtsCarrier || spec.max_tokens > 64) throw CapExceeded("search bounds exceed caps");
    r.universe = "axiom-passing tts, carrier 1.." + std::to_string(spec.max_carrier) + ", tokens 1.." +
                 std::to_string(spec.max_tokens) + ", " + mode_tag(spec);
    for (std::size_t i = 0; i < spec.samples && r.status != SearchStatus::found; ++i) {
        Rng rng(spec.seed, i);
        const int c = rng.uniform(1, spec.max_carrier);
        const int t = rng.uniform(1, spec.max_tokens);
        ++r.examined;
        finish(r, test(random_tts(c, t, rng)));
    }
}

void run_topology(SearchResult& r, const SearchSpec& spec, const TopologyTest& test) {
    const int nmax = spec.max_carrier;
    if (spec.mode == SearchMode::exhaustive) {
        if (nmax > kMaxEnumTopology) throw CapExceeded("exhaustive topology search needs carrier <= 4");
        r.universe = "topologies, carrier 1.." + std::to_string(nmax) + " (exhaustive)";
        for (int n = 1; n <= nmax && r.status != SearchStatus::found; ++n)
            for (const auto& t : enumerate_topologies(n)) {
                ++r.examined;
                finish(r, test(t));
                if (r.status == SearchStatus::found) break;
            }
        return;
    }
    if (nmax > 8) throw CapExceeded("topology search needs carrier <= 8");
    r.universe = "topologies, carrier 1.." + std::to_string(nmax) + ", " + mode_tag(spec);
    for (std::size_t i = 0; i < spec.samples && r.status != SearchStatus::found; ++i) {
        Rng rng(spec.seed, i);
        ++r.examined;
        finish(r, test(random_topology(rng.uniform(1, nmax), rng)));
    }
}

void run_convergence(SearchResult& r, const SearchSpec& spec, const ConvergenceTest& test) {
    const int nmax = spec.max_carrier;
    if (spec.mode == SearchMode::exhaustive) {
        if (nmax > kMaxEnumConvergence) throw CapExceeded("exhaustive convergence search needs carrier <= 3");
        r.universe = "convergence structures, carrier 1.." + std::to_string(nmax) + " (exhaustive)";
        for (int n = 1; n <= nmax && r.status != SearchStatus::found; ++n)
            for (const auto& c : enumerate_convergence(n)) {
                ++r.examined;
                finish(r, test(c));
                if (r.status == SearchStatus::found) break;
            }
        return;
    }
    if (nmax > 8) throw CapExceeded("convergence search needs carrier <= 8");
    r.universe = "convergence structures, carrier 1.." + std::to_string(nmax) + ", " + mode_tag(spec);
    for (std::size_t i = 0; i < spec.samples && r.status != SearchStatus::found; ++i) {
        Rng rng(spec.seed, i);
        ++r.examined;
        finish(r, test(random_convergence(rng.uniform(1, nmax), rng)));
    }
}

// Smallest pair of closed sets whose union is not closed.
std::optional<std::pair<Mask, Mask>> union_failure(const Tts& s) {
    const std::vector<Mask> closed = closed_sets(s);
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (!std::binary_search(closed.begin(), closed.end(), closed[i] | closed[j]))
                return std::make_pair(closed[i], closed[j]);
    return std::nullopt;
}

std::optional<Finding> test_union(const Tts& s) {
    const auto f = union_failure(s);
    if (!f) return std::nullopt;
    Report ev;
    ev.add(fail("closed_union_closed", {ll(f->first), ll(f->second)},
                render_mask(f->first) + " and " + render_mask(f->second) + " closed, union " +
                    render_mask(f->first | f->second) + " not closed"));
    ev.append(check_axioms(s));
    return Finding{s, std::nullopt, ev};
}

std::optional<Finding> test_symmetry(const Tts& s) {
    const Report r = check_axioms(s);
    if (r.holds("symmetric")) return std::nullopt;
    return Finding{s, std::nullopt, r};
}

// Pre-orders on m tokens, leq(a, b) iff b lies in the minimal open set of a.
std::vector<BitMatrix> token_preorders(int m) {
    std::vector<BitMatrix> out;
    for (const auto& t : all_topologies(m)) {
        const auto nb = t.minimal_neighbourhoods();
        BitMatrix leq(m);
        for (int a = 0; a < m; ++a)
            for (int b : members(nb[a])) leq.set(a, b);
        out.push_back(leq);
    }
    return out;
}

bool only_xi_up_fails(const Report& r) {
    bool xi_fails = false;
    for (const auto& c : r.checks) {
        if (c.name == "xi_up_closed")
            xi_fails = !c.holds;
        else if (!c.holds)
            return false;
    }
    return xi_fails;
}

std::optional<Finding> test_monotonicity(const Ttsr& r) {
    const Report ax = check_axioms(r);
    if (!only_xi_up_fails(ax)) return std::nullopt;
    const Report mono = refine_monotonicity(r);
    if (mono.ok()) return std::nullopt;
    Report ev = ax;
    ev.append(mono);
    return Finding{r, std::nullopt, ev};
}

// Random structure closed upward under a random token pre-order.
Ttsr up_closed_sample(int carrier, int tokens, Rng& rng) {
    Tts s = random_tts(carrier, tokens, rng);
    const auto orders = token_preorders(tokens);
    BitMatrix leq = orders[rng.uniform(0, static_cast<int>(orders.size()) - 1)];
    for (auto& row : s.table) {
        TokenSet up = row;
        for (auto t = row.find_first(); t != TokenSet::npos; t = row.find_next(t)) up |= leq.row(t);
        row = up;
    }
    for (int x = 0; x < carrier; ++x) {
        const TokenSet& p = s.at(bit(x));
        for (auto a = p.find_first(); a != TokenSet::npos; a = p.find_next(a)) s.xi.row(a) |= p;
    }
    for (int a = 0; a < tokens; ++a)
        for (int b = 0; b < tokens; ++b)
            if (s.xi.test(a, b)) {
                s.xi.set(b, a);
                s.xi.set(a, a);
                s.xi.set(b, b);
            }
    return Ttsr{s, leq};
}

void run_monotonicity(SearchResult& r, const SearchSpec& spec) {
    if (spec.mode == SearchMode::exhaustive) {
        const int cmax = std::min(spec.max_carrier, kMaxEnumTtsCarrier);
        const int tmax = std::min(spec.max_tokens, kMaxEnumTtsTokens);
        r.universe = "axiom-passing tts with every token pre-order, carrier 1.." + std::to_string(cmax) +
                     ", tokens 1.." + std::to_string(tmax) + " (exhaustive)";
        for (int c = 1; c <= cmax && r.status != SearchStatus::found; ++c)
            for (int t = 1; t <= tmax && r.status != SearchStatus::found; ++t) {
                const auto orders = token_preorders(t);
                for_each_tts(c, t, [&](const Tts& s) {
                    for (const auto& leq : orders) {
                        ++r.examined;
                        finish(r, test_monotonicity(Ttsr{s, leq}));
                        if (r.status == SearchStatus::found) return false;
                    }
                    return true;
                });
            }
        return;
    }
    const int tmax = std::min(spec.max_tokens, 5);
    r.universe = "up-closed tts with a random token pre-order, carrier 1.." + std::to_string(spec.max_carrier) +
                 ", tokens 1.." + std::to_string(tmax) + ", " + mode_tag(spec);
    for (std::size_t i = 0; i < spec.samples && r.status != SearchStatus::found; ++i) {
        Rng rng(spec.seed, i);
        const int c = rng.uniform(1, spec.max_carrier);
        const int t = rng.uniform(1, tmax);
        ++r.examined;
        finish(r, test_monotonicity(up_closed_sample(c, t, rng)));
    }
}

std::optional<Finding> test_second_assoc(const Tts& s) {
    const SecondAssociation sa = check_second_association(s);
    if (sa.compatibility.conver_up_closed.holds) return std::nullopt;
    Report ev;
    ev.add(sa.compatibility.conver_up_closed);
    ev.add(sa.compatibility.cauchy_up_closed);
    ev.append(sa.report);
    return Finding{Ttsr{s, sa.order.leq}, std::nullopt, ev};
}

std::optional<Finding> test_xi_tau(const Topology& t) {
    const SigmaTau st = build_sigma_tau(t);
    if (st.transitive.holds) return std::nullopt;
    Report ev;
    ev.add(st.transitive);
    return Finding{t, std::nullopt, ev};
}

Check conver_lambda(const ConvergenceStructure& c) {
    const Tts s = embed_convergence(c);
    const FilterAssignment a = c.assignment();
    for (int x = 0; x < c.carrier(); ++x) {
        const TokenSet got = conver_set(s, x);
        if (got != a.lambda[x]) {
            const TokenSet d = got ^ a.lambda[x];
            const auto t = d.find_first();
            return fail("conver_equals_lambda", {x, ll(t)},
                        "filter up" + render_mask(token_core(static_cast<int>(t))) +
                            (got.test(t) ? " is recovered at " : " is missing at ") + std::to_string(x));
        }
    }
    return pass("conver_equals_lambda");
}

std::optional<Finding> test_conver_lambda(const ConvergenceStructure& c) {
    const Check chk = conver_lambda(c);
    if (chk.holds) return std::nullopt;
    Report ev;
    ev.add(chk);
    return Finding{c.assignment(), std::nullopt, ev};
}

std::optional<Finding> test_not_topological(const ConvergenceStructure& c) {
    if (is_topological(c)) return std::nullopt;
    Report ev;
    const Tts s = embed_convergence(c);
    for (int x = 0; x < c.carrier(); ++x)
        for (int y : members(c.kernel(x)))
            if (!is_subset(c.kernel(y), c.kernel(x)) && ev.checks.empty()) {
                const int z = members(c.kernel(y) & ~c.kernel(x)).front();
                ev.add(fail("kernels_transitive", {x, y, z},
                            "up[" + std::to_string(z) + "] converges to " + std::to_string(y) + ", up[" +
                                std::to_string(y) + "] converges to " + std::to_string(x) + ", but up[" +
                                std::to_string(z) + "] does not converge to " + std::to_string(x)));
            }
    (void)s;
    return Finding{c.assignment(), std::nullopt, ev};
}

std::optional<Finding> test_derive(const Topology& t) {
    const SigmaTau st = build_sigma_tau(t);
    const DerivedTopology d = derive_topology(st.structure.tts, st.structure.leq);
    if (d.derived && d.topology == t) return std::nullopt;
    Report ev = d.compatibility.as_report();
    if (!d.derived) {
        ev.add(fail("derived", {}, "not strongly compatible"));
    } else {
        std::string opens;
        for (Mask o : d.topology.opens) opens += render_mask(o);
        ev.add(fail("roundtrip", {}, "derived opens " + opens));
    }
    return Finding{t, std::nullopt, ev};
}

void run_info_loss(SearchResult& r, const SearchSpec& spec) {
    std::map<std::string, Tts> first;
    auto test = [&](const Tts& s) -> std::optional<Finding> {
        std::ostringstream key;
        key << s.carrier << ':' << s.tokens << ':';
        for (const auto& row : s.table) key << render_tokens(row);
        key << ':';
        for (Mask c : closed_sets(s)) key << c << ',';
        auto [it, fresh] = first.emplace(key.str(), s);
        if (fresh || it->second.xi == s.xi) return std::nullopt;
        Report ev;
        ev.add(pass("same_support"));
        ev.add(pass("same_closed_sets"));
        ev.add(fail("same_relation", {}, "relations differ"));
        return Finding{it->second, s, ev};
    };
    run_tts(r, spec, test);
}

const std::vector<PropertyInfo> kProperties = {
    {"union-of-closed-not-closed", "tts whose closed sets are not closed under finite unions"},
    {"symmetry-fails", "axiom-passing tts with a non-symmetric relation (impossible)"},
    {"not-topological", "convergence structure not induced by its topology"},
    {"monotonicity-without-tts4", "ttsr failing only the relation up-closure axiom whose Cauchy or convergent tokens are not up-closed"},
    {"second-assoc-conver-fails", "tts whose convergent tokens are not up-closed under the support order"},
    {"xi-tau-intransitive", "topology whose shared-limit relation is not transitive"},
    {"conver-not-lambda", "convergence structure whose embedding recovers different convergent filters"},
    {"derive-roundtrip-fails", "topology not recovered by deriving from its embedding"},
    {"xi-info-loss", "two tts with equal support and closed sets but different relations"},
};

}  // namespace

const std::vector<PropertyInfo>& search_properties() { return kProperties; }

SearchResult search(const SearchSpec& spec) {
    if (spec.max_carrier < 1 || spec.max_tokens < 1) throw InputError("bounds must be positive");
    SearchResult r;
    r.property = spec.property;
    const std::string& p = spec.property;
    if (p == "union-of-closed-not-closed")
        run_tts(r, spec, test_union);
    else if (p == "symmetry-fails")
        run_tts(r, spec, test_symmetry);
    else if (p == "not-topological")
        run_convergence(r, spec, test_not_topological);
    else if (p == "monotonicity-without-tts4")
        run_monotonicity(r, spec);
    else if (p == "second-assoc-conver-fails")
        run_tts(r, spec, test_second_assoc);
    else if (p == "xi-tau-intransitive")
        run_topology(r, spec, test_xi_tau);
    else if (p == "conver-not-lambda")
        run_convergence(r, spec, test_conver_lambda);
    else if (p == "derive-roundtrip-fails")
        run_topology(r, spec, test_derive);
    else if (p == "xi-info-loss")
        run_info_loss(r, spec);
    else
        throw InputError("unknown property \"" + p + "\"");
    if (r.status == SearchStatus::found) r.revalidated = revalidate(p, *r.witness, r.partner);
    return r;
}

bool revalidate(const std::string& p, const Structure& w, const std::optional<Structure>& partner) {
    if (p == "union-of-closed-not-closed" || p == "symmetry-fails" || p == "xi-info-loss") {
        if (!std::holds_alternative<Tts>(w)) return false;
        const Tts& s = std::get<Tts>(w);
        const Report ax = check_axioms(s);
        if (p == "symmetry-fails") return !ax.holds("symmetric");
        if (!ax.ok()) return false;
        if (p == "union-of-closed-not-closed") {
            // Closedness straight from convergence: every token of T(A) converges only inside A.
            const auto lim = convergence_points(s);
            auto closed = [&](Mask a) {
                for (auto t = s.at(a).find_first(); t != TokenSet::npos; t = s.at(a).find_next(t))
                    if (!is_subset(lim[t], a)) return false;
                return true;
            };
            for (Mask a = 0; a <= s.full(); ++a)
                for (Mask b = 0; b <= s.full(); ++b)
                    if (closed(a) && closed(b) && !closed(a | b)) return true;
            return false;
        }
        if (!partner || !std::holds_alternative<Tts>(*partner)) return false;
        const Tts& o = std::get<Tts>(*partner);
        return check_axioms(o).ok() && o.carrier == s.carrier && o.tokens == s.tokens && o.table == s.table &&
               closed_sets(o) == closed_sets(s) && !(o.xi == s.xi);
    }
    if (p == "not-topological" || p == "conver-not-lambda") {
        if (!std::holds_alternative<FilterAssignment>(w)) return false;
        const FilterAssignment& a = std::get<FilterAssignment>(w);
        if (!check_convergence_axioms(a).ok()) return false;
        const ConvergenceStructure c = ConvergenceStructure::from_assignment(a);
        if (p == "not-topological") return !(topology_to_convergence(induced_topology(c)) == c);
        const Tts s = embed_convergence(c);
        if (!check_axioms(s).ok()) return false;
        for (int x = 0; x < c.carrier(); ++x)
            if (conver_set(s, x) != a.lambda[x]) return true;
        return false;
    }
    if (p == "monotonicity-without-tts4" || p == "second-assoc-conver-fails") {
        if (!std::holds_alternative<Ttsr>(w)) return false;
        const Ttsr& r = std::get<Ttsr>(w);
        if (p == "monotonicity-without-tts4") return only_xi_up_fails(check_axioms(r)) && !refine_monotonicity(r).ok();
        if (!check_axioms(r.tts).ok()) return false;
        const SupportOrder so = support_order(r.tts);
        return so.leq == r.leq && !check_compatibility(r.tts, so.leq).conver_up_closed.holds;
    }
    if (p == "xi-tau-intransitive" || p == "derive-roundtrip-fails") {
        if (!std::holds_alternative<Topology>(w)) return false;
        const Topology& t = std::get<Topology>(w);
        if (!check_topology(t).ok()) return false;
        const Ttsr st = embed_convergence_ttsr(topology_to_convergence(t));
        if (!check_axioms(st).ok()) return false;
        if (p == "xi-tau-intransitive") {
            const BitMatrix& xi = st.tts.xi;
            for (std::size_t a = 0; a < xi.size(); ++a)
                for (std::size_t b = 0; b < xi.size(); ++b)
                    for (std::size_t c = 0; c < xi.size(); ++c)
                        if (xi.test(a, b) && xi.test(b, c) && !xi.test(a, c)) return true;
            return false;
        }
        const DerivedTopology d = derive_topology(st.tts, st.leq);
        return !d.derived || !(d.topology == t);
    }
    return false;
}

std::string render_text(const SearchResult& r, const SearchSpec& spec) {
    std::ostringstream os;
    os << "search " << r.property << '\n';
    os << "universe: " << r.universe << '\n';
    (void)spec;
    if (r.status == SearchStatus::found) {
        os << "status: FOUND after " << r.examined << " candidates\n";
        os << "revalidated: " << (r.revalidated ? "yes" : "NO") << '\n';
        os << "evidence:\n";
        std::istringstream ev(r.evidence.to_text());
        for (std::string line; std::getline(ev, line);) os << "  " << line << '\n';
        os << "witness:\n" << serialize(*r.witness);
        if (r.partner) os << "partner:\n" << serialize(*r.partner);
    } else {
        os << "status: EXHAUSTED after " << r.examined << " candidates\n";
    }
    return os.str();
}

Json result_json(const SearchResult& r, const SearchSpec& spec) {
    Json j;
    j["property"] = r.property;
    j["universe"] = r.universe;
    j["seed"] = spec.seed;
    j["status"] = r.status == SearchStatus::found ? "FOUND" : "EXHAUSTED";
    j["examined"] = r.examined;
    if (r.status == SearchStatus::found) {
        j["revalidated"] = r.revalidated;
        j["evidence"] = report_json(r.evidence);
        j["witness"] = to_json(*r.witness);
        if (r.partner) j["partner"] = to_json(*r.partner);
    }
    return j;
}

}  // namespace ttskit::workbench
