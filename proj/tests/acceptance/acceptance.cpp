#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "naive.hpp"
#include "ttskit/associations.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/foundations.hpp"
#include "ttskit/moore_smith.hpp"
#include "ttskit/tts.hpp"
#include "ttskit/uniform.hpp"
#include "ttskit/workbench/cli.hpp"
#include "ttskit/workbench/document.hpp"
#include "ttskit/workbench/enumerate.hpp"
#include "ttskit/workbench/generate.hpp"
#include "ttskit/workbench/search.hpp"

using namespace ttskit;
using namespace ttskit::workbench;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
    }
};

std::string load(const std::string& name) {
    std::ifstream in(std::string(TTSKIT_DOCUMENTS_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Mismatch counter for checker equivalence runs.
struct Agreement {
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    std::string first;

    void add(const Report& r, const naive::Verdicts& v) {
        ++instances;
        const std::string d = naive::compare(r, v);
        if (!d.empty() && mismatches++ == 0) first = d;
    }
    std::string summary(const std::string& kind) const {
        std::string s = kind + ": " + std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches";
        if (!first.empty()) s += " (first: " + first + ")";
        return s;
    }
};

std::vector<BitMatrix> all_matrices(int m) {
    std::vector<BitMatrix> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * m)); ++code) {
        BitMatrix b(m);
        for (int i = 0; i < m * m; ++i) b.set(i / m, i % m, (code >> i) & 1);
        out.push_back(b);
    }
    return out;
}

std::vector<BitMatrix> all_preorders(int m) {
    std::vector<BitMatrix> out;
    for (const auto& b : all_matrices(m))
        if (check_leq_preorder(b).ok()) out.push_back(b);
    return out;
}

Outcome criterion1() {
    Outcome o;
    const std::size_t samples = 10000;

    Agreement tts, chain;
    for (int c = 1; c <= 2; ++c)
        for (int t = 1; t <= 3; ++t)
            for_each_raw_tts(c, t, [&](const Tts& s) {
                tts.add(check_axioms(s), naive::tts_axioms(s));
                chain.add(check_chain(s), naive::chain(s));
            });
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(kSeed, i);
        const int t = rng.uniform(1, 4);
        const Tts s = rng.coin() ? raw_tts(3, t, rng) : perturb(random_tts(3, t, rng), rng);
        tts.add(check_axioms(s), naive::tts_axioms(s));
        chain.add(check_chain(s), naive::chain(s));
    }
    o.require(tts.mismatches == 0, tts.summary("tts axioms"));
    o.require(chain.mismatches == 0, chain.summary("chain"));

    Agreement ttsr, compat, prop;
    auto ttsr_case = [&](const Ttsr& r) {
        ttsr.add(check_axioms(r), naive::ttsr_axioms(r));
        const CompatibilityReport c = check_strong_compatibility(r.tts, r.leq);
        Report four;
        four.add(c.t_up_closed);
        four.add(c.conver_up_closed);
        four.add(c.cauchy_up_closed);
        four.add(*c.union_cover);
        compat.add(four, naive::compatibility(r.tts, r.leq));
        prop.add(proposition_check(r.tts, r.leq), naive::proposition(r.tts, r.leq));
    };
    for (int c = 1; c <= 2; ++c)
        for (int t = 1; t <= 2; ++t) {
            const auto mats = all_matrices(t);
            for_each_raw_tts(c, t, [&](const Tts& s) {
                for (const auto& leq : mats) ttsr_case({s, leq});
            });
        }
    const auto mats3 = all_matrices(3);
    for (int c = 1; c <= 2; ++c)
        for_each_tts(c, 3, [&](const Tts& s) {
            for (const auto& leq : mats3) ttsr_case({s, leq});
            return true;
        });
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(kSeed + 1, i);
        const int t = rng.uniform(1, 4);
        ttsr_case(rng.coin() ? raw_ttsr(3, t, rng) : random_ttsr(3, t, rng));
    }
    o.require(ttsr.mismatches == 0, ttsr.summary("ttsr axioms"));
    o.require(compat.mismatches == 0, compat.summary("strong compatibility"));
    o.require(prop.mismatches == 0, prop.summary("closed/open/neighbourhood properties"));

    Agreement conv;
    for (int n = 1; n <= 2; ++n) {
        const int filters = static_cast<int>(full_mask(n));
        const std::uint64_t per = std::uint64_t{1} << filters;
        std::uint64_t total = 1;
        for (int x = 0; x < n; ++x) total *= per;
        for (std::uint64_t code = 0; code < total; ++code) {
            FilterAssignment a{n, std::vector<TokenSet>(n, TokenSet(filters))};
            std::uint64_t c = code;
            for (int x = 0; x < n; ++x, c /= per)
                for (int f = 0; f < filters; ++f) a.lambda[x].set(f, ((c % per) >> f) & 1);
            conv.add(check_convergence_axioms(a), naive::convergence_axioms(a));
        }
    }
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(kSeed + 2, i);
        const FilterAssignment a = rng.coin() ? raw_assignment(3, rng) : perturb(random_convergence(3, rng).assignment(), rng);
        conv.add(check_convergence_axioms(a), naive::convergence_axioms(a));
    }
    o.require(conv.mismatches == 0, conv.summary("convergence axioms"));

    Agreement ucs;
    for (int n = 1; n <= 2; ++n) {
        const int rels = (1 << (n * n)) - 1;
        for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << rels); ++fam) {
            UniformConvergenceStructure u{n, {}};
            for (int r = 0; r < rels; ++r)
                if ((fam >> r) & 1) u.generators.push_back(static_cast<std::uint64_t>(r + 1));
            ucs.add(check_ucs_axioms(u), naive::ucs_axioms(u));
        }
    }
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(kSeed + 3, i);
        const UniformConvergenceStructure u = rng.coin() ? raw_ucs(3, rng) : perturb(random_ucs(3, rng), rng);
        ucs.add(check_ucs_axioms(u), naive::ucs_axioms(u));
    }
    o.require(ucs.mismatches == 0, ucs.summary("uniform convergence axioms"));

    Agreement top;
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (1 << n)); ++fam) {
            Topology t{n, {}};
            for (Mask a = 0; a <= full_mask(n); ++a)
                if ((fam >> a) & 1) t.opens.push_back(a);
            top.add(check_topology(t), naive::topology_axioms(t));
        }
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(kSeed + 4, i);
        const Topology t = rng.coin() ? raw_topology(3, rng) : perturb(random_topology(3, rng), rng);
        top.add(check_topology(t), naive::topology_axioms(t));
    }
    o.require(top.mismatches == 0, top.summary("topology axioms"));

    Agreement uni;
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t e = 0; e < (std::uint64_t{1} << (n * n)); ++e) {
            const FiniteUniformity u{n, e};
            uni.add(check_uniformity(u), naive::uniformity_axioms(u));
        }
    o.require(uni.mismatches == 0, uni.summary("uniformity axioms"));
    return o;
}

Outcome criterion2() {
    Outcome o;
    const std::vector<std::size_t> pinned = {1, 4, 29, 355};
    std::size_t roundtrip = 0, axioms = 0, complete = 0, derived = 0, total = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto tops = enumerate_topologies(n);
        const std::size_t oracle = naive::count_topologies(n);
        o.require(tops.size() == pinned[n - 1] && oracle == pinned[n - 1],
                  "topologies, n = " + std::to_string(n) + ": enumerated " + std::to_string(tops.size()) +
                      ", brute force " + std::to_string(oracle) + ", pinned " + std::to_string(pinned[n - 1]));
        for (const auto& t : tops) {
            ++total;
            roundtrip += induced_topology(topology_to_convergence(t)) == t;
            const SigmaTau st = build_sigma_tau(t);
            axioms += st.axioms.ok();
            complete += st.complete;
            const DerivedTopology d = derive_topology(st.structure.tts, st.structure.leq);
            derived += d.derived && d.topology == t;
        }
    }
    const std::string of = " of " + std::to_string(total);
    o.require(roundtrip == total, "topology -> convergence -> induced topology is the identity: " + std::to_string(roundtrip) + of);
    o.require(axioms == total, "embedding of the topology passes the structure axioms: " + std::to_string(axioms) + of);
    o.require(complete == total, "embedding of the topology is complete: " + std::to_string(complete) + of);
    o.require(derived == total, "derive with refinement order returns the topology: " + std::to_string(derived) + of);
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t strong = 0, holds = 0, examined = 0;
    auto visit = [&](const Tts& s, const BitMatrix& leq) {
        ++examined;
        if (!check_strong_compatibility(s, leq).strongly_compatible()) return;
        ++strong;
        holds += proposition_check(s, leq).ok();
    };
    for (int c = 1; c <= 2; ++c)
        for (int t = 1; t <= 3; ++t) {
            const auto orders = all_preorders(t);
            for_each_tts(c, t, [&](const Tts& s) {
                for (const auto& leq : orders) visit(s, leq);
                return true;
            });
        }
    for (int t = 1; t <= 2; ++t) {
        const auto orders = all_preorders(t);
        for_each_tts(3, t, [&](const Tts& s) {
            for (const auto& leq : orders) visit(s, leq);
            return true;
        });
    }
    for (std::size_t i = 0; i < 10000; ++i) {
        Rng rng(kSeed + 5, i);
        const Ttsr r = random_ttsr(3, rng.uniform(1, 4), rng);
        visit(r.tts, r.leq);
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_topologies(n)) {
            const SigmaTau st = build_sigma_tau(t);
            visit(st.structure.tts, st.structure.leq);
        }
    o.require(strong > 0 && holds == strong, "strongly compatible pairs with all three properties: " + std::to_string(holds) +
                                                 " of " + std::to_string(strong) + " (" + std::to_string(examined) +
                                                 " pairs examined)");

    SearchSpec spec;
    spec.property = "union-of-closed-not-closed";
    spec.max_carrier = 3;
    spec.max_tokens = 4;
    spec.seed = 1;
    const SearchResult r = search(spec);
    const bool found = r.status == SearchStatus::found && r.witness && r.revalidated;
    bool independent = false;
    if (found) {
        const Tts& w = std::get<Tts>(*r.witness);
        const auto closed = naive::closed_sets(w);
        for (auto a : closed)
            for (auto b : closed)
                if (std::find(closed.begin(), closed.end(), a | b) == closed.end()) independent = true;
    }
    o.require(found && independent, "search without the covering condition finds closed sets not closed under union (" +
                                        std::to_string(r.examined) + " candidates, re-checked by the oracle)");
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t instances = 0, power_ok = 0, iff = 0, both = 0, neither = 0;
    auto visit = [&](const Tts& s) {
        ++instances;
        const PowerAssociation p = power_association(s);
        power_ok += p.compatibility.compatible() && check_axioms(p.result).ok();
        const SecondAssociation sa = check_second_association(s);
        iff += sa.compatible == sa.conditions && sa.report.holds("compatible_implies_conditions") &&
               sa.report.holds("conditions_imply_compatible");
        both += sa.compatible && sa.conditions;
        neither += !sa.compatible && !sa.conditions;
        return true;
    };
    for (int c = 1; c <= 2; ++c)
        for (int t = 1; t <= 3; ++t) for_each_tts(c, t, visit);
    for (int t = 1; t <= 2; ++t) for_each_tts(3, t, visit);
    o.require(power_ok == instances, "power association compatible and passing the axioms: " + std::to_string(power_ok) +
                                         " of " + std::to_string(instances) + " structures with at most 3 tokens");
    o.require(iff == instances, "support order: compatible iff convergent and Cauchy tokens up-closed: " +
                                    std::to_string(iff) + " of " + std::to_string(instances) + " (both " +
                                    std::to_string(both) + ", neither " + std::to_string(neither) + ")");

    const Tts hand = std::get<Tts>(parse(load("second-association.json")));
    const SecondAssociation sa = check_second_association(hand);
    o.require(!sa.compatible && !sa.conditions && !sa.compatibility.conver_up_closed.holds &&
                  sa.report.holds("compatible_implies_conditions") && sa.report.holds("conditions_imply_compatible"),
              "constructed instance with convergent tokens not up-closed: both sides fail (" +
                  sa.compatibility.conver_up_closed.detail + ")");
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto conv2 = enumerate_convergence(2);
    o.require(conv2.size() == 4 && naive::count_convergence(2) == 4, "convergence structures on 2 points: " +
                                                                         std::to_string(conv2.size()) + ", brute force " +
                                                                         std::to_string(naive::count_convergence(2)));
    std::vector<ConvergenceStructure> conv = conv2;
    for (std::size_t i = 0; i < 1000; ++i) {
        Rng rng(kSeed + 6, i);
        conv.push_back(random_convergence(3, rng));
    }
    std::size_t lambda_ok = 0, conver_ok = 0;
    for (const auto& c : conv) {
        lambda_ok += check_axioms(embed_convergence_ttsr(c)).ok() && check_axioms(embed_convergence(c)).ok();
        const Tts s = embed_convergence(c);
        const auto oracle = naive::conver(s);
        bool eq = true;
        for (int x = 0; x < c.carrier(); ++x) {
            std::vector<int> expect;
            for (Mask core = 1; core <= full_mask(c.carrier()); ++core)
                if (c.converges(core, x)) expect.push_back(filter_token(core));
            eq = eq && oracle[x] == expect && conver_set(s, x) == c.assignment().lambda[x];
        }
        conver_ok += eq;
    }
    const std::string of = " of " + std::to_string(conv.size());
    o.require(lambda_ok == conv.size(), "convergence embeddings pass the axioms: " + std::to_string(lambda_ok) + of);

    std::vector<UniformConvergenceStructure> ucs = enumerate_ucs(2);
    const std::size_t enumerated = ucs.size();
    for (std::size_t i = 0; i < 1000; ++i) {
        Rng rng(kSeed + 7, i);
        ucs.push_back(random_ucs(3, rng));
    }
    std::size_t ucs_ok = 0;
    for (const auto& u : ucs) ucs_ok += check_ucs_axioms(u).ok() && check_axioms(embed_ucs(u)).ok();
    o.require(ucs_ok == ucs.size(), "uniform embeddings pass the axioms: " + std::to_string(ucs_ok) + " of " +
                                        std::to_string(ucs.size()) + " (" + std::to_string(enumerated) +
                                        " enumerated on 2 points)");
    o.require(conver_ok == conv.size(), "recovered convergent filters equal the structure's at every point: " +
                                            std::to_string(conver_ok) + of);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t total = 0, ok = 0;
    std::string first;
    auto visit = [&](const ConvergenceStructure& x, const ConvergenceStructure& y, const ConvergenceStructure& z) {
        ++total;
        const ExponentialReport e = exponential_check(x, y, z);
        if (e.report.ok())
            ++ok;
        else if (first.empty())
            first = e.report.to_text();
    };
    const auto two = enumerate_convergence(2);
    for (const auto& x : two)
        for (const auto& y : two)
            for (const auto& z : two) visit(x, y, z);
    const std::size_t exhaustive = total;
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng(kSeed + 8, i);
        const ConvergenceStructure x = random_convergence(3, rng);
        const ConvergenceStructure y = random_convergence(3, rng);
        const ConvergenceStructure z = random_convergence(3, rng);
        visit(x, y, z);
    }
    o.require(ok == total, "exponential law elementwise: " + std::to_string(ok) + " of " + std::to_string(total) + " triples (" +
                               std::to_string(exhaustive) + " exhaustive on 2 points)" + (first.empty() ? "" : "\n" + first));
    o.lines.push_back("  note failure of Cartesian closure for topological spaces needs infinite spaces; not reproducible here");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const MsBounds bounds;
    const std::vector<std::string> conds = {"constant_nets", "subnets", "subnet_divergence", "subnet_divergence_alt", "diagonal"};
    std::size_t classes = 0, agree = 0;
    auto alt_agrees = [&](const MsReport& r) {
        ++classes;
        agree += (r.get("subnet_divergence").verdict == r.get("subnet_divergence_alt").verdict);
    };

    std::size_t topo = 0, topo_clean = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_topologies(n)) {
            const MsReport r = check_moore_smith(class_from_topology(t), bounds);
            ++topo;
            topo_clean += !r.any_violation();
            alt_agrees(r);
        }
    o.require(topo_clean == topo, "topological classes without violations: " + std::to_string(topo_clean) + " of " +
                                      std::to_string(topo) + " (carriers 1..4)");

    std::size_t nontop = 0, nontop_caught = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : enumerate_convergence(n)) {
            const MsReport r = check_moore_smith(class_from_convergence(c), bounds);
            alt_agrees(r);
            if (is_topological(c)) continue;
            ++nontop;
            nontop_caught += r.any_violation();
        }
    o.require(nontop_caught == nontop, "non-topological convergence classes with a violation: " +
                                           std::to_string(nontop_caught) + " of " + std::to_string(nontop));

    auto synthetic = [&](const ConvergenceClass& s, const std::string& cond) {
        const MsReport r = check_moore_smith(s, bounds);
        alt_agrees(r);
        const MsCondition& c = r.get(cond);
        const bool ok = c.verdict == Verdict::violated && c.witness && c.revalidated && revalidate(s, bounds, c);
        o.require(ok, s.name + " on " + std::to_string(s.carrier) + " points: " + cond + " violated with a re-validated witness" + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    };
    synthetic(class_eventually_constant_min_size(2, 2), "constant_nets");
    synthetic(class_eventually_constant_min_size(3, 2), "constant_nets");
    synthetic(class_value_at_index(2, 0), "subnets");
    synthetic(class_value_at_index(3, 0), "subnets");
    synthetic(class_eventually_constant_max_size(2, 2), "subnets");
    o.require(agree == classes, "both divergence forms agree: " + std::to_string(agree) + " of " + std::to_string(classes) + " classes");
    o.lines.push_back("  note almost-everywhere convergence needs a non-atomic measure space; not finitely representable");
    return o;
}

Outcome criterion8() {
    Outcome o;
    const std::vector<std::size_t> bell = {1, 2, 5, 15};
    std::size_t total = 0, cauchy_ok = 0, complete = 0, same_xi = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto us = enumerate_uniformities(n);
        o.require(us.size() == bell[n - 1] && naive::count_equivalences(n) == bell[n - 1],
                  "equivalence relations, n = " + std::to_string(n) + ": " + std::to_string(us.size()) +
                      ", brute force " + std::to_string(naive::count_equivalences(n)));
        for (const auto& u : us) {
            ++total;
            const SigmaUpsilon su = build_sigma_upsilon(u);
            const Tts& s = su.structure.tts;
            TokenSet expect(s.tokens);
            for (Mask core = 1; core <= full_mask(n); ++core) {
                bool inside = true;
                for (int x : members(core))
                    for (int y : members(core)) inside = inside && ((u.entourage >> (x * n + y)) & 1);
                expect.set(filter_token(core), inside);
            }
            cauchy_ok += cauchy_set(s) == expect;
            complete += is_complete(s);
            same_xi += embed_ucs(ucs_from_uniformity(u)).xi == s.xi;
        }
    }
    const std::string of = " of " + std::to_string(total);
    o.require(cauchy_ok == total, "Cauchy tokens are the filters with a core square inside the entourage: " + std::to_string(cauchy_ok) + of);
    o.require(complete == total, "uniform embedding complete: " + std::to_string(complete) + of);
    o.require(same_xi == total, "embedding of the generated uniform convergence structure has the same relation: " +
                                    std::to_string(same_xi) + of);
    return o;
}

Outcome criterion9() {
    Outcome o;
    const Report one = group_axiom_audit(GroupTable::cyclic(1));
    o.require(one.ok(), "one-element group: filters form a group");
    for (int n : {2, 3}) {
        const Report r = group_axiom_audit(GroupTable::cyclic(n));
        const Check* inv = r.find("inverses");
        o.require(!r.ok() && inv && !inv->holds && !inv->witness.empty(),
                  "cyclic group of order " + std::to_string(n) + ": inverse axiom fails (" + (inv ? inv->detail : "") + ")");
    }
    return o;
}

Outcome criterion10() {
    Outcome o;
    const std::string d = TTSKIT_DOCUMENTS_DIR;
    const std::vector<std::vector<std::string>> commands = {
        {"check", d + "/sierpinski.json"},
        {"check", d + "/closed-union-not-closed.json", "--format", "json"},
        {"derive", d + "/union-cover-failure.json"},
        {"derive", d + "/sierpinski.json", "--format", "json"},
        {"embed", d + "/chain-convergence.json"},
        {"embed", d + "/partition-uniformity.json", "--format", "json"},
        {"audit", "SIGMA_P_COMPATIBLE", "--seed", "7", "--samples", "200"},
        {"audit", "CONVER_EQUALS_LAMBDA", "--seed", "7", "--format", "json"},
        {"search", "union-of-closed-not-closed", "--seed", "3"},
        {"search", "not-topological", "--seed", "5", "--format", "json"},
        {"search", "symmetry-fails", "--exhaustive", "--max-carrier", "2", "--max-tokens", "2"},
        {"enumerate", "topology", "--n", "3"},
        {"enumerate", "tts", "--n", "2", "--tokens", "2", "--count-only", "--format", "json"},
        {"ms-check", d + "/class-min-size.json"},
        {"ms-check", d + "/class-sierpinski.json", "--format", "json"},
        {"list"},
    };
    for (const auto& args : commands) {
        std::ostringstream out1, err1, out2, err2;
        const int c1 = cli::run(args, out1, err1);
        const int c2 = cli::run(args, out2, err2);
        std::string joined;
        for (const auto& a : args) joined += (joined.empty() ? "" : " ") + (a.rfind(d, 0) == 0 ? a.substr(d.size() + 1) : a);
        o.require(c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str() && !out1.str().empty(),
                  joined + " -> exit " + std::to_string(c1) + ", " + std::to_string(out1.str().size()) + " bytes");
    }
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    bool verbose = false;
    app.add_option("--criterion", only, "Run one criterion (1-10); default all");
    app.add_flag("--verbose", verbose, "Show each sub-check");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "optimized checkers agree with direct-quantifier checkers", 60, criterion1},
        {2, "topology round trips on 1..4 points", 120, criterion2},
        {3, "strong compatibility properties; union failure without covering", 60, criterion3},
        {4, "power and support-order associations", 60, criterion4},
        {5, "convergence and uniform embeddings", 60, criterion5},
        {6, "exponential law for convergence structures", 120, criterion6},
        {7, "Moore-Smith conditions on bounded universes", 120, criterion7},
        {8, "uniform embeddings of equivalence relations", 30, criterion8},
        {9, "group operation on filters", 1, criterion9},
        {10, "byte-identical command output across runs", 60, criterion10},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.pass && in_time;
        all_pass = all_pass && pass;
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(2);
        t << secs;
        std::cout << "criterion " << c.id << ' ' << (pass ? "PASS" : "FAIL") << ": " << c.title << " [" << t.str()
                  << " s, budget " << c.budget_s << " s]\n";
        if (verbose || !pass)
            for (const auto& l : o.lines) std::cout << l << '\n';
        if (!in_time) std::cout << "  FAIL over time budget\n";
    }
    return all_pass ? 0 : 1;
}
