#include "ttskit/workbench/audit.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "ttskit/associations.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/uniform.hpp"
#include "ttskit/workbench/enumerate.hpp"
#include "ttskit/workbench/generate.hpp"

namespace ttskit::workbench {

namespace {

constexpr std::size_t kKeptWitnesses = 3;

const std::vector<ClaimInfo> kClaims = {
    {"XI_TAU_TRANSITIVE", "the shared-limit relation of a topological embedding is transitive", 4, 4},
    {"XI_UPSILON_TRANSITIVE", "the relation of a uniform embedding is transitive", 4, 5},
    {"SIGMA_LAMBDA_IS_TTS", "the embedding of a convergence structure passes the axioms", 2, 3},
    {"SIGMA_P_COMPATIBLE", "the power association is a compatible structure with its order", 2, 2},
    {"SECOND_ASSOC_IFF", "compatibility with the support order iff convergent and Cauchy tokens are up-closed", 2, 2},
    {"CHAIN_INCLUSIONS", "point tokens exist, converge to their point, and convergent tokens are Cauchy", 2, 2},
    {"CONVER_EQUALS_LAMBDA", "the embedding of a convergence structure recovers its convergent filters", 3, 3},
    {"DERIVE_ROUNDTRIP", "deriving from the embedding of a topology returns the topology", 4, 4},
    {"SIGMA_TAU_CONVER", "the embedding of a topology recovers its convergent filters", 4, 4},
    {"XI_UPSILON_SEPARATED", "the separated-quotient reading of the uniform relation agrees with the plain one", 4, 5},
    {"XI_INFO_LOSS", "census: supports and closed families shared by structures with different relations", 2, 2},
};

struct Outcome {
    bool holds;
    std::string reason;
};

class Census {
public:
    explicit Census(AuditReport& r) : r_(r) {}
    void add(const Structure& s, const Outcome& o) {
        ++r_.instances;
        if (o.holds) {
            ++r_.holds;
            return;
        }
        ++r_.fails;
        if (r_.witnesses.size() < kKeptWitnesses) {
            r_.witnesses.push_back(s);
            r_.reasons.push_back(o.reason);
        }
    }

private:
    AuditReport& r_;
};

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.holds) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return {};
}

void tts_universe(int n, std::uint64_t seed, std::size_t samples, std::string& bounds,
                  const std::function<void(const Tts&)>& visit) {
    for (int c = 1; c <= n; ++c)
        for (int t = 1; t <= kMaxEnumTtsTokens; ++t)
            for_each_tts(c, t, [&](const Tts& s) {
                visit(s);
                return true;
            });
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(seed, i);
        visit(random_tts(3, rng.uniform(1, 4), rng));
    }
    bounds = "axiom-passing tts, carrier 1.." + std::to_string(n) + " tokens 1..3 (exhaustive); " +
             std::to_string(samples) + " random samples at carrier 3 tokens 1..4, seed " + std::to_string(seed);
}

void topology_universe(int n, std::string& bounds, const std::function<void(const Topology&)>& visit) {
    for (int k = 1; k <= n; ++k)
        for (const auto& t : enumerate_topologies(k)) visit(t);
    bounds = "topologies, carrier 1.." + std::to_string(n) + " (exhaustive)";
}

void convergence_universe(int n, std::uint64_t seed, std::size_t samples, std::string& bounds,
                          const std::function<void(const ConvergenceStructure&)>& visit) {
    for (int k = 1; k <= n; ++k)
        for (const auto& c : enumerate_convergence(k)) visit(c);
    bounds = "convergence structures, carrier 1.." + std::to_string(n) + " (exhaustive)";
    if (n + 1 <= 6) {
        for (std::size_t i = 0; i < samples; ++i) {
            Rng rng(seed, i);
            visit(random_convergence(n + 1, rng));
        }
        bounds += "; " + std::to_string(samples) + " random samples at carrier " + std::to_string(n + 1) + ", seed " +
                  std::to_string(seed);
    }
}

void uniformity_universe(int n, std::string& bounds, const std::function<void(const FiniteUniformity&)>& visit) {
    for (int k = 1; k <= n; ++k)
        for (const auto& u : enumerate_uniformities(k)) visit(u);
    bounds = "uniformities, carrier 1.." + std::to_string(n) + " (exhaustive)";
}

Outcome conver_matches(const Tts& s, const ConvergenceStructure& c) {
    const FilterAssignment a = c.assignment();
    for (int x = 0; x < c.carrier(); ++x) {
        const TokenSet got = conver_set(s, x);
        if (got != a.lambda[x])
            return {false, "point " + std::to_string(x) + ": recovered " + std::to_string(got.count()) +
                               " filters, expected " + std::to_string(a.lambda[x].count())};
    }
    return {true, {}};
}

}  // namespace

const std::vector<ClaimInfo>& claims() { return kClaims; }

AuditReport claim_audit(const std::string& claim_in, int n, std::uint64_t seed, std::size_t samples) {
    const std::string claim = claim_in == "CHAIN_26" ? "CHAIN_INCLUSIONS" : claim_in;
    const ClaimInfo* info = nullptr;
    for (const auto& c : kClaims)
        if (c.id == claim) info = &c;
    if (!info) throw InputError("unknown claim \"" + claim_in + "\"");
    if (n == 0) n = info->default_n;
    if (n < 1) throw InputError("bound must be positive");
    if (n > info->max_n) throw CapExceeded(claim + " audits carriers up to " + std::to_string(info->max_n));

    AuditReport r;
    r.claim = claim;
    r.statement = info->statement;
    Census census(r);

    if (claim == "XI_TAU_TRANSITIVE") {
        topology_universe(n, r.bounds, [&](const Topology& t) {
            const Check c = relation_transitivity(build_sigma_tau(t).structure.tts);
            census.add(t, {c.holds, c.detail});
        });
    } else if (claim == "XI_UPSILON_TRANSITIVE") {
        uniformity_universe(n, r.bounds, [&](const FiniteUniformity& u) {
            const Check c = relation_transitivity(build_sigma_upsilon(u).structure.tts);
            census.add(u, {c.holds, c.detail});
        });
    } else if (claim == "XI_UPSILON_SEPARATED") {
        uniformity_universe(n, r.bounds, [&](const FiniteUniformity& u) {
            const Report rep = build_sigma_upsilon(u).report;
            const Check* c = rep.find("separated_reading_agrees");
            census.add(u, {c->holds, c->detail});
        });
    } else if (claim == "SIGMA_LAMBDA_IS_TTS") {
        convergence_universe(n, seed, samples, r.bounds, [&](const ConvergenceStructure& c) {
            const Report rep = check_axioms(embed_convergence_ttsr(c));
            census.add(c.assignment(), {rep.ok(), first_failure(rep)});
        });
    } else if (claim == "CONVER_EQUALS_LAMBDA") {
        convergence_universe(n, seed, samples, r.bounds, [&](const ConvergenceStructure& c) {
            census.add(c.assignment(), conver_matches(embed_convergence(c), c));
        });
        r.note = "the recovered filters at x are those converging to some point whose kernel contains x";
    } else if (claim == "SIGMA_TAU_CONVER") {
        topology_universe(n, r.bounds, [&](const Topology& t) {
            const ConvergenceStructure c = topology_to_convergence(t);
            census.add(t, conver_matches(embed_convergence(c), c));
        });
    } else if (claim == "DERIVE_ROUNDTRIP") {
        topology_universe(n, r.bounds, [&](const Topology& t) {
            const SigmaTau st = build_sigma_tau(t);
            const DerivedTopology d = derive_topology(st.structure.tts, st.structure.leq);
            if (!d.derived) {
                census.add(t, {false, "not strongly compatible"});
                return;
            }
            std::string opens;
            for (Mask o : d.topology.opens) opens += render_mask(o);
            census.add(t, {d.topology == t, "derived opens " + opens});
        });
    } else if (claim == "SIGMA_P_COMPATIBLE") {
        tts_universe(n, seed, samples, r.bounds, [&](const Tts& s) {
            const PowerAssociation p = power_association(s);
            Report rep = p.compatibility.as_report();
            rep.append(check_axioms(p.result));
            census.add(s, {rep.ok(), first_failure(rep)});
        });
    } else if (claim == "SECOND_ASSOC_IFF") {
        tts_universe(n, seed, samples, r.bounds, [&](const Tts& s) {
            const SecondAssociation sa = check_second_association(s);
            const bool iff = sa.report.holds("compatible_implies_conditions") && sa.report.holds("conditions_imply_compatible");
            census.add(s, {iff, first_failure(sa.report)});
        });
    } else if (claim == "CHAIN_INCLUSIONS") {
        tts_universe(n, seed, samples, r.bounds, [&](const Tts& s) {
            const Report rep = check_chain(s);
            census.add(s, {rep.ok(), first_failure(rep)});
        });
    } else if (claim == "XI_INFO_LOSS") {
        std::map<std::string, std::vector<Tts>> groups;
        for (int c = 1; c <= n; ++c)
            for (int t = 1; t <= 2; ++t)
                for_each_tts(c, t, [&](const Tts& s) {
                    std::ostringstream key;
                    key << c << ':' << t << ':';
                    for (const auto& row : s.table) key << render_tokens(row);
                    key << ':';
                    for (Mask m : closed_sets(s)) key << m << ',';
                    groups[key.str()].push_back(s);
                    return true;
                });
        for (const auto& [key, members] : groups) {
            const bool single = members.size() == 1;
            census.add(members.front(), {single, std::to_string(members.size()) + " relations share this support and closed family"});
        }
        r.bounds = "groups of axiom-passing tts by support and closed family, carrier 1.." + std::to_string(n) +
                   " tokens 1..2 (exhaustive)";
        r.note = "census only: a failing group is evidence that the closed family forgets the relation";
    }
    return r;
}

std::string render_text(const AuditReport& r) {
    std::ostringstream os;
    os << "audit " << r.claim << '\n';
    os << "statement: " << r.statement << '\n';
    os << "universe: " << r.bounds << '\n';
    os << "instances: " << r.instances << "  holds: " << r.holds << "  fails: " << r.fails << '\n';
    if (!r.note.empty()) os << "note: " << r.note << '\n';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        os << "counterexample " << i + 1 << ": " << r.reasons[i] << '\n';
        os << serialize(r.witnesses[i]);
    }
    return os.str();
}

Json audit_json(const AuditReport& r) {
    Json j;
    j["claim"] = r.claim;
    j["statement"] = r.statement;
    j["universe"] = r.bounds;
    j["instances"] = r.instances;
    j["holds"] = r.holds;
    j["fails"] = r.fails;
    if (!r.note.empty()) j["note"] = r.note;
    Json w = Json::array();
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        Json e;
        e["reason"] = r.reasons[i];
        e["structure"] = to_json(r.witnesses[i]);
        w.push_back(e);
    }
    j["counterexamples"] = w;
    return j;
}

}  // namespace ttskit::workbench
