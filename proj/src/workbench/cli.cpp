#include "ttskit/workbench/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ttskit/associations.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/moore_smith.hpp"
#include "ttskit/uniform.hpp"
#include "ttskit/workbench/audit.hpp"
#include "ttskit/workbench/document.hpp"
#include "ttskit/workbench/enumerate.hpp"
#include "ttskit/workbench/search.hpp"

namespace ttskit::cli {

namespace {

using namespace ttskit::workbench;

struct Options {
    std::string format = "text";
    std::string file;
    std::string name;
    int n = 0;
    int tokens = 0;
    bool count_only = false;
    bool exhaustive = false;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    int max_carrier = 3;
    int max_tokens = 4;
    int token_cap = kDefaultPowerTokenCap;
    int bound = 3;
    int diag = 2;
    std::string subnets = "willard";
    std::string order = "support";
    bool report = false;
};

std::string read_input(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    os << in.rdbuf();
    return os.str();
}

bool json_out(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
    if (json_out(o))
        out << j.dump(2) << '\n';
    else
        out << text;
}

std::string indent(const std::string& text) {
    std::istringstream in(text);
    std::string out;
    for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
    return out;
}

std::string masks(const std::vector<Mask>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + render_mask(v[i]);
    return out;
}

Json mask_json(const std::vector<Mask>& v) {
    Json a = Json::array();
    for (Mask m : v) {
        Json s = Json::array();
        for (int x : members(m)) s.push_back(x);
        a.push_back(s);
    }
    return a;
}

Report check_structure(const Structure& s) {
    Report r;
    if (auto* t = std::get_if<Topology>(&s)) return check_topology(*t);
    if (auto* a = std::get_if<FilterAssignment>(&s)) return check_convergence_axioms(*a);
    if (auto* u = std::get_if<UniformConvergenceStructure>(&s)) return check_ucs_axioms(*u);
    if (auto* u = std::get_if<FiniteUniformity>(&s)) return check_uniformity(*u);
    if (auto* t = std::get_if<Tts>(&s)) {
        r = check_axioms(*t);
        if (r.ok()) {
            r.append(check_chain(*t), "chain.");
            r.append(closure_law_audit(*t), "closure.");
        }
        return r;
    }
    if (auto* t = std::get_if<Ttsr>(&s)) {
        r = check_axioms(*t);
        if (r.ok()) r.append(refine_monotonicity(*t), "monotonicity.");
        return r;
    }
    const auto& spec = std::get<NetClassSpec>(s);
    make_class(spec);
    r.add(pass("class_valid"));
    return r;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Structure s = parse(read_input(o.file));
    const Report r = check_structure(s);
    Json j;
    j["kind"] = kind_name(s);
    j["ok"] = r.ok();
    j["checks"] = report_json(r);
    emit(out, o, j, "check " + kind_name(s) + "\n" + r.to_text() + (r.ok() ? "result: pass\n" : "result: FAIL\n"));
    return r.ok() ? kPass : kViolation;
}

int cmd_derive(const Options& o, std::ostream& out) {
    const Structure s = parse(read_input(o.file));
    Ttsr target;
    std::string source;
    if (auto* r = std::get_if<Ttsr>(&s)) {
        target = *r;
        source = "given order";
    } else if (auto* t = std::get_if<Tts>(&s)) {
        target.tts = *t;
        if (o.order == "support") {
            target.leq = support_order(*t).leq;
            source = "support order";
        } else if (o.order == "equality") {
            target.leq = BitMatrix::identity(t->tokens);
            source = "equality order";
        } else {
            throw InputError("order must be support or equality");
        }
    } else if (auto* t = std::get_if<Topology>(&s)) {
        const Report tr = check_topology(*t);
        if (!tr.ok()) throw InputError("not a topology: " + tr.to_text());
        target = embed_convergence_ttsr(topology_to_convergence(*t));
        source = "topological embedding with refinement order";
    } else if (auto* a = std::get_if<FilterAssignment>(&s)) {
        target = embed_convergence_ttsr(ConvergenceStructure::from_assignment(*a));
        source = "convergence embedding with refinement order";
    } else {
        throw InputError("derive needs a tts, ttsr, topology or convergence document");
    }
    validate_shape(target);
    const DerivedTopology d = derive_topology(target.tts, target.leq);
    const Report comp = d.compatibility.as_report();

    std::ostringstream os;
    os << "derive (" << source << ")\n";
    os << "compatibility:\n" << indent(comp.to_text());
    Json j;
    j["order"] = source;
    j["compatibility"] = report_json(comp);
    j["derived"] = d.derived;
    if (d.derived) {
        os << "opens: " << masks(d.topology.opens) << '\n';
        os << "closed: " << masks(d.closed) << '\n';
        os << "minimal neighbourhoods: " << masks(d.minimal_neighbourhoods) << '\n';
        os << "self check:\n" << indent(d.self_check.to_text());
        if (auto* t = std::get_if<Topology>(&s))
            os << "roundtrip: " << (d.topology == *t ? "identity" : "DIFFERS") << '\n';
        j["topology"] = to_json(d.topology);
        j["closed"] = mask_json(d.closed);
        j["minimal_neighbourhoods"] = mask_json(d.minimal_neighbourhoods);
        j["self_check"] = report_json(d.self_check);
        if (auto* t = std::get_if<Topology>(&s)) j["roundtrip"] = d.topology == *t;
    } else {
        os << "result: not strongly compatible, no topology derived\n";
    }
    emit(out, o, j, os.str());
    return d.derived ? kPass : kViolation;
}

int cmd_embed(const Options& o, std::ostream& out) {
    const Structure s = parse(read_input(o.file));
    Structure result;
    Report rep;
    // Findings reported alongside the axioms without affecting the exit code.
    Report findings;
    if (auto* a = std::get_if<FilterAssignment>(&s)) {
        const Ttsr r = embed_convergence_ttsr(ConvergenceStructure::from_assignment(*a));
        rep = check_axioms(r);
        result = r;
    } else if (auto* t = std::get_if<Topology>(&s)) {
        const Report tr = check_topology(*t);
        if (!tr.ok()) throw InputError("not a topology: " + tr.to_text());
        const SigmaTau st = build_sigma_tau(*t);
        rep = st.axioms;
        rep.add(st.complete ? pass("complete") : fail("complete", {}, "a Cauchy token does not converge"));
        findings.add(st.transitive);
        result = st.structure;
    } else if (auto* u = std::get_if<UniformConvergenceStructure>(&s)) {
        const Report ur = check_ucs_axioms(*u);
        if (!ur.ok()) throw InputError("not a uniform convergence structure: " + ur.to_text());
        const Tts e = embed_ucs(*u);
        rep = check_axioms(e);
        result = e;
    } else if (auto* u = std::get_if<FiniteUniformity>(&s)) {
        const Report ur = check_uniformity(*u);
        if (!ur.ok()) throw InputError("entourage is not an equivalence relation: " + ur.to_text());
        const SigmaUpsilon su = build_sigma_upsilon(*u);
        rep = su.report;
        result = su.structure;
    } else if (auto* t = std::get_if<Tts>(&s)) {
        const PowerAssociation p = power_association(*t, o.token_cap);
        rep = p.report;
        rep.append(p.compatibility.as_report(), "compatibility.");
        result = p.result;
    } else {
        throw InputError("embed needs a convergence, topology, ucs, uniformity or tts document");
    }
    Json j;
    j["structure"] = to_json(result);
    j["checks"] = report_json(rep);
    j["findings"] = report_json(findings);
    std::string text = serialize(result);
    if (o.report) text += rep.to_text() + findings.to_text();
    emit(out, o, j, text);
    return rep.ok() ? kPass : kViolation;
}

int cmd_audit(const Options& o, std::ostream& out) {
    const AuditReport r = claim_audit(o.name, o.n, o.seed, o.samples == 0 ? 2000 : o.samples);
    emit(out, o, audit_json(r), render_text(r));
    return r.fails == 0 ? kPass : kViolation;
}

int cmd_search(const Options& o, std::ostream& out) {
    SearchSpec spec;
    spec.property = o.name;
    spec.seed = o.seed;
    spec.mode = o.exhaustive ? SearchMode::exhaustive : SearchMode::random;
    spec.max_carrier = o.max_carrier;
    spec.max_tokens = o.max_tokens;
    if (o.samples) spec.samples = o.samples;
    const SearchResult r = search(spec);
    emit(out, o, result_json(r, spec), render_text(r, spec));
    return r.status == SearchStatus::found ? kViolation : kPass;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.n < 1) throw InputError("--n must be positive");
    const Enumeration e = enumerate(o.name, o.n, o.tokens, o.count_only);
    Json j;
    j["kind"] = e.kind;
    j["n"] = e.n;
    if (e.kind == "tts") j["tokens"] = e.tokens;
    j["count"] = e.count;
    std::ostringstream os;
    os << "enumerate " << e.kind << " n=" << e.n;
    if (e.kind == "tts") os << " tokens=" << e.tokens;
    os << "\ncount: " << e.count << '\n';
    if (!o.count_only) {
        Json items = Json::array();
        for (const auto& s : e.items) {
            items.push_back(to_json(s));
            os << to_json(s).dump() << '\n';
        }
        for (const auto& p : e.preorders) {
            items.push_back(mask_json(p));
            os << "up sets: " << masks(p) << '\n';
        }
        j["items"] = items;
    }
    emit(out, o, j, os.str());
    return kPass;
}

const char* verdict_name(Verdict v) { return v == Verdict::violated ? "VIOLATED" : "NO-VIOLATION-UP-TO-BOUND"; }

int cmd_ms_check(const Options& o, std::ostream& out) {
    const Structure s = parse(read_input(o.file));
    const auto* spec = std::get_if<NetClassSpec>(&s);
    if (!spec) throw InputError("ms-check needs a net-class document");
    const ConvergenceClass cls = make_class(*spec);
    MsBounds b;
    b.index_size = o.bound;
    b.diag = o.diag;
    if (o.subnets == "willard")
        b.subnets = SubnetKind::willard;
    else if (o.subnets == "kelley")
        b.subnets = SubnetKind::kelley;
    else
        throw InputError("subnets must be willard or kelley");
    const MsReport r = check_moore_smith(cls, b);
    const Report summary = r.as_report();

    std::ostringstream os;
    os << "ms-check " << spec->rule << " carrier " << spec->carrier << '\n';
    os << "bounds: index size <= " << b.index_size << ", frame size <= " << b.diag << ", " << o.subnets << " subnets\n";
    os << "nets: " << r.nets_examined << "  frames: " << r.frames_examined << '\n';
    Json j;
    j["rule"] = spec->rule;
    j["carrier"] = spec->carrier;
    j["bounds"] = {{"index_size", b.index_size}, {"diag", b.diag}, {"subnets", o.subnets}};
    j["nets"] = r.nets_examined;
    j["frames"] = r.frames_examined;
    Json conds = Json::array();
    for (const auto& c : r.conditions) {
        os << verdict_name(c.verdict) << ' ' << c.name;
        Json e;
        e["name"] = c.name;
        e["verdict"] = verdict_name(c.verdict);
        if (c.verdict == Verdict::violated) {
            os << "  " << c.detail.substr(c.detail.find(": ") + 2) << "  [witness " << (c.revalidated ? "revalidated" : "NOT revalidated")
               << "]";
            e["detail"] = c.detail;
            e["revalidated"] = c.revalidated;
            e["point"] = c.witness->point;
            e["net"] = render_net(c.witness->net);
        }
        os << '\n';
        conds.push_back(e);
    }
    j["conditions"] = conds;
    const bool agree = summary.holds("alt_form_agrees");
    os << "alternative divergence form agrees: " << (agree ? "yes" : "NO") << '\n';
    j["alt_form_agrees"] = agree;
    if (cls.filter_form) {
        const TopBounds tb = top_bounds(*cls.filter_form);
        os << "finest topology below the class: " << masks(tb.finest_minus.opens) << '\n';
        os << indent(tb.report.to_text());
        j["finest_minus"] = to_json(tb.finest_minus);
        j["top_bounds"] = report_json(tb.report);
    }
    emit(out, o, j, os.str());
    return r.any_violation() ? kViolation : kPass;
}

int cmd_list(const Options& o, std::ostream& out) {
    Json j;
    std::ostringstream os;
    Json props = Json::array();
    os << "search properties:\n";
    for (const auto& p : search_properties()) {
        os << "  " << p.name << "  " << p.description << '\n';
        props.push_back({{"name", p.name}, {"description", p.description}});
    }
    Json cl = Json::array();
    os << "audit claims:\n";
    for (const auto& c : claims()) {
        os << "  " << c.id << "  " << c.statement << " (n " << c.default_n << ", max " << c.max_n << ")\n";
        cl.push_back({{"id", c.id}, {"statement", c.statement}, {"default_n", c.default_n}, {"max_n", c.max_n}});
    }
    j["properties"] = props;
    j["claims"] = cl;
    emit(out, o, j, os.str());
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-model workbench for topological type structures", "ttskit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "Check the axioms of a structure document");
    check->add_option("file", o.file, "Document path or -")->required();

    auto* derive = app.add_subcommand("derive", "Derive the topology of a strongly compatible structure");
    derive->add_option("file", o.file, "Document path or -")->required();
    derive->add_option("--order", o.order, "Token order for tts documents: support or equality");

    auto* embed = app.add_subcommand("embed", "Embed a convergence, uniform or power structure");
    embed->add_option("file", o.file, "Document path or -")->required();
    embed->add_option("--token-cap", o.token_cap, "Largest base token count for power associations");
    embed->add_flag("--report", o.report, "Append the axiom report in text mode");

    auto* audit = app.add_subcommand("audit", "Census of a claim over an enumerated universe");
    audit->add_option("claim", o.name, "Claim id")->required();
    audit->add_option("--n", o.n, "Carrier bound");
    audit->add_option("--seed", o.seed, "Sampling seed");
    audit->add_option("--samples", o.samples, "Random samples beyond the exhaustive part");

    auto* search = app.add_subcommand("search", "Search for a counterexample");
    search->add_option("property", o.name, "Property name")->required();
    search->add_option("--seed", o.seed, "Seed");
    search->add_flag("--exhaustive", o.exhaustive, "Enumerate instead of sampling");
    search->add_option("--samples", o.samples, "Random samples");
    search->add_option("--max-carrier", o.max_carrier, "Largest carrier");
    search->add_option("--max-tokens", o.max_tokens, "Largest token count");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate structures of one kind");
    enumerate_cmd->add_option("kind", o.name, "topology, convergence, uniformity, ucs, tts or directed-preorder")->required();
    enumerate_cmd->add_option("--n", o.n, "Carrier size")->required();
    enumerate_cmd->add_option("--tokens", o.tokens, "Token count for tts");
    enumerate_cmd->add_flag("--count-only", o.count_only, "Print the census only");

    auto* ms = app.add_subcommand("ms-check", "Check the net convergence conditions of a class");
    ms->add_option("file", o.file, "net-class document path or -")->required();
    ms->add_option("--bound", o.bound, "Largest index size");
    ms->add_option("--diag", o.diag, "Largest outer and inner index size in diagonal frames");
    ms->add_option("--subnets", o.subnets, "willard or kelley");

    auto* list = app.add_subcommand("list", "List search properties and audit claims");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (derive->parsed()) return cmd_derive(o, out);
        if (embed->parsed()) return cmd_embed(o, out);
        if (audit->parsed()) return cmd_audit(o, out);
        if (search->parsed()) return cmd_search(o, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
        if (ms->parsed()) return cmd_ms_check(o, out);
        if (list->parsed()) return cmd_list(o, out);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace ttskit::cli
