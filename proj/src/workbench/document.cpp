#include "ttskit/workbench/document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ttskit/foundations.hpp"

namespace ttskit::workbench {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const Json& field(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<int>();
}

Mask subset_from(const Json& j, int carrier, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of points");
    Mask m = 0;
    for (const auto& e : j) {
        const int x = as_int(e, what + " element");
        if (x < 0 || x >= carrier) bad(what + " mentions point " + std::to_string(x) + " outside the carrier");
        m |= bit(x);
    }
    return m;
}

Json subset_to(Mask m) {
    Json a = Json::array();
    for (int x : members(m)) a.push_back(x);
    return a;
}

std::pair<int, int> pair_from(const Json& j, int limit, const std::string& what) {
    if (!j.is_array() || j.size() != 2) bad(what + " must be a pair");
    const int a = as_int(j[0], what), b = as_int(j[1], what);
    if (a < 0 || a >= limit || b < 0 || b >= limit) bad(what + " out of range");
    return {a, b};
}

std::uint64_t relation_from(const Json& j, int n, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of pairs");
    std::uint64_t r = 0;
    for (const auto& p : j) {
        auto [a, b] = pair_from(p, n, what);
        r |= pair_bit(n, a, b);
    }
    return r;
}

Json relation_to(int n, std::uint64_t r) {
    Json a = Json::array();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r & pair_bit(n, x, y)) a.push_back(Json::array({x, y}));
    return a;
}

int carrier_of(const Json& doc) {
    const int n = as_int(field(doc, "carrier"), "carrier");
    if (n < 1) bad("carrier must be positive");
    return n;
}

Json header(const std::string& kind, int carrier) {
    Json doc;
    doc["kind"] = kind;
    doc["version"] = kDocumentVersion;
    doc["carrier"] = carrier;
    return doc;
}

Topology topology_body(const Json& doc) {
    const int n = carrier_of(doc);
    if (n > 16) throw CapExceeded("topology carrier exceeds 16 points");
    const Json& opens = field(doc, "opens");
    if (!opens.is_array()) bad("opens must be an array");
    std::vector<Mask> o;
    for (const auto& e : opens) o.push_back(subset_from(e, n, "open set"));
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    return Topology{n, std::move(o)};
}

FilterAssignment convergence_body(const Json& doc) {
    const int n = carrier_of(doc);
    if (n > kMaxTtsCarrier) throw CapExceeded("convergence carrier exceeds 12 points");
    const Json& lam = field(doc, "lambda");
    if (!lam.is_array() || static_cast<int>(lam.size()) != n) bad("lambda must list the convergent filters of every point");
    FilterAssignment a{n, std::vector<TokenSet>(n, TokenSet(full_mask(n)))};
    for (int x = 0; x < n; ++x) {
        if (!lam[x].is_array()) bad("lambda entries must be arrays of cores");
        for (const auto& core : lam[x]) {
            const Mask c = subset_from(core, n, "filter core");
            if (c == 0) bad("filter cores must be nonempty");
            a.lambda[x].set(filter_token(c));
        }
    }
    return a;
}

std::vector<int> token_list(const Json& j, const std::map<std::string, int>& names, int tokens, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of tokens");
    std::vector<int> out;
    for (const auto& e : j) {
        if (e.is_string()) {
            auto it = names.find(e.get<std::string>());
            if (it == names.end()) bad("unknown token \"" + e.get<std::string>() + "\"");
            out.push_back(it->second);
        } else {
            const int t = as_int(e, what);
            if (t < 0 || t >= tokens) bad("token index " + std::to_string(t) + " out of range");
            out.push_back(t);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> token_pairs(const Json& j, const std::map<std::string, int>& names, int tokens,
                                             const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of token pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) bad(what + " entries must be pairs");
        const auto v = token_list(p, names, tokens, what);
        out.emplace_back(v[0], v[1]);
    }
    return out;
}

Tts tts_body(const Json& doc, std::map<std::string, int>& names) {
    const int n = carrier_of(doc);
    if (n > kMaxTtsCarrier) throw CapExceeded("structure carrier exceeds 12 points");
    const Json& toks = field(doc, "tokens");
    std::vector<std::string> labels;
    if (toks.is_number_integer()) {
        const int m = toks.get<int>();
        if (m < 1) bad("token set must be nonempty");
        for (int t = 0; t < m; ++t) labels.push_back("#" + std::to_string(t));
    } else if (toks.is_array()) {
        for (const auto& e : toks) {
            if (!e.is_string()) bad("token names must be strings");
            labels.push_back(e.get<std::string>());
        }
    } else {
        bad("tokens must be a count or a list of names");
    }
    if (labels.empty()) bad("token set must be nonempty");
    for (std::size_t t = 0; t < labels.size(); ++t)
        if (!names.emplace(labels[t], static_cast<int>(t)).second) bad("duplicate token name \"" + labels[t] + "\"");

    Tts s = Tts::blank(n, static_cast<int>(labels.size()));
    s.names = labels;
    const Json& table = field(doc, "T");
    if (!table.is_object()) bad("T must be an object keyed by subsets");
    std::vector<bool> seen(s.table.size(), false);
    for (auto it = table.begin(); it != table.end(); ++it) {
        Json key;
        try {
            key = Json::parse(it.key());
        } catch (const Json::parse_error&) {
            bad("T key \"" + it.key() + "\" is not a subset");
        }
        const Mask a = subset_from(key, n, "T key");
        if (render_mask(a) != it.key() && key.size() != static_cast<std::size_t>(popcount(a)))
            bad("T key \"" + it.key() + "\" repeats a point");
        if (seen[a]) bad("T row " + render_mask(a) + " given twice");
        seen[a] = true;
        for (int t : token_list(it.value(), names, s.tokens, "T row")) s.table[a].set(t);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) bad("incomplete T table");
    for (auto [a, b] : token_pairs(field(doc, "xi"), names, s.tokens, "xi")) s.xi.set(a, b);
    return s;
}

Json tts_fields(Json doc, const Tts& s) {
    Json names = Json::array();
    for (int t = 0; t < s.tokens; ++t) names.push_back(s.token_name(t));
    doc["tokens"] = names;
    Json table = Json::object();
    for (Mask a = 0; a <= s.full(); ++a) {
        Json row = Json::array();
        for (auto t = s.at(a).find_first(); t != TokenSet::npos; t = s.at(a).find_next(t)) row.push_back(t);
        table[render_mask(a)] = row;
    }
    doc["T"] = table;
    Json xi = Json::array();
    for (int a = 0; a < s.tokens; ++a)
        for (int b = 0; b < s.tokens; ++b)
            if (s.xi.test(a, b)) xi.push_back(Json::array({a, b}));
    doc["xi"] = xi;
    return doc;
}

Structure body(const Json& doc) {
    if (!doc.is_object()) bad("document must be a JSON object");
    const Json& kind = field(doc, "kind");
    if (!kind.is_string()) bad("kind must be a string");
    const int version = as_int(field(doc, "version"), "version");
    if (version != kDocumentVersion) bad("unsupported document version " + std::to_string(version));
    const std::string k = kind.get<std::string>();

    if (k == "topology") return topology_body(doc);
    if (k == "convergence") return convergence_body(doc);
    if (k == "ucs") {
        const int n = carrier_of(doc);
        if (n > kMaxUniformCarrier) throw CapExceeded("uniform structures need a carrier of at most 4 points");
        const Json& gens = field(doc, "generators");
        if (!gens.is_array()) bad("generators must be an array of relations");
        std::vector<std::uint64_t> g;
        for (const auto& r : gens) g.push_back(relation_from(r, n, "generator"));
        return make_ucs(n, std::move(g));
    }
    if (k == "uniformity") {
        const int n = carrier_of(doc);
        if (n > kMaxRelationCarrier) throw CapExceeded("relations need a carrier of at most 8 points");
        return FiniteUniformity{n, relation_from(field(doc, "entourage"), n, "entourage")};
    }
    if (k == "tts") {
        std::map<std::string, int> names;
        return tts_body(doc, names);
    }
    if (k == "ttsr") {
        std::map<std::string, int> names;
        Ttsr r;
        r.tts = tts_body(doc, names);
        r.leq = BitMatrix(r.tts.tokens);
        for (auto [a, b] : token_pairs(field(doc, "leq"), names, r.tts.tokens, "leq")) r.leq.set(a, b);
        return r;
    }
    if (k == "net-class") {
        NetClassSpec spec;
        spec.carrier = carrier_of(doc);
        const Json& rule = field(doc, "rule");
        if (!rule.is_string()) bad("rule must be a string");
        spec.rule = rule.get<std::string>();
        if (spec.rule == "topology" || spec.rule == "convergence") {
            Structure inner = body(field(doc, "structure"));
            if (spec.rule == "topology" && std::holds_alternative<Topology>(inner))
                spec.topology = std::get<Topology>(inner);
            else if (spec.rule == "convergence" && std::holds_alternative<FilterAssignment>(inner))
                spec.convergence = std::get<FilterAssignment>(inner);
            else
                bad("rule " + spec.rule + " needs an embedded " + spec.rule + " structure");
            const int inner_n = spec.topology ? spec.topology->carrier : spec.convergence->carrier;
            if (inner_n != spec.carrier) bad("embedded structure has a different carrier");
        } else if (spec.rule == "eventually-constant-min-size" || spec.rule == "eventually-constant-max-size") {
            spec.parameter = as_int(field(doc, "size"), "size");
        } else if (spec.rule == "value-at-index") {
            spec.parameter = as_int(field(doc, "index"), "index");
        } else {
            bad("unknown net-class rule \"" + spec.rule + "\"");
        }
        return spec;
    }
    bad("unknown kind \"" + k + "\"");
}

struct ToJson {
    Json operator()(const Topology& t) const {
        Json doc = header("topology", t.carrier);
        Json opens = Json::array();
        for (Mask o : t.opens) opens.push_back(subset_to(o));
        doc["opens"] = opens;
        return doc;
    }
    Json operator()(const FilterAssignment& a) const {
        Json doc = header("convergence", a.carrier);
        Json lam = Json::array();
        for (const auto& l : a.lambda) {
            Json cores = Json::array();
            for (auto f = l.find_first(); f != TokenSet::npos; f = l.find_next(f))
                cores.push_back(subset_to(token_core(static_cast<int>(f))));
            lam.push_back(cores);
        }
        doc["lambda"] = lam;
        return doc;
    }
    Json operator()(const UniformConvergenceStructure& u) const {
        Json doc = header("ucs", u.carrier);
        Json gens = Json::array();
        for (auto r : u.generators) gens.push_back(relation_to(u.carrier, r));
        doc["generators"] = gens;
        return doc;
    }
    Json operator()(const FiniteUniformity& u) const {
        Json doc = header("uniformity", u.carrier);
        doc["entourage"] = relation_to(u.carrier, u.entourage);
        return doc;
    }
    Json operator()(const Tts& s) const { return tts_fields(header("tts", s.carrier), s); }
    Json operator()(const Ttsr& r) const {
        Json doc = tts_fields(header("ttsr", r.tts.carrier), r.tts);
        Json leq = Json::array();
        for (std::size_t a = 0; a < r.leq.size(); ++a)
            for (std::size_t b = 0; b < r.leq.size(); ++b)
                if (r.leq.test(a, b)) leq.push_back(Json::array({a, b}));
        doc["leq"] = leq;
        return doc;
    }
    Json operator()(const NetClassSpec& c) const {
        Json doc = header("net-class", c.carrier);
        doc["rule"] = c.rule;
        if (c.topology) doc["structure"] = (*this)(*c.topology);
        if (c.convergence) doc["structure"] = (*this)(*c.convergence);
        if (c.rule == "eventually-constant-min-size" || c.rule == "eventually-constant-max-size") doc["size"] = c.parameter;
        if (c.rule == "value-at-index") doc["index"] = c.parameter;
        return doc;
    }
};

}  // namespace

std::string kind_name(const Structure& s) {
    static const char* names[] = {"topology", "convergence", "ucs", "uniformity", "tts", "ttsr", "net-class"};
    return names[s.index()];
}

Structure parse(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const std::size_t pos = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        int line = 1, column = 1;
        for (std::size_t i = 0; i < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        const auto cut = what.find("syntax error");
        if (cut != std::string::npos) {
            const auto colon = what.find(": ", cut);
            if (colon != std::string::npos) what = what.substr(colon + 2);
        }
        throw SyntaxError(line, column, what);
    }
    return from_json(doc);
}

Structure from_json(const Json& doc) {
    try {
        return body(doc);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
}

Json to_json(const Structure& s) { return std::visit(ToJson{}, s); }

std::string render_json(const Json& doc) {
    if (!doc.is_object() || doc.empty()) return doc.dump() + "\n";
    std::string out = "{\n";
    std::size_t i = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
        out += "  " + Json(it.key()).dump() + ": " + it.value().dump();
        out += i + 1 < doc.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

std::string serialize(const Structure& s) { return render_json(to_json(s)); }

bool same_structure(const Structure& a, const Structure& b) { return to_json(a) == to_json(b); }

Json report_json(const Report& r) {
    Json a = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["holds"] = c.holds;
        e["witness"] = c.witness;
        e["detail"] = c.detail;
        a.push_back(e);
    }
    return a;
}

ConvergenceClass make_class(const NetClassSpec& spec) {
    if (spec.rule == "topology") {
        if (!spec.topology) bad("rule topology needs a structure");
        const Report r = check_topology(*spec.topology);
        for (const auto& c : r.checks)
            if (!c.holds) bad("embedded topology fails " + c.name + ": " + c.detail);
        return class_from_topology(*spec.topology);
    }
    if (spec.rule == "convergence") {
        if (!spec.convergence) bad("rule convergence needs a structure");
        return class_from_convergence(ConvergenceStructure::from_assignment(*spec.convergence));
    }
    if (spec.rule == "eventually-constant-min-size") return class_eventually_constant_min_size(spec.carrier, spec.parameter);
    if (spec.rule == "eventually-constant-max-size") return class_eventually_constant_max_size(spec.carrier, spec.parameter);
    if (spec.rule == "value-at-index") {
        if (spec.parameter < 0) bad("index must be nonnegative");
        return class_value_at_index(spec.carrier, spec.parameter);
    }
    bad("unknown net-class rule \"" + spec.rule + "\"");
}

}  // namespace ttskit::workbench
