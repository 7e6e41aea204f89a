#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "ttskit/convergence.hpp"
#include "ttskit/derived_topology.hpp"
#include "ttskit/error.hpp"
#include "ttskit/moore_smith.hpp"
#include "ttskit/tts.hpp"
#include "ttskit/uniform.hpp"

namespace ttskit::workbench {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

class SyntaxError : public InputError {
public:
    SyntaxError(int line, int column, const std::string& what)
        : InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// rule: topology | convergence | eventually-constant-min-size |
// eventually-constant-max-size | value-at-index
struct NetClassSpec {
    std::string rule;
    int carrier = 1;
    int parameter = 0;
    std::optional<Topology> topology;
    std::optional<FilterAssignment> convergence;
};

// Parsed documents keep unvalidated bodies so the checkers can report on them.
using Structure = std::variant<Topology, FilterAssignment, UniformConvergenceStructure, FiniteUniformity, Tts, Ttsr,
                               NetClassSpec>;

// topology | convergence | ucs | uniformity | tts | ttsr | net-class
std::string kind_name(const Structure& s);

Structure parse(const std::string& text);
Structure from_json(const Json& doc);
Json to_json(const Structure& s);
// One top-level key per line, values compact.
std::string serialize(const Structure& s);
std::string render_json(const Json& doc);

// Throws InputError on an unknown rule or an invalid structure.
ConvergenceClass make_class(const NetClassSpec& spec);

bool same_structure(const Structure& a, const Structure& b);

// [{"name", "holds", "witness", "detail"}, ...]
Json report_json(const Report& r);

}  // namespace ttskit::workbench
