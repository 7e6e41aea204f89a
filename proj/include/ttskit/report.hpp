#pragma once

#include <string>
#include <vector>

namespace ttskit {

// Outcome of one quantified condition. When `holds` is false, `witness` is the
// smallest counterexample tuple in canonical order and `detail` renders it.
struct Check {
    std::string name;
    bool holds = true;
    std::vector<long long> witness;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    bool ok() const;
    const Check* find(const std::string& name) const;
    bool holds(const std::string& name) const;
    Check& add(Check c);
    void append(const Report& other, const std::string& prefix = {});
    std::string to_text() const;
};

Check pass(std::string name);
Check fail(std::string name, std::vector<long long> witness, std::string detail);

}  // namespace ttskit
