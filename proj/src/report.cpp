#include "ttskit/report.hpp"

#include <algorithm>
#include <sstream>

namespace ttskit {

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool Report::holds(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->holds;
}

Check& Report::add(Check c) {
    checks.push_back(std::move(c));
    return checks.back();
}

void Report::append(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.holds ? "pass " : "FAIL ") << c.name;
        if (!c.holds && !c.detail.empty()) os << "  " << c.detail;
        os << '\n';
    }
    return os.str();
}

Check pass(std::string name) { return Check{std::move(name), true, {}, {}}; }

Check fail(std::string name, std::vector<long long> witness, std::string detail) {
    return Check{std::move(name), false, std::move(witness), std::move(detail)};
}

}  // namespace ttskit
