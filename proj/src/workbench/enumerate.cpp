#include "ttskit/workbench/enumerate.hpp"

#include "ttskit/moore_smith.hpp"

namespace ttskit::workbench {

namespace {

void cap(bool ok, const std::string& what) {
    if (!ok) throw CapExceeded(what);
}

void positive(int n) {
    if (n < 1) throw InputError("size must be positive");
}

}  // namespace

std::vector<Topology> enumerate_topologies(int n) {
    positive(n);
    cap(n <= kMaxEnumTopology, "topology enumeration needs n <= 4");
    return all_topologies(n);
}

std::vector<ConvergenceStructure> enumerate_convergence(int n) {
    positive(n);
    cap(n <= kMaxEnumConvergence, "convergence enumeration needs n <= 3");
    std::vector<ConvergenceStructure> out;
    const Mask free = full_mask(n - 1);
    std::vector<Mask> code(n, 0), k(n);
    while (true) {
        for (int x = 0; x < n; ++x)
            k[x] = ((code[x] & full_mask(x)) | bit(x) | ((code[x] & ~full_mask(x)) << 1)) & full_mask(n);
        out.push_back(ConvergenceStructure::from_kernels(k));
        int i = n - 1;
        while (i >= 0 && code[i] == free) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
    return out;
}

std::vector<FiniteUniformity> enumerate_uniformities(int n) {
    positive(n);
    cap(n <= kMaxEnumUniformity, "uniformity enumeration needs n <= 6");
    std::vector<FiniteUniformity> out;
    std::vector<int> rgs(n, 0);
    while (true) {
        std::vector<Mask> classes(n, 0);
        for (int x = 0; x < n; ++x) classes[rgs[x]] |= bit(x);
        std::vector<Mask> used;
        for (Mask c : classes)
            if (c) used.push_back(c);
        out.push_back(uniformity_from_classes(n, used));
        // Next restricted growth string.
        int i = n - 1;
        while (i > 0) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
            if (rgs[i] <= mx) break;
            rgs[i--] = 0;
        }
        if (i <= 0) break;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
    return out;
}

std::vector<UniformConvergenceStructure> enumerate_ucs(int n) {
    positive(n);
    cap(n <= kMaxUniformCarrier, "uniform structure enumeration needs n <= 4");
    std::vector<UniformConvergenceStructure> out;
    for (const auto& u : enumerate_uniformities(n)) out.push_back(ucs_from_uniformity(u));
    return out;
}

std::vector<DirectedPreorder> enumerate_directed_preorders(int n) {
    positive(n);
    cap(n <= kMaxEnumPreorder, "directed pre-order enumeration needs n <= 4");
    return directed_preorders(n);
}

void for_each_tts(int carrier, int tokens, const std::function<bool(const Tts&)>& visit) {
    positive(carrier);
    positive(tokens);
    cap((carrier <= kMaxEnumTtsCarrier && tokens <= kMaxEnumTtsTokens) || (carrier == 3 && tokens <= 2),
        "structure enumeration needs carrier <= 2 with tokens <= 3, or carrier 3 with tokens <= 2");
    const Mask all = full_mask(carrier);
    const std::uint64_t tok_all = (std::uint64_t{1} << tokens) - 1;
    // Rows for the proper nonempty subsets in ascending mask order; T(E) is every token.
    std::vector<Mask> proper;
    for (Mask a = 1; a < all; ++a) proper.push_back(a);
    std::vector<std::uint64_t> row(all + 1, 0);
    row[all] = tok_all;
    // Symmetric relations by their upper triangle, diagonal included.
    std::vector<std::pair<int, int>> upper;
    for (int a = 0; a < tokens; ++a)
        for (int b = a; b < tokens; ++b) upper.emplace_back(a, b);

    Tts s = Tts::blank(carrier, tokens);
    bool go = true;
    std::function<void(std::size_t)> rows = [&](std::size_t i) {
        if (!go) return;
        if (i == proper.size()) {
            for (Mask a = 0; a <= all; ++a)
                for (int t = 0; t < tokens; ++t) s.table[a].set(t, (row[a] >> t) & 1);
            for (std::uint64_t r = 0; r < (std::uint64_t{1} << upper.size()) && go; ++r) {
                s.xi = BitMatrix(tokens);
                for (std::size_t p = 0; p < upper.size(); ++p)
                    if ((r >> p) & 1) {
                        s.xi.set(upper[p].first, upper[p].second);
                        s.xi.set(upper[p].second, upper[p].first);
                    }
                if (check_axioms(s).ok()) go = visit(s);
            }
            return;
        }
        const Mask a = proper[i];
        for (std::uint64_t t = 1; t <= tok_all && go; ++t) {
            // Monotone against every proper subset already fixed.
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (is_subset(proper[j], a) && (row[proper[j]] & ~t)) ok = false;
            if (!ok) continue;
            row[a] = t;
            rows(i + 1);
        }
    };
    rows(0);
}

std::vector<Tts> enumerate_tts(int carrier, int tokens) {
    std::vector<Tts> out;
    for_each_tts(carrier, tokens, [&](const Tts& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

void for_each_raw_tts(int carrier, int tokens, const std::function<void(const Tts&)>& visit) {
    positive(carrier);
    positive(tokens);
    const std::size_t rows = std::size_t{1} << carrier;
    const std::size_t bits = rows * tokens + static_cast<std::size_t>(tokens) * tokens;
    cap(bits <= 24, "raw structure enumeration limited to 2^24 bodies");
    Tts s = Tts::blank(carrier, tokens);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        std::size_t p = 0;
        for (std::size_t a = 0; a < rows; ++a)
            for (int t = 0; t < tokens; ++t) s.table[a].set(t, (code >> p++) & 1);
        for (int a = 0; a < tokens; ++a)
            for (int b = 0; b < tokens; ++b) s.xi.set(a, b, (code >> p++) & 1);
        visit(s);
    }
}

Enumeration enumerate(const std::string& kind, int n, int tokens, bool count_only) {
    Enumeration e{kind, n, tokens, 0, {}, {}};
    auto take = [&](auto&& items) {
        e.count = items.size();
        if (!count_only)
            for (auto& it : items) e.items.emplace_back(it);
    };
    if (kind == "topology") {
        take(enumerate_topologies(n));
    } else if (kind == "convergence") {
        std::vector<FilterAssignment> a;
        for (const auto& c : enumerate_convergence(n)) a.push_back(c.assignment());
        take(a);
    } else if (kind == "uniformity") {
        take(enumerate_uniformities(n));
    } else if (kind == "ucs") {
        take(enumerate_ucs(n));
    } else if (kind == "tts") {
        if (tokens < 1) throw InputError("tts enumeration needs a token count");
        for_each_tts(n, tokens, [&](const Tts& s) {
            ++e.count;
            if (!count_only) e.items.emplace_back(s);
            return true;
        });
    } else if (kind == "directed-preorder") {
        const auto ps = enumerate_directed_preorders(n);
        e.count = ps.size();
        if (!count_only)
            for (const auto& p : ps) e.preorders.push_back(p.up_sets());
    } else {
        throw InputError("unknown kind \"" + kind + "\"");
    }
    return e;
}

}  // namespace ttskit::workbench
