#include "ttskit/workbench/generate.hpp"

#include <algorithm>

#include "ttskit/foundations.hpp"

namespace ttskit::workbench {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

std::uint64_t pairs_mask(int n) { return n * n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1; }

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), engine_(seeded(seed, stream)) {}

Rng Rng::split(std::uint64_t stream) { return Rng(seed_ ^ engine_(), stream); }

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

std::uint64_t Rng::bits(int count) {
    if (count <= 0) return 0;
    const std::uint64_t v = engine_();
    return count >= 64 ? v : v & ((std::uint64_t{1} << count) - 1);
}

bool Rng::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Topology random_topology(int n, Rng& rng) {
    // Random pre-order by transitive closure of random kernels.
    std::vector<Mask> k(n);
    for (int x = 0; x < n; ++x) k[x] = (rng.bits(n) & (rng.coin(0.5) ? rng.bits(n) : ~Mask{0})) | bit(x);
    for (int pass = 0; pass < n; ++pass)
        for (int x = 0; x < n; ++x)
            for (int y : members(k[x])) k[x] |= k[y];
    return topology_from_kernels(n, k);
}

ConvergenceStructure random_convergence(int n, Rng& rng) {
    std::vector<Mask> k(n);
    for (int x = 0; x < n; ++x) k[x] = (rng.bits(n) & full_mask(n)) | bit(x);
    return ConvergenceStructure::from_kernels(std::move(k));
}

FiniteUniformity random_uniformity(int n, Rng& rng) {
    std::vector<int> label(n);
    for (int x = 0; x < n; ++x) label[x] = rng.uniform(0, x);
    std::vector<Mask> classes;
    for (int l = 0; l < n; ++l) {
        Mask c = 0;
        for (int x = 0; x < n; ++x)
            if (label[x] == l) c |= bit(x);
        if (c) classes.push_back(c);
    }
    return uniformity_from_classes(n, classes);
}

UniformConvergenceStructure random_ucs(int n, Rng& rng) { return ucs_from_uniformity(random_uniformity(n, rng)); }

Tts random_tts(int carrier, int tokens, Rng& rng) {
    Tts s = Tts::blank(carrier, tokens);
    const Mask all = s.full();
    // Each token's family: up-closure of a few random generators, plus the full set.
    std::vector<std::vector<Mask>> gens(tokens);
    for (int t = 0; t < tokens; ++t) {
        const int g = rng.uniform(0, 2);
        for (int i = 0; i < g; ++i) gens[t].push_back(static_cast<Mask>(rng.uniform(1, static_cast<int>(all))));
        gens[t].push_back(all);
    }
    // Every point needs a token.
    for (int x = 0; x < carrier; ++x) gens[rng.uniform(0, tokens - 1)].push_back(bit(x));
    for (Mask a = 1; a <= all; ++a)
        for (int t = 0; t < tokens; ++t)
            for (Mask g : gens[t])
                if (is_subset(g, a)) {
                    s.table[a].set(t);
                    break;
                }
    for (int x = 0; x < carrier; ++x) {
        const TokenSet& p = s.at(bit(x));
        for (auto a = p.find_first(); a != TokenSet::npos; a = p.find_next(a))
            for (auto b = p.find_first(); b != TokenSet::npos; b = p.find_next(b)) s.xi.set(a, b);
    }
    const int extra = rng.uniform(0, tokens);
    for (int i = 0; i < extra; ++i) {
        const int a = rng.uniform(0, tokens - 1), b = rng.uniform(0, tokens - 1);
        s.xi.set(a, b);
        s.xi.set(b, a);
        s.xi.set(a, a);
        s.xi.set(b, b);
    }
    return s;
}

Ttsr random_ttsr(int carrier, int tokens, Rng& rng, int attempts) {
    Ttsr r{random_tts(carrier, tokens, rng), BitMatrix::identity(tokens)};
    for (int i = 0; i < attempts; ++i) {
        BitMatrix leq = BitMatrix::identity(tokens);
        const int extra = rng.uniform(1, tokens);
        for (int j = 0; j < extra; ++j) leq.set(rng.uniform(0, tokens - 1), rng.uniform(0, tokens - 1));
        for (int pass = 0; pass < tokens; ++pass)
            for (int a = 0; a < tokens; ++a)
                for (int b = 0; b < tokens; ++b)
                    if (leq.test(a, b)) leq.row(a) |= leq.row(b);
        Ttsr cand{r.tts, leq};
        if (check_axioms(cand).ok()) return cand;
    }
    return r;
}

Tts raw_tts(int carrier, int tokens, Rng& rng) {
    Tts s = Tts::blank(carrier, tokens);
    for (auto& row : s.table)
        for (int t = 0; t < tokens; ++t) row.set(t, rng.coin(0.5));
    for (int a = 0; a < tokens; ++a)
        for (int b = 0; b < tokens; ++b) s.xi.set(a, b, rng.coin(0.5));
    return s;
}

Ttsr raw_ttsr(int carrier, int tokens, Rng& rng) {
    Ttsr r{raw_tts(carrier, tokens, rng), BitMatrix(tokens)};
    for (int a = 0; a < tokens; ++a)
        for (int b = 0; b < tokens; ++b) r.leq.set(a, b, a == b || rng.coin(0.3));
    return r;
}

FilterAssignment raw_assignment(int n, Rng& rng) {
    FilterAssignment a{n, std::vector<TokenSet>(n, TokenSet(full_mask(n)))};
    for (auto& l : a.lambda)
        for (std::size_t f = 0; f < l.size(); ++f) l.set(f, rng.coin(0.5));
    return a;
}

UniformConvergenceStructure raw_ucs(int n, Rng& rng) {
    // Random family drawn under a random ceiling relation, so it is often near-valid.
    const std::uint64_t ceiling = rng.bits(n * n) | rng.bits(n * n);
    std::vector<std::uint64_t> gens;
    for (std::uint64_t r = ceiling; r; r = (r - 1) & ceiling)
        if (rng.coin(0.9)) gens.push_back(r);
    for (int x = 0; x < n; ++x)
        if (rng.coin(0.9)) gens.push_back(pair_bit(n, x, x));
    return make_ucs(n, std::move(gens));
}

Topology raw_topology(int n, Rng& rng) {
    std::vector<Mask> opens;
    for (Mask a = 0; a <= full_mask(n); ++a)
        if (rng.coin(0.4)) opens.push_back(a);
    return Topology{n, opens};
}

Tts perturb(const Tts& s, Rng& rng) {
    Tts out = s;
    if (rng.coin(0.5)) {
        const int a = rng.uniform(0, static_cast<int>(out.table.size()) - 1);
        const int t = rng.uniform(0, out.tokens - 1);
        out.table[a].flip(t);
    } else {
        const int a = rng.uniform(0, out.tokens - 1), b = rng.uniform(0, out.tokens - 1);
        out.xi.set(a, b, !out.xi.test(a, b));
    }
    return out;
}

FilterAssignment perturb(const FilterAssignment& a, Rng& rng) {
    FilterAssignment out = a;
    const int x = rng.uniform(0, a.carrier - 1);
    out.lambda[x].flip(rng.uniform(0, static_cast<int>(full_mask(a.carrier)) - 1));
    return out;
}

UniformConvergenceStructure perturb(const UniformConvergenceStructure& u, Rng& rng) {
    std::vector<std::uint64_t> g = u.generators;
    const std::uint64_t r = (rng.bits(u.carrier * u.carrier) & pairs_mask(u.carrier));
    if (r == 0) return u;
    auto it = std::find(g.begin(), g.end(), r);
    if (it == g.end())
        g.push_back(r);
    else
        g.erase(it);
    return make_ucs(u.carrier, std::move(g));
}

Topology perturb(const Topology& t, Rng& rng) {
    std::vector<Mask> o = t.opens;
    const Mask a = static_cast<Mask>(rng.uniform(0, static_cast<int>(full_mask(t.carrier))));
    auto it = std::find(o.begin(), o.end(), a);
    if (it == o.end())
        o.push_back(a);
    else
        o.erase(it);
    std::sort(o.begin(), o.end());
    return Topology{t.carrier, o};
}

}  // namespace ttskit::workbench
