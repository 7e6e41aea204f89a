#include "ttskit/convergence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ttskit/error.hpp"

namespace ttskit {

namespace {

constexpr std::size_t kMaxMaps = 2'000'000;

long long ll(std::size_t v) { return static_cast<long long>(v); }

std::string core_name(Mask c) { return "up" + render_mask(c); }

Mask image(const PointMap& f, Mask a) {
    Mask out = 0;
    for (int x : members(a)) out |= bit(f[x]);
    return out;
}

std::size_t power_count(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > kMaxMaps / base) throw CapExceeded("function space too large to enumerate");
        out *= base;
    }
    return out;
}

// Odometer over all maps {0..n-1} -> {0..k-1}, first coordinate most significant.
bool next_map(PointMap& f, int k) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (++f[i] < k) return true;
        f[i] = 0;
    }
    return false;
}

std::size_t encode(const PointMap& f, int k) {
    std::size_t code = 0;
    for (int v : f) code = code * k + v;
    return code;
}

}  // namespace

Report check_convergence_axioms(const FilterAssignment& a) {
    const int n = a.carrier;
    if (n < 1) throw InputError("carrier size must be positive");
    if (n > kMaxTtsCarrier) throw CapExceeded("filter assignment needs a carrier of at most 12 points");
    if (static_cast<int>(a.lambda.size()) != n) throw InputError("assignment must list every point");
    const Mask all = full_mask(n);
    for (const auto& l : a.lambda)
        if (l.size() != all) throw InputError("assignment row has wrong filter count");

    Report r;
    Check point = pass("point_filter");
    for (int x = 0; x < n; ++x)
        if (!a.lambda[x].test(filter_token(bit(x)))) {
            point = fail("point_filter", {x}, "point filter of " + std::to_string(x) + " does not converge to it");
            break;
        }
    r.add(point);

    Check meet = pass("meet_closed");
    for (int x = 0; x < n && meet.holds; ++x) {
        const TokenSet& l = a.lambda[x];
        for (auto f = l.find_first(); f != TokenSet::npos && meet.holds; f = l.find_next(f))
            for (auto g = l.find_next(f); g != TokenSet::npos; g = l.find_next(g)) {
                const Mask u = token_core(static_cast<int>(f)) | token_core(static_cast<int>(g));
                if (!l.test(filter_token(u))) {
                    meet = fail("meet_closed",
                                {x, static_cast<long long>(token_core(static_cast<int>(f))),
                                 static_cast<long long>(token_core(static_cast<int>(g)))},
                                core_name(token_core(static_cast<int>(f))) + " and " +
                                    core_name(token_core(static_cast<int>(g))) + " converge to " + std::to_string(x) +
                                    " but their meet does not");
                    break;
                }
            }
    }
    r.add(meet);

    Check refine = pass("refinement_closed");
    for (int x = 0; x < n && refine.holds; ++x) {
        const TokenSet& l = a.lambda[x];
        for (auto f = l.find_first(); f != TokenSet::npos && refine.holds; f = l.find_next(f)) {
            const Mask cf = token_core(static_cast<int>(f));
            for (Mask cg = 1; cg <= all; ++cg)
                if (is_subset(cg, cf) && !l.test(filter_token(cg))) {
                    refine = fail("refinement_closed", {x, static_cast<long long>(cf), static_cast<long long>(cg)},
                                  core_name(cf) + " converges to " + std::to_string(x) + " but its refinement " +
                                      core_name(cg) + " does not");
                    break;
                }
        }
    }
    r.add(refine);
    return r;
}

ConvergenceStructure ConvergenceStructure::from_kernels(std::vector<Mask> kernel) {
    const int n = static_cast<int>(kernel.size());
    if (n < 1) throw InputError("carrier size must be positive");
    if (n > 64) throw CapExceeded("carrier exceeds 64 points");
    for (int x = 0; x < n; ++x) {
        if (!is_subset(kernel[x], full_mask(n))) throw InputError("kernel outside the carrier");
        if (!(kernel[x] & bit(x))) throw InputError("kernel of " + std::to_string(x) + " misses the point itself");
    }
    return ConvergenceStructure(std::move(kernel));
}

ConvergenceStructure ConvergenceStructure::from_assignment(const FilterAssignment& a) {
    Report r = check_convergence_axioms(a);
    for (const auto& c : r.checks)
        if (!c.holds) throw InputError("not a convergence structure: " + c.name + " " + c.detail);
    std::vector<Mask> kernel(a.carrier, 0);
    for (int x = 0; x < a.carrier; ++x)
        for (auto f = a.lambda[x].find_first(); f != TokenSet::npos; f = a.lambda[x].find_next(f))
            kernel[x] |= token_core(static_cast<int>(f));
    return from_kernels(std::move(kernel));
}

ConvergenceStructure ConvergenceStructure::discrete(int n) {
    std::vector<Mask> k(n);
    for (int x = 0; x < n; ++x) k[x] = bit(x);
    return from_kernels(std::move(k));
}

ConvergenceStructure ConvergenceStructure::indiscrete(int n) {
    return from_kernels(std::vector<Mask>(n, full_mask(n)));
}

FilterAssignment ConvergenceStructure::assignment() const {
    const int n = carrier();
    if (n > kMaxTtsCarrier) throw CapExceeded("filter assignment needs a carrier of at most 12 points");
    FilterAssignment a{n, std::vector<TokenSet>(n, TokenSet(full_mask(n)))};
    for (int x = 0; x < n; ++x)
        for (Mask c = kernel_[x];; c = (c - 1) & kernel_[x]) {
            if (c == 0) break;
            a.lambda[x].set(filter_token(c));
        }
    return a;
}

ConvergenceStructure topology_to_convergence(const Topology& t) {
    return ConvergenceStructure::from_kernels(t.minimal_neighbourhoods());
}

Topology induced_topology(const ConvergenceStructure& c) {
    if (c.carrier() > 16) throw CapExceeded("topology carrier exceeds 16 points");
    // A is open when every filter converging to a point of A has A as a member.
    return topology_from_kernels(c.carrier(), c.kernels());
}

bool is_topological(const ConvergenceStructure& c) {
    return topology_to_convergence(induced_topology(c)) == c;
}

Tts embed_convergence(const ConvergenceStructure& c) {
    const int n = c.carrier();
    Tts s = filter_support(n);
    const Mask all = full_mask(n);
    for (Mask f = 1; f <= all; ++f) {
        Mask lim = 0;
        for (int x = 0; x < n; ++x)
            if (c.converges(f, x)) lim |= bit(x);
        if (lim == 0) continue;
        for (Mask g = 1; g <= all; ++g) {
            bool shared = false;
            for (int x : members(lim)) shared = shared || c.converges(g, x);
            if (shared) s.xi.set(filter_token(f), filter_token(g));
        }
    }
    return s;
}

Ttsr embed_convergence_ttsr(const ConvergenceStructure& c) {
    return Ttsr{embed_convergence(c), refinement_order(c.carrier())};
}

Check relation_transitivity(const Tts& s) {
    const BitMatrix& xi = s.xi;
    for (std::size_t a = 0; a < xi.size(); ++a)
        for (auto b = xi.row(a).find_first(); b != TokenSet::npos; b = xi.row(a).find_next(b)) {
            const TokenSet d = xi.row(b) - xi.row(a);
            if (d.any()) {
                const auto c = d.find_first();
                return fail("transitive", {ll(a), ll(b), ll(c)},
                            s.token_name(static_cast<int>(a)) + " ~ " + s.token_name(static_cast<int>(b)) + " ~ " +
                                s.token_name(static_cast<int>(c)) + " but not " + s.token_name(static_cast<int>(a)) +
                                " ~ " + s.token_name(static_cast<int>(c)));
            }
        }
    return pass("transitive");
}

SigmaTau build_sigma_tau(const Topology& t) {
    SigmaTau out;
    out.structure = embed_convergence_ttsr(topology_to_convergence(t));
    out.axioms = check_axioms(out.structure);
    out.complete = is_complete(out.structure.tts);
    out.transitive = relation_transitivity(out.structure.tts);
    return out;
}

bool is_continuous(const ConvergenceStructure& x, const ConvergenceStructure& z, const PointMap& f) {
    if (static_cast<int>(f.size()) != x.carrier()) throw InputError("map has wrong domain size");
    for (int v : f)
        if (v < 0 || v >= z.carrier()) throw InputError("map value out of range");
    // The image of a principal filter is principal on the image of its core.
    for (int p = 0; p < x.carrier(); ++p)
        if (!is_subset(image(f, x.kernel(p)), z.kernel(f[p]))) return false;
    return true;
}

std::vector<PointMap> continuous_maps(const ConvergenceStructure& x, const ConvergenceStructure& z) {
    power_count(z.carrier(), x.carrier());
    std::vector<PointMap> out;
    PointMap f(x.carrier(), 0);
    do {
        if (is_continuous(x, z, f)) out.push_back(f);
    } while (next_map(f, z.carrier()));
    return out;
}

FunctionSpace continuous_convergence(const ConvergenceStructure& x, const ConvergenceStructure& z) {
    std::vector<PointMap> maps = continuous_maps(x, z);
    if (maps.size() > 64) throw CapExceeded("more than 64 continuous maps");
    std::vector<Mask> kernel(maps.size(), 0);
    for (std::size_t f = 0; f < maps.size(); ++f)
        for (std::size_t g = 0; g < maps.size(); ++g) {
            bool ok = true;
            for (int p = 0; p < x.carrier() && ok; ++p) ok = is_subset(image(maps[g], x.kernel(p)), z.kernel(maps[f][p]));
            if (ok) kernel[f] |= bit(static_cast<int>(g));
        }
    return FunctionSpace{std::move(maps), ConvergenceStructure::from_kernels(std::move(kernel))};
}

ConvergenceStructure product(const ConvergenceStructure& x, const ConvergenceStructure& y) {
    const int nx = x.carrier(), ny = y.carrier();
    if (nx * ny > 64) throw CapExceeded("product exceeds 64 points");
    std::vector<Mask> kernel(nx * ny, 0);
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
            for (int a2 : members(x.kernel(a)))
                for (int b2 : members(y.kernel(b))) kernel[a * ny + b] |= bit(a2 * ny + b2);
    return ConvergenceStructure::from_kernels(std::move(kernel));
}

namespace {

// Continuity through preimages of open sets, with the product topology generated by open rectangles.
std::size_t count_continuous_by_opens(const Topology& tx, const Topology& ty, const Topology& tz) {
    const int nx = tx.carrier, ny = ty.carrier, np = nx * ny;
    if (np > 16) throw CapExceeded("product topology exceeds 16 points");
    std::vector<Mask> rects;
    for (Mask u : tx.opens)
        for (Mask v : ty.opens) {
            Mask r = 0;
            for (int a : members(u))
                for (int b : members(v)) r |= bit(a * ny + b);
            rects.push_back(r);
        }
    std::vector<Mask> opens;
    for (Mask a = 0; a <= full_mask(np); ++a) {
        Mask cover = 0;
        for (Mask r : rects)
            if (is_subset(r, a)) cover |= r;
        if (cover == a) opens.push_back(a);
    }
    Topology tp{np, opens};
    std::size_t count = 0;
    PointMap f(np, 0);
    do {
        bool ok = true;
        for (Mask o : tz.opens) {
            Mask pre = 0;
            for (int p = 0; p < np; ++p)
                if (o & bit(f[p])) pre |= bit(p);
            if (!tp.is_open(pre)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (next_map(f, tz.carrier));
    return count;
}

}  // namespace

ExponentialReport exponential_check(const ConvergenceStructure& x, const ConvergenceStructure& y,
                                    const ConvergenceStructure& z) {
    const int nx = x.carrier(), ny = y.carrier(), nz = z.carrier();
    const ConvergenceStructure xy = product(x, y);
    const FunctionSpace cxz = continuous_convergence(x, z);
    const int nc = static_cast<int>(cxz.maps.size());
    ExponentialReport out;
    out.function_space_size = cxz.maps.size();

    // Index of each section map in the function space, or -1 when not continuous.
    std::vector<int> index_of(power_count(nz, nx), -1);
    for (int k = 0; k < nc; ++k) index_of[encode(cxz.maps[k], nz)] = k;

    const std::size_t total = power_count(nz, nx * ny);
    std::set<std::size_t> images;
    std::vector<char> seen_full(power_count(nz, nx * ny), 0);
    Check sections = pass("sections_continuous");
    Check curried = pass("curried_continuous");
    Check injective = pass("injective");
    Check set_level = pass("set_level_injective");
    PointMap f(nx * ny, 0);
    std::size_t idx = 0;
    do {
        // f_ev(b)(a) = f(a, b), encoded as the tuple of section codes.
        std::size_t full_code = 0;
        PointMap ev(ny, 0);
        bool sections_ok = true;
        for (int b = 0; b < ny; ++b) {
            PointMap sec(nx);
            for (int a = 0; a < nx; ++a) sec[a] = f[a * ny + b];
            const std::size_t code = encode(sec, nz);
            full_code += code * power_count(power_count(nz, nx), b);
            ev[b] = index_of[code];
            sections_ok = sections_ok && ev[b] >= 0;
        }
        if (full_code >= seen_full.size()) throw std::logic_error("curried code out of range");
        if (seen_full[full_code] && set_level.holds)
            set_level = fail("set_level_injective", {ll(idx)}, "two maps share a curried form");
        seen_full[full_code] = 1;

        if (is_continuous(xy, z, f)) {
            ++out.product_maps;
            if (!sections_ok) {
                if (sections.holds) sections = fail("sections_continuous", {ll(idx)}, "a section is not continuous");
            } else {
                if (!is_continuous(y, cxz.structure, ev) && curried.holds)
                    curried = fail("curried_continuous", {ll(idx)}, "curried map is not continuous");
                if (!images.insert(encode(ev, nc)).second && injective.holds)
                    injective = fail("injective", {ll(idx)}, "two continuous maps share a curried form");
            }
        }
        ++idx;
    } while (next_map(f, nz));
    (void)total;

    Check surjective = pass("surjective");
    if (nc > 0) {
        const std::vector<PointMap> rhs = continuous_maps(y, cxz.structure);
        out.curried_maps = rhs.size();
        for (std::size_t k = 0; k < rhs.size(); ++k)
            if (!images.count(encode(rhs[k], nc))) {
                std::ostringstream os;
                os << "continuous map " << k << " into the function space has no continuous preimage";
                surjective = fail("surjective", {ll(k)}, os.str());
                break;
            }
    }
    out.report.add(sections);
    out.report.add(curried);
    out.report.add(injective);
    out.report.add(surjective);
    out.report.add(out.product_maps == out.curried_maps
                       ? pass("cardinalities_equal")
                       : fail("cardinalities_equal", {ll(out.product_maps), ll(out.curried_maps)},
                              std::to_string(out.product_maps) + " != " + std::to_string(out.curried_maps)));
    out.report.add(set_level);

    if (is_topological(x) && is_topological(y) && is_topological(z) && nx * ny <= 16) {
        const std::size_t by_opens = count_continuous_by_opens(induced_topology(x), induced_topology(y), induced_topology(z));
        out.report.add(by_opens == out.product_maps
                           ? pass("topological_count_agrees")
                           : fail("topological_count_agrees", {ll(by_opens), ll(out.product_maps)},
                                  "open-set count " + std::to_string(by_opens)));
    }
    return out;
}

}  // namespace ttskit
