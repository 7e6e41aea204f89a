#include "ttskit/moore_smith.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ttskit/error.hpp"

namespace ttskit {

namespace {

long long ll(std::size_t v) { return static_cast<long long>(v); }

std::size_t ipow(std::size_t b, int e) {
    std::size_t out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

// Values of a tuple code, first coordinate most significant.
std::vector<int> decode(std::size_t code, int len, int base) {
    std::vector<int> v(len);
    for (int i = len - 1; i >= 0; --i) {
        v[i] = static_cast<int>(code % base);
        code /= base;
    }
    return v;
}

std::size_t encode(const std::vector<int>& v, int base) {
    std::size_t code = 0;
    for (int x : v) code = code * base + x;
    return code;
}

std::vector<DirectedPreorder> build_preorders(int n) {
    std::vector<std::vector<Mask>> found;
    std::vector<Mask> code(n, 0), up(n);
    const Mask free = full_mask(n - 1);
    while (true) {
        for (int x = 0; x < n; ++x) {
            const Mask c = code[x];
            up[x] = ((c & full_mask(x)) | bit(x) | ((c & ~full_mask(x)) << 1)) & full_mask(n);
        }
        if (check_directed_preorder(up).ok()) found.push_back(up);
        int i = n - 1;
        while (i >= 0 && code[i] == free) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
    std::sort(found.begin(), found.end());
    std::vector<DirectedPreorder> out;
    for (auto& u : found) out.push_back(DirectedPreorder::from_up_sets(u));
    return out;
}

bool is_constant(const Net& s) {
    return std::all_of(s.values.begin(), s.values.end(), [&](int v) { return v == s.values[0]; });
}

void check_caps(int carrier, const MsBounds& b) {
    if (carrier < 1) throw InputError("carrier size must be positive");
    if (carrier > kMaxNetCarrier) throw CapExceeded("net checks need a carrier of at most 4 points");
    if (b.index_size < 1 || b.index_size > kMaxIndexSize)
        throw CapExceeded("index bound must lie in 1.." + std::to_string(kMaxIndexSize));
    if (b.diag < 1 || b.diag > kMaxDiagonalSize)
        throw CapExceeded("diagonal bound must lie in 1.." + std::to_string(kMaxDiagonalSize));
}

std::string bound_tag(const MsBounds& b) {
    return "k=" + std::to_string(b.index_size) + " diag=" + std::to_string(b.diag) +
           (b.subnets == SubnetKind::willard ? " willard" : " kelley");
}

// Frames in enumeration order, with |Lambda| and every |I_l| at most diag.
template <class Visit>
void for_each_frame_shape(int diag, Visit&& visit) {
    std::vector<DirectedPreorder> small;
    for (int m = 1; m <= diag; ++m)
        for (const auto& p : directed_preorders(m)) small.push_back(p);
    for (int l = 1; l <= diag; ++l)
        for (const auto& lam : directed_preorders(l)) {
            const std::size_t combos = ipow(small.size(), l);
            for (std::size_t c = 0; c < combos; ++c) {
                const std::vector<int> pick = decode(c, l, static_cast<int>(small.size()));
                std::vector<DirectedPreorder> is;
                for (int k : pick) is.push_back(small[k]);
                visit(lam, is);
            }
        }
}

DiagonalFrame frame_of(const DirectedPreorder& lam, const std::vector<DirectedPreorder>& is,
                       const std::vector<std::vector<int>>& vals, const std::vector<int>& limits) {
    DiagonalFrame f{lam, {}, limits};
    for (std::size_t l = 0; l < is.size(); ++l) f.nets.push_back(Net{is[l], vals[l]});
    return f;
}

}  // namespace

Net make_net(DirectedPreorder index, std::vector<int> values, int carrier) {
    if (static_cast<int>(values.size()) != index.size()) throw InputError("net needs one value per index");
    for (int v : values)
        if (v < 0 || v >= carrier) throw InputError("net value outside the carrier");
    return Net{std::move(index), std::move(values)};
}

Net constant_net(const DirectedPreorder& index, int x) { return Net{index, std::vector<int>(index.size(), x)}; }

std::string render_net(const Net& s) {
    std::string out = "[";
    for (int i = 0; i < s.index.size(); ++i) out += (i ? "," : "") + render_mask(s.index.up(i));
    out += "] -> (";
    for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? "," : "") + std::to_string(s.values[i]);
    return out + ")";
}

Mask tail_core(const Net& s) {
    Mask core = 0;
    for (int i : members(s.index.top())) core |= bit(s.values[i]);
    return core;
}

PrincipalFilter tail_filter(const Net& s, int carrier) {
    return make_principal_filter(Subset(Carrier(carrier), tail_core(s)));
}

const std::vector<DirectedPreorder>& directed_preorders(int size) {
    static std::mutex mu;
    static std::map<int, std::vector<DirectedPreorder>> cache;
    if (size < 1 || size > 6) throw CapExceeded("directed pre-order enumeration needs 1..6 points");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(size);
    if (it == cache.end()) it = cache.emplace(size, build_preorders(size)).first;
    return it->second;
}

bool is_subnet_map(const DirectedPreorder& j, const DirectedPreorder& i, const std::vector<int>& phi, SubnetKind kind) {
    if (static_cast<int>(phi.size()) != j.size()) return false;
    for (int v : phi)
        if (v < 0 || v >= i.size()) return false;
    const Mask top_i = i.top();
    if (kind == SubnetKind::kelley) {
        for (int a : members(j.top()))
            if (!(top_i & bit(phi[a]))) return false;
        return true;
    }
    for (int a = 0; a < j.size(); ++a)
        for (int b : members(j.up(a)))
            if (!i.leq(phi[a], phi[b])) return false;
    for (int a = 0; a < j.size(); ++a)
        if (top_i & bit(phi[a])) return true;
    return false;
}

std::vector<Subnet> enumerate_subnets(const Net& s, int bound, SubnetKind kind) {
    std::vector<Subnet> out;
    const int n = s.index.size();
    for (int m = 1; m <= bound; ++m)
        for (const auto& j : directed_preorders(m)) {
            const std::size_t maps = ipow(n, m);
            for (std::size_t c = 0; c < maps; ++c) {
                std::vector<int> phi = decode(c, m, n);
                if (!is_subnet_map(j, s.index, phi, kind)) continue;
                std::vector<int> vals(m);
                for (int a = 0; a < m; ++a) vals[a] = s.values[phi[a]];
                out.push_back(Subnet{Net{j, std::move(vals)}, std::move(phi)});
            }
        }
    return out;
}

ConvergenceClass class_from_topology(const Topology& t) {
    const ConvergenceStructure c = topology_to_convergence(t);
    ConvergenceClass out = class_from_convergence(c);
    out.name = "topology";
    return out;
}

ConvergenceClass class_from_convergence(const ConvergenceStructure& c) {
    return ConvergenceClass{"convergence", c.carrier(),
                            [c](const Net& s, int x) { return c.converges(tail_core(s), x); }, c};
}

ConvergenceClass class_eventually_constant_min_size(int carrier, int min_size) {
    return ConvergenceClass{"eventually-constant-min-size", carrier,
                            [min_size](const Net& s, int x) {
                                return s.index.size() >= min_size && tail_core(s) == bit(x);
                            },
                            std::nullopt};
}

ConvergenceClass class_eventually_constant_max_size(int carrier, int max_size) {
    return ConvergenceClass{"eventually-constant-max-size", carrier,
                            [max_size](const Net& s, int x) {
                                return s.index.size() <= max_size && tail_core(s) == bit(x);
                            },
                            std::nullopt};
}

ConvergenceClass class_value_at_index(int carrier, int index) {
    return ConvergenceClass{"value-at-index", carrier,
                            [index](const Net& s, int x) {
                                return index < s.index.size() && s.values[index] == x;
                            },
                            std::nullopt};
}

NetUniverse::NetUniverse(int carrier, int bound, SubnetKind kind) : carrier_(carrier), bound_(bound) {
    if (carrier < 1 || carrier > kMaxNetCarrier) throw CapExceeded("net universe needs a carrier of 1..4 points");
    if (bound < 1 || bound > kMaxIndexSize) throw CapExceeded("net universe needs an index bound of 1..3");
    std::vector<const DirectedPreorder*> pres;
    for (int m = 1; m <= bound; ++m)
        for (const auto& p : directed_preorders(m)) {
            pres.push_back(&p);
            preorder_keys_.push_back(p.up_sets());
            offsets_.push_back(nets_.size());
            const std::size_t count = ipow(carrier, m);
            for (std::size_t c = 0; c < count; ++c) nets_.push_back(Net{p, decode(c, m, carrier)});
        }

    // Admissible maps for each (sub-index, index) pair of pre-orders.
    const std::size_t np = pres.size();
    std::vector<std::vector<std::vector<int>>> maps(np * np);
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b) {
            const int m = pres[a]->size(), n = pres[b]->size();
            for (std::size_t c = 0; c < ipow(n, m); ++c) {
                std::vector<int> phi = decode(c, m, n);
                if (is_subnet_map(*pres[a], *pres[b], phi, kind)) maps[a * np + b].push_back(std::move(phi));
            }
        }

    subnets_.resize(nets_.size());
    for (std::size_t b = 0; b < np; ++b) {
        const std::size_t count = ipow(carrier, pres[b]->size());
        for (std::size_t c = 0; c < count; ++c) {
            const std::size_t id = offsets_[b] + c;
            const Net& s = nets_[id];
            for (std::size_t a = 0; a < np; ++a)
                for (const auto& phi : maps[a * np + b]) {
                    std::vector<int> vals(phi.size());
                    for (std::size_t j = 0; j < phi.size(); ++j) vals[j] = s.values[phi[j]];
                    subnets_[id].push_back(offsets_[a] + encode(vals, carrier));
                }
        }
    }
}

std::size_t NetUniverse::id_of(const Net& s) const {
    auto it = std::lower_bound(preorder_keys_.begin(), preorder_keys_.end(), s.index.up_sets(),
                               [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
                                   if (a.size() != b.size()) return a.size() < b.size();
                                   return a < b;
                               });
    if (it == preorder_keys_.end() || *it != s.index.up_sets()) throw InputError("net index outside the universe");
    for (int v : s.values)
        if (v < 0 || v >= carrier_) throw InputError("net value outside the carrier");
    return offsets_[it - preorder_keys_.begin()] + encode(s.values, carrier_);
}

Report subnet_preorder_check(const NetUniverse& u) {
    Report r;
    Check refl = pass("reflexive");
    for (std::size_t id = 0; id < u.size(); ++id) {
        const auto& sub = u.subnets(id);
        if (std::find(sub.begin(), sub.end(), id) == sub.end()) {
            refl = fail("reflexive", {ll(id)}, render_net(u.net(id)) + " is not its own subnet");
            break;
        }
    }
    r.add(refl);
    Check tr = pass("transitive");
    for (std::size_t id = 0; id < u.size() && tr.holds; ++id) {
        std::vector<std::size_t> sub = u.subnets(id);
        std::sort(sub.begin(), sub.end());
        for (std::size_t t : u.subnets(id)) {
            bool done = false;
            for (std::size_t v : u.subnets(t))
                if (!std::binary_search(sub.begin(), sub.end(), v)) {
                    tr = fail("transitive", {ll(id), ll(t), ll(v)}, "subnet of a subnet missing");
                    done = true;
                    break;
                }
            if (done) break;
        }
    }
    r.add(tr);
    return r;
}

Net diagonal_net(const DiagonalFrame& frame) {
    const DirectedPreorder& lam = frame.lambda;
    const int L = lam.size();
    if (static_cast<int>(frame.nets.size()) != L || static_cast<int>(frame.limits.size()) != L)
        throw InputError("frame needs one net and one limit per outer index");
    std::vector<int> radix(L);
    std::size_t prod = 1;
    for (int l = 0; l < L; ++l) {
        radix[l] = frame.nets[l].index.size();
        prod *= radix[l];
    }
    const std::size_t size = L * prod;
    if (size > 64) throw CapExceeded("diagonal index exceeds 64 points");
    auto component = [&](std::size_t j) {
        std::vector<int> f(L);
        std::size_t r = j / L;
        for (int l = 0; l < L; ++l) {
            f[l] = static_cast<int>(r % radix[l]);
            r /= radix[l];
        }
        return f;
    };
    std::vector<Mask> up(size, 0);
    std::vector<int> vals(size);
    for (std::size_t a = 0; a < size; ++a) {
        const int la = static_cast<int>(a % L);
        const std::vector<int> fa = component(a);
        vals[a] = frame.nets[la].values[fa[la]];
        for (std::size_t b = 0; b < size; ++b) {
            const int lb = static_cast<int>(b % L);
            if (!lam.leq(la, lb)) continue;
            const std::vector<int> fb = component(b);
            bool ok = true;
            for (int l = 0; l < L && ok; ++l) ok = frame.nets[l].index.leq(fa[l], fb[l]);
            if (ok) up[a] |= bit(static_cast<int>(b));
        }
    }
    return Net{DirectedPreorder::from_up_sets(std::move(up)), std::move(vals)};
}

Net outer_net(const DiagonalFrame& frame) { return Net{frame.lambda, frame.limits}; }

const MsCondition& MsReport::get(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return c;
    throw std::out_of_range("no condition " + name);
}

bool MsReport::any_violation() const {
    return std::any_of(conditions.begin(), conditions.end(),
                       [](const MsCondition& c) { return c.verdict == Verdict::violated; });
}

Report MsReport::as_report() const {
    Report r;
    for (const auto& c : conditions) {
        if (c.verdict == Verdict::no_violation_up_to_bound) {
            Check ok = pass(c.name);
            ok.detail = c.detail;
            r.add(ok);
            continue;
        }
        std::vector<long long> w;
        if (c.witness) {
            w.push_back(c.witness->point);
            for (int v : c.witness->net.values) w.push_back(v);
        }
        r.add(fail(c.name, w, c.detail));
    }
    const bool a = get("subnet_divergence").verdict == Verdict::violated;
    const bool b = get("subnet_divergence_alt").verdict == Verdict::violated;
    r.add(a == b ? pass("alt_form_agrees") : fail("alt_form_agrees", {}, "the two subnet divergence forms disagree"));
    return r;
}

MsReport check_moore_smith(const ConvergenceClass& s, const MsBounds& bounds) {
    check_caps(s.carrier, bounds);
    const int n = s.carrier;
    const NetUniverse u(n, bounds.index_size, bounds.subnets);
    const std::size_t N = u.size();

    std::vector<std::vector<char>> conv(n, std::vector<char>(N, 0));
    for (std::size_t id = 0; id < N; ++id)
        for (int x = 0; x < n; ++x) conv[x][id] = s.converges(u.net(id), x) ? 1 : 0;

    MsReport out;
    out.class_name = s.name;
    out.bounds = bounds;
    out.nets_examined = N;
    const std::string none = "NO-VIOLATION-UP-TO-BOUND (" + bound_tag(bounds) + ")";
    auto clean = [&](const std::string& name) { return MsCondition{name, Verdict::no_violation_up_to_bound, std::nullopt, none, false}; };
    auto violated = [&](const std::string& name, MsWitness w, const std::string& what) {
        return MsCondition{name, Verdict::violated, std::move(w), "VIOLATED (" + bound_tag(bounds) + "): " + what, false};
    };

    MsCondition constant = clean("constant_nets");
    for (std::size_t id = 0; id < N && constant.verdict != Verdict::violated; ++id) {
        const Net& net = u.net(id);
        if (is_constant(net) && !conv[net.values[0]][id])
            constant = violated("constant_nets", MsWitness{net.values[0], net, std::nullopt, std::nullopt},
                                "constant net " + render_net(net) + " does not converge to " +
                                    std::to_string(net.values[0]));
    }

    MsCondition subnets = clean("subnets");
    for (std::size_t id = 0; id < N && subnets.verdict != Verdict::violated; ++id)
        for (int x = 0; x < n && subnets.verdict != Verdict::violated; ++x) {
            if (!conv[x][id]) continue;
            for (std::size_t t : u.subnets(id))
                if (!conv[x][t]) {
                    for (auto& sub : enumerate_subnets(u.net(id), bounds.index_size, bounds.subnets))
                        if (!s.converges(sub.net, x)) {
                            subnets = violated("subnets", MsWitness{x, u.net(id), sub, std::nullopt},
                                               render_net(u.net(id)) + " converges to " + std::to_string(x) +
                                                   " but its subnet " + render_net(sub.net) + " does not");
                            break;
                        }
                    break;
                }
        }

    // Whether some subnet of t converges to x.
    std::vector<std::vector<char>> has(n, std::vector<char>(N, 0));
    for (int x = 0; x < n; ++x)
        for (std::size_t t = 0; t < N; ++t)
            for (std::size_t v : u.subnets(t))
                if (conv[x][v]) {
                    has[x][t] = 1;
                    break;
                }

    MsCondition divergence = clean("subnet_divergence");
    for (std::size_t id = 0; id < N && divergence.verdict != Verdict::violated; ++id)
        for (int x = 0; x < n; ++x) {
            if (conv[x][id]) continue;
            bool escape = false;
            for (std::size_t t : u.subnets(id)) escape = escape || !has[x][t];
            if (!escape) {
                divergence = violated("subnet_divergence", MsWitness{x, u.net(id), std::nullopt, std::nullopt},
                                      render_net(u.net(id)) + " does not converge to " + std::to_string(x) +
                                          " yet every subnet has a subnet converging to it");
                break;
            }
        }

    // Premise first, conclusion second, with its own lazily filled table.
    MsCondition alt = clean("subnet_divergence_alt");
    std::vector<std::vector<signed char>> memo(n, std::vector<signed char>(N, -1));
    auto reaches = [&](std::size_t t, int x) {
        signed char& m = memo[x][t];
        if (m < 0) {
            m = 0;
            for (std::size_t v : u.subnets(t))
                if (s.converges(u.net(v), x)) {
                    m = 1;
                    break;
                }
        }
        return m == 1;
    };
    for (std::size_t id = 0; id < N && alt.verdict != Verdict::violated; ++id)
        for (int x = 0; x < n; ++x) {
            bool premise = true;
            for (std::size_t t : u.subnets(id))
                if (!reaches(t, x)) {
                    premise = false;
                    break;
                }
            if (premise && !s.converges(u.net(id), x)) {
                alt = violated("subnet_divergence_alt", MsWitness{x, u.net(id), std::nullopt, std::nullopt},
                               "every subnet of " + render_net(u.net(id)) + " has a subnet converging to " +
                                   std::to_string(x) + " but the net does not");
                break;
            }
        }

    MsCondition diagonal = clean("diagonal");
    std::size_t frames = 0;
    for_each_frame_shape(bounds.diag, [&](const DirectedPreorder& lam, const std::vector<DirectedPreorder>& is) {
        if (diagonal.verdict == Verdict::violated) return;
        const int L = lam.size();
        std::vector<std::size_t> counts(L);
        std::size_t combos = 1;
        for (int l = 0; l < L; ++l) {
            counts[l] = ipow(n, is[l].size());
            combos *= counts[l];
        }
        for (std::size_t c = 0; c < combos && diagonal.verdict != Verdict::violated; ++c) {
            std::vector<std::vector<int>> vals(L);
            std::size_t r = c;
            for (int l = L - 1; l >= 0; --l) {
                vals[l] = decode(r % counts[l], is[l].size(), n);
                r /= counts[l];
            }
            std::vector<Mask> limits_of(L, 0);
            bool any = true;
            for (int l = 0; l < L; ++l) {
                for (int x = 0; x < n; ++x)
                    if (s.converges(Net{is[l], vals[l]}, x)) limits_of[l] |= bit(x);
                any = any && limits_of[l] != 0;
            }
            if (!any) continue;
            const Net t = diagonal_net(frame_of(lam, is, vals, std::vector<int>(L, 0)));
            Mask t_limits = 0;
            for (int x = 0; x < n; ++x)
                if (s.converges(t, x)) t_limits |= bit(x);
            const std::size_t tuples = ipow(n, L);
            for (std::size_t q = 0; q < tuples; ++q) {
                const std::vector<int> lim = decode(q, L, n);
                bool premise = true;
                for (int l = 0; l < L; ++l) premise = premise && (limits_of[l] & bit(lim[l]));
                if (!premise) continue;
                const Net outer{lam, lim};
                for (int x = 0; x < n; ++x) {
                    if (!s.converges(outer, x)) continue;
                    ++frames;
                    if (!(t_limits & bit(x))) {
                        DiagonalFrame f = frame_of(lam, is, vals, lim);
                        const Net tn = diagonal_net(f);
                        diagonal = violated("diagonal", MsWitness{x, tn, std::nullopt, f},
                                            "outer net " + render_net(outer) + " converges to " + std::to_string(x) +
                                                " but the diagonal net " + render_net(tn) + " does not");
                        return;
                    }
                }
            }
        }
    });
    out.frames_examined = frames;

    out.conditions = {constant, subnets, divergence, alt, diagonal};
    for (auto& c : out.conditions)
        if (c.verdict == Verdict::violated) c.revalidated = revalidate(s, bounds, c);
    return out;
}

bool revalidate(const ConvergenceClass& s, const MsBounds& bounds, const MsCondition& c) {
    if (c.verdict != Verdict::violated || !c.witness) return false;
    const MsWitness& w = c.witness.value();
    const int x = w.point;
    if (x < 0 || x >= s.carrier) return false;
    if (!check_directed_preorder(w.net.index.up_sets()).ok()) return false;
    if (c.name == "constant_nets") return is_constant(w.net) && w.net.values[0] == x && !s.converges(w.net, x);
    if (c.name == "subnets") {
        if (!w.subnet || !s.converges(w.net, x)) return false;
        const Subnet& t = *w.subnet;
        if (!is_subnet_map(t.net.index, w.net.index, t.phi, bounds.subnets)) return false;
        for (std::size_t j = 0; j < t.phi.size(); ++j)
            if (t.net.values[j] != w.net.values[t.phi[j]]) return false;
        return !s.converges(t.net, x);
    }
    if (c.name == "subnet_divergence" || c.name == "subnet_divergence_alt") {
        if (s.converges(w.net, x)) return false;
        for (const auto& t : enumerate_subnets(w.net, bounds.index_size, bounds.subnets)) {
            bool found = false;
            for (const auto& v : enumerate_subnets(t.net, bounds.index_size, bounds.subnets))
                if (s.converges(v.net, x)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    }
    if (c.name == "diagonal") {
        if (!w.frame) return false;
        const DiagonalFrame& f = *w.frame;
        for (std::size_t l = 0; l < f.nets.size(); ++l)
            if (!s.converges(f.nets[l], f.limits[l])) return false;
        if (!s.converges(outer_net(f), x)) return false;
        const Net t = diagonal_net(f);
        return t == w.net && !s.converges(t, x);
    }
    return false;
}

ConvergenceStructure filter_representation(const ConvergenceClass& s, int bound) {
    if (s.filter_form) return *s.filter_form;
    check_caps(s.carrier, MsBounds{bound, 1, SubnetKind::willard});
    const int n = s.carrier;
    const Mask all = full_mask(n);
    const NetUniverse u(n, bound, SubnetKind::willard);
    std::vector<std::vector<signed char>> state(n, std::vector<signed char>(all + 1, -1));
    for (std::size_t id = 0; id < u.size(); ++id) {
        const Mask core = tail_core(u.net(id));
        for (int x = 0; x < n; ++x) {
            const signed char v = s.converges(u.net(id), x) ? 1 : 0;
            if (state[x][core] >= 0 && state[x][core] != v)
                throw InputError("class not filter-representable: convergence of " + render_net(u.net(id)) +
                                 " is not determined by its tail filter");
            state[x][core] = v;
        }
    }
    FilterAssignment a{n, std::vector<TokenSet>(n, TokenSet(all))};
    for (int x = 0; x < n; ++x)
        for (Mask core = 1; core <= all; ++core) {
            if (state[x][core] < 0)
                throw InputError("class not filter-representable within bound: no net has tail filter up" +
                                 render_mask(core));
            if (state[x][core]) a.lambda[x].set(filter_token(core));
        }
    try {
        return ConvergenceStructure::from_assignment(a);
    } catch (const InputError& e) {
        throw InputError(std::string("class not filter-representable: ") + e.what());
    }
}

TopBounds top_bounds(const ConvergenceStructure& c) {
    const int n = c.carrier();
    TopBounds out;
    out.finest_minus = induced_topology(c);
    // Plus: every net converging in the topology converges in the class.
    auto in_plus = [&](const Topology& t) {
        const std::vector<Mask> nb = t.minimal_neighbourhoods();
        for (int x = 0; x < n; ++x)
            if (!is_subset(nb[x], c.kernel(x))) return false;
        return true;
    };
    auto in_minus = [&](const Topology& t) {
        const std::vector<Mask> nb = t.minimal_neighbourhoods();
        for (int x = 0; x < n; ++x)
            if (!is_subset(c.kernel(x), nb[x])) return false;
        return true;
    };
    out.discrete_in_plus = in_plus(discrete_topology(n));
    out.indiscrete_in_minus = in_minus(indiscrete_topology(n));
    out.report.add(out.discrete_in_plus ? pass("discrete_in_plus")
                                        : fail("discrete_in_plus", {}, "discrete topology outside the plus family"));
    out.report.add(out.indiscrete_in_minus
                       ? pass("indiscrete_in_minus")
                       : fail("indiscrete_in_minus", {}, "indiscrete topology outside the minus family"));
    out.report.add(in_minus(out.finest_minus) ? pass("induced_in_minus")
                                              : fail("induced_in_minus", {}, "induced topology outside the minus family"));
    if (n <= 4) {
        Check finest = pass("induced_finest_minus");
        const std::vector<Topology> all = all_topologies(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (!in_minus(all[i])) continue;
            const bool coarser = std::includes(out.finest_minus.opens.begin(), out.finest_minus.opens.end(),
                                               all[i].opens.begin(), all[i].opens.end());
            if (!coarser) {
                finest = fail("induced_finest_minus", {ll(i)}, "a minus-family topology is not coarser than the induced one");
                break;
            }
        }
        out.report.add(finest);
    }
    return out;
}

TopBounds top_bounds(const ConvergenceClass& s, int bound) { return top_bounds(filter_representation(s, bound)); }

}  // namespace ttskit
