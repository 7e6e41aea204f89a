#include <doctest.h>

#include "helpers.hpp"
#include "naive.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/error.hpp"
#include "ttskit/workbench/enumerate.hpp"

using namespace ttskit;

namespace {

FilterAssignment assignment(int n, const std::vector<std::vector<Mask>>& cores) {
    FilterAssignment a{n, std::vector<TokenSet>(n, TokenSet(full_mask(n)))};
    for (int x = 0; x < n; ++x)
        for (Mask c : cores[x]) a.lambda[x].set(filter_token(c));
    return a;
}

}  // namespace

TEST_CASE("convergence axiom witnesses") {
    CHECK(check_convergence_axioms(assignment(2, {{1}, {2}})).ok());
    CHECK(check_convergence_axioms(assignment(2, {{1}, {1}})).find("point_filter")->witness == W({1}));
    const Report meet = check_convergence_axioms(assignment(3, {{1, 2, 4}, {2}, {4}}));
    CHECK(meet.find("meet_closed")->witness == W({0, 1, 2}));
    CHECK(meet.holds("refinement_closed"));
    const Report refine = check_convergence_axioms(assignment(2, {{1, 3}, {2}}));
    CHECK(refine.find("refinement_closed")->witness == W({0, 3, 2}));
    CHECK_THROWS_AS(check_convergence_axioms(FilterAssignment{2, {TokenSet(3)}}), InputError);
}

TEST_CASE("kernel form") {
    const ConvergenceStructure c = ConvergenceStructure::from_assignment(assignment(2, {{1, 2, 3}, {2}}));
    CHECK(c.kernels() == std::vector<Mask>{3, 2});
    CHECK(c.converges(3, 0));
    CHECK_FALSE(c.converges(3, 1));
    CHECK_FALSE(c.converges(0, 0));
    CHECK(ConvergenceStructure::from_kernels({3, 2}) == c);
    CHECK_THROWS_AS(ConvergenceStructure::from_kernels({2, 2}), InputError);
    CHECK_THROWS_AS(ConvergenceStructure::from_assignment(assignment(2, {{1, 2}, {2}})), InputError);
    CHECK(ConvergenceStructure::discrete(3).kernels() == std::vector<Mask>{1, 2, 4});
    CHECK(ConvergenceStructure::indiscrete(2).kernels() == std::vector<Mask>{3, 3});
}

TEST_CASE("topological convergence structures") {
    const FilterAssignment chain = load_document<FilterAssignment>("chain-convergence.json");
    const ConvergenceStructure c = ConvergenceStructure::from_assignment(chain);
    CHECK(is_topological(c));
    CHECK(induced_topology(c).opens == std::vector<Mask>{0, 2, 3});
    CHECK(topology_to_convergence(induced_topology(c)) == c);

    const ConvergenceStructure nt = ConvergenceStructure::from_kernels({3, 6, 4});
    CHECK_FALSE(is_topological(nt));
    CHECK(induced_topology(nt).opens == std::vector<Mask>{0, 4, 6, 7});
    CHECK(topology_to_convergence(induced_topology(nt)).kernels() == std::vector<Mask>{7, 6, 4});
}

TEST_CASE("round trip through convergence for every topology") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : all_topologies(n)) {
            const ConvergenceStructure c = topology_to_convergence(t);
            CHECK(is_topological(c));
            CHECK(induced_topology(c) == t);
        }
}

TEST_CASE("structure census") {
    CHECK(workbench::enumerate_convergence(1).size() == 1);
    CHECK(workbench::enumerate_convergence(2).size() == naive::count_convergence(2));
    CHECK(workbench::enumerate_convergence(2).size() == 4);
    std::size_t topological = 0;
    for (const auto& c : workbench::enumerate_convergence(3)) topological += is_topological(c);
    CHECK(topological == 29);
}

TEST_CASE("embedding relates filters with a common limit") {
    const ConvergenceStructure c = ConvergenceStructure::from_kernels({3, 2});
    const Tts s = embed_convergence(c);
    CHECK(check_axioms(s).ok());
    CHECK(check_axioms(embed_convergence_ttsr(c)).ok());
    // Every pair shares the limit 0.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(s.xi.test(a, b));
    CHECK(conver_set(s, 0) == c.assignment().lambda[0]);
    CHECK(conver_set(s, 1).count() == 3);
    CHECK(c.assignment().lambda[1].count() == 1);
}

TEST_CASE("recovered convergence is the union over points whose kernel contains x") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : workbench::enumerate_convergence(n)) {
            const Tts s = embed_convergence(c);
            const FilterAssignment a = c.assignment();
            const auto oracle = naive::conver(s);
            for (int x = 0; x < n; ++x) {
                TokenSet expect(a.lambda[x].size());
                for (int y = 0; y < n; ++y)
                    if (c.kernel(y) & bit(x)) expect |= a.lambda[y];
                CHECK(conver_set(s, x) == expect);
                CHECK(static_cast<std::size_t>(expect.count()) == oracle[x].size());
            }
        }
}

TEST_CASE("relation transitivity witness") {
    const Tts s = embed_convergence(ConvergenceStructure::from_kernels({3, 6, 4}));
    const Check t = relation_transitivity(s);
    CHECK_FALSE(t.holds);
    REQUIRE(t.witness.size() == 3);
    const auto a = t.witness[0], b = t.witness[1], c = t.witness[2];
    CHECK(s.xi.test(a, b));
    CHECK(s.xi.test(b, c));
    CHECK_FALSE(s.xi.test(a, c));
    CHECK(relation_transitivity(embed_convergence(ConvergenceStructure::discrete(3))).holds);
}

TEST_CASE("embedding of a topology") {
    const SigmaTau st = build_sigma_tau(sierpinski_topology());
    CHECK(st.axioms.ok());
    CHECK(st.complete);
    CHECK(st.transitive.holds);
    CHECK(st.structure.leq == refinement_order(2));
}

TEST_CASE("continuous maps") {
    const ConvergenceStructure d = ConvergenceStructure::discrete(2);
    const ConvergenceStructure i = ConvergenceStructure::indiscrete(2);
    CHECK(is_continuous(d, i, {1, 0}));
    CHECK_FALSE(is_continuous(i, d, {0, 1}));
    CHECK(is_continuous(i, d, {1, 1}));
    CHECK(continuous_maps(d, d).size() == 4);
    CHECK(continuous_maps(i, d) == std::vector<PointMap>{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(is_continuous(d, d, {0}), InputError);
}

TEST_CASE("function spaces and products") {
    const ConvergenceStructure d = ConvergenceStructure::discrete(2);
    const ConvergenceStructure i = ConvergenceStructure::indiscrete(2);
    const FunctionSpace fd = continuous_convergence(d, d);
    CHECK(fd.maps.size() == 4);
    CHECK(fd.structure == ConvergenceStructure::discrete(4));
    const FunctionSpace fi = continuous_convergence(d, i);
    CHECK(fi.structure == ConvergenceStructure::indiscrete(4));
    CHECK(product(d, d) == ConvergenceStructure::discrete(4));
    CHECK(product(i, i) == ConvergenceStructure::indiscrete(4));
    // (a, b) at a * |Y| + b: the kernel of (0, 1) in discrete x indiscrete is {(0,0), (0,1)}.
    CHECK(product(d, i).kernel(1) == 0b0011);
}

TEST_CASE("exponential law on a few triples") {
    const ConvergenceStructure chain = ConvergenceStructure::from_kernels({3, 2});
    const std::vector<ConvergenceStructure> xs = {ConvergenceStructure::discrete(2), ConvergenceStructure::indiscrete(2),
                                                  chain, ConvergenceStructure::from_kernels({3, 6, 4})};
    for (const auto& x : xs)
        for (const auto& z : xs) {
            const ExponentialReport e = exponential_check(x, chain, z);
            CHECK(e.report.ok());
            CHECK(e.product_maps == e.curried_maps);
        }
}
