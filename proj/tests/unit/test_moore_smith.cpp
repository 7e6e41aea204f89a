#include <doctest.h>

#include <algorithm>

#include "naive.hpp"
#include "ttskit/error.hpp"
#include "ttskit/moore_smith.hpp"
#include "ttskit/workbench/enumerate.hpp"

using namespace ttskit;

TEST_CASE("directed pre-order census agrees with brute force") {
    for (int n = 1; n <= 4; ++n) {
        const auto& ps = directed_preorders(n);
        CHECK(ps.size() == naive::count_directed_preorders(n));
        for (const auto& p : ps) CHECK(check_directed_preorder(p.up_sets()).ok());
    }
    CHECK(directed_preorders(3).size() == 16);
    CHECK(workbench::enumerate_directed_preorders(2).size() == 3);
}

TEST_CASE("nets and tails") {
    const Net s = make_net(DirectedPreorder::chain(2), {0, 1}, 2);
    CHECK(render_net(s) == "[[0,1],[1]] -> (0,1)");
    CHECK(tail_core(s) == 0b10);
    CHECK(tail_filter(s, 2).core_bits() == 0b10);
    CHECK_THROWS_AS(make_net(DirectedPreorder::chain(2), {0}, 2), InputError);
    CHECK_THROWS_AS(make_net(DirectedPreorder::chain(2), {0, 2}, 2), InputError);
    const Net c = make_net(DirectedPreorder::from_up_sets({0b11, 0b11}), {0, 1}, 2);
    CHECK(tail_core(c) == 0b11);
}

TEST_CASE("subnets of a two-chain net") {
    const Net s = make_net(DirectedPreorder::chain(2), {0, 1}, 2);
    const auto one = enumerate_subnets(s, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].phi == std::vector<int>{1});
    CHECK(one[0].net.values == std::vector<int>{1});

    const auto two = enumerate_subnets(s, 2);
    CHECK(std::any_of(two.begin(), two.end(), [&](const Subnet& t) { return t.net == s && t.phi == std::vector<int>{0, 1}; }));
    for (const auto& t : two) CHECK(is_subnet_map(t.net.index, s.index, t.phi, SubnetKind::willard));
}

TEST_CASE("subnets of a constant net are constant") {
    const Net s = constant_net(DirectedPreorder::chain(3), 2);
    for (const auto& t : enumerate_subnets(s, 3))
        for (int v : t.net.values) CHECK(v == 2);
}

TEST_CASE("Willard and Kelley subnet maps") {
    const DirectedPreorder c2 = DirectedPreorder::chain(2), c3 = DirectedPreorder::chain(3);
    CHECK_FALSE(is_subnet_map(c2, c2, {1, 0}, SubnetKind::willard));
    CHECK_FALSE(is_subnet_map(c2, c2, {1, 0}, SubnetKind::kelley));
    CHECK(is_subnet_map(c2, c2, {1, 1}, SubnetKind::willard));
    CHECK(is_subnet_map(c3, c2, {1, 0, 1}, SubnetKind::kelley));
    CHECK_FALSE(is_subnet_map(c3, c2, {1, 0, 1}, SubnetKind::willard));
    CHECK_FALSE(is_subnet_map(DirectedPreorder::point(), c2, {0}, SubnetKind::willard));
    CHECK_FALSE(is_subnet_map(c2, c2, {0}, SubnetKind::willard));
}

TEST_CASE("subnet relation is a pre-order on the bounded universe") {
    for (auto kind : {SubnetKind::willard, SubnetKind::kelley}) {
        const NetUniverse u(2, 3, kind);
        CHECK(u.size() == 2 * 1 + 3 * 4 + 16 * 8);
        CHECK(subnet_preorder_check(u).ok());
    }
    CHECK_THROWS_AS(NetUniverse(5, 2, SubnetKind::willard), CapExceeded);
    CHECK_THROWS_AS(NetUniverse(2, 4, SubnetKind::willard), CapExceeded);
}

TEST_CASE("diagonal nets") {
    SUBCASE("two-chain of two-chains") {
        const DirectedPreorder c2 = DirectedPreorder::chain(2);
        const DiagonalFrame f{c2, {make_net(c2, {0, 1}, 2), make_net(c2, {1, 0}, 2)}, {1, 0}};
        const Net t = diagonal_net(f);
        CHECK(t.index.size() == 8);
        CHECK(t.index.top() == bit(7));
        CHECK(t.index.up(0) == 0xFF);
        CHECK(t.values[7] == 0);
        CHECK(t.values[0] == 0);
        CHECK(t.values[1] == 1);
        // (0, f=(1,0)) sits below (1, f=(1,0)) but not below (0, f=(0,1)).
        CHECK(t.index.leq(2, 3));
        CHECK_FALSE(t.index.leq(2, 4));
        CHECK(outer_net(f).values == std::vector<int>{1, 0});
    }
    SUBCASE("single component") {
        const Net s = make_net(DirectedPreorder::chain(3), {2, 0, 1}, 3);
        const Net t = diagonal_net({DirectedPreorder::point(), {s}, {1}});
        CHECK(t.index == s.index);
        CHECK(t.values == s.values);
    }
    SUBCASE("constant components") {
        const DirectedPreorder c2 = DirectedPreorder::chain(2);
        const Net t = diagonal_net({c2, {constant_net(c2, 1), constant_net(DirectedPreorder::point(), 1)}, {0, 0}});
        CHECK(t.index.size() == 4);
        for (int v : t.values) CHECK(v == 1);
    }
    CHECK_THROWS_AS(diagonal_net({DirectedPreorder::point(), {}, {0}}), InputError);
}

TEST_CASE("topological classes satisfy every condition") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : all_topologies(n)) {
            const MsReport r = check_moore_smith(class_from_topology(t));
            CHECK_FALSE(r.any_violation());
            CHECK(r.as_report().ok());
        }
}

TEST_CASE("synthetic classes") {
    const MsBounds b;
    SUBCASE("minimum index size breaks constant nets") {
        const ConvergenceClass s = class_eventually_constant_min_size(2, 2);
        const MsReport r = check_moore_smith(s, b);
        const MsCondition& c = r.get("constant_nets");
        REQUIRE(c.verdict == Verdict::violated);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->net.index.size() == 1);
        CHECK(revalidate(s, b, c));
        CHECK(r.get("diagonal").verdict == Verdict::no_violation_up_to_bound);
    }
    SUBCASE("value at a fixed index breaks subnets") {
        const ConvergenceClass s = class_value_at_index(2, 0);
        const MsReport r = check_moore_smith(s, b);
        const MsCondition& c = r.get("subnets");
        REQUIRE(c.verdict == Verdict::violated);
        REQUIRE(c.witness->subnet.has_value());
        CHECK(s.converges(c.witness->net, c.witness->point));
        CHECK_FALSE(s.converges(c.witness->subnet->net, c.witness->point));
        CHECK(revalidate(s, b, c));
        CHECK(r.get("constant_nets").verdict == Verdict::no_violation_up_to_bound);
    }
    SUBCASE("non-topological convergence breaks the diagonal condition") {
        const ConvergenceStructure c = ConvergenceStructure::from_kernels({3, 6, 4});
        const MsReport r = check_moore_smith(class_from_convergence(c), b);
        CHECK(r.get("diagonal").verdict == Verdict::violated);
        CHECK(r.get("diagonal").witness->frame.has_value());
        CHECK(r.get("diagonal").revalidated);
        CHECK(r.get("subnets").verdict == Verdict::no_violation_up_to_bound);
    }
    for (const auto& s : {class_eventually_constant_min_size(3, 2), class_value_at_index(3, 1),
                          class_eventually_constant_max_size(3, 2)}) {
        const MsReport r = check_moore_smith(s, b);
        CHECK(r.get("subnet_divergence").verdict == r.get("subnet_divergence_alt").verdict);
    }
}

TEST_CASE("bounds are capped") {
    const ConvergenceClass s = class_from_topology(discrete_topology(2));
    CHECK_THROWS_AS(check_moore_smith(s, MsBounds{4, 2, SubnetKind::willard}), CapExceeded);
    CHECK_THROWS_AS(check_moore_smith(s, MsBounds{3, 3, SubnetKind::willard}), CapExceeded);
    CHECK_THROWS_AS(check_moore_smith(class_from_topology(discrete_topology(5))), CapExceeded);
}

TEST_CASE("filter representation and topology bounds") {
    const ConvergenceStructure c = ConvergenceStructure::from_kernels({3, 2});
    const ConvergenceClass s = class_from_convergence(c);
    CHECK(filter_representation(s) == c);
    CHECK_THROWS_AS(filter_representation(class_value_at_index(2, 0)), InputError);

    const TopBounds tb = top_bounds(c);
    CHECK(tb.finest_minus == induced_topology(c));
    CHECK(tb.discrete_in_plus);
    CHECK(tb.indiscrete_in_minus);
    CHECK(tb.report.ok());

    for (const auto& t : all_topologies(3)) {
        const TopBounds b = top_bounds(topology_to_convergence(t));
        CHECK(b.finest_minus == t);
        CHECK(b.report.ok());
    }
    const TopBounds nt = top_bounds(ConvergenceStructure::from_kernels({3, 6, 4}));
    CHECK(nt.finest_minus.opens == std::vector<Mask>{0, 4, 6, 7});
}
