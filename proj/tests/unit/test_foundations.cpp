#include <doctest.h>

#include "ttskit/error.hpp"
#include "ttskit/foundations.hpp"

using namespace ttskit;

TEST_CASE("masks render as ascending arrays") {
    CHECK(render_mask(0) == "[]");
    CHECK(render_mask(0b1101) == "[0,2,3]");
    CHECK(mask_of({3, 0}) == 0b1001);
    CHECK(members(0b1010) == std::vector<int>{1, 3});
}

TEST_CASE("carrier and subset ranges") {
    CHECK_THROWS_AS(Carrier(0), InputError);
    CHECK_THROWS_AS(Carrier(65), CapExceeded);
    const Carrier c(3);
    CHECK(c.all() == 0b111);
    CHECK_THROWS_AS(Subset(c, 0b1000), InputError);
    CHECK_THROWS_AS(Subset::of(c, {3}), InputError);
    const Subset s = Subset::of(c, {2, 0});
    CHECK(s.bits() == 0b101);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.elements() == std::vector<int>{0, 2});
}

TEST_CASE("relations: inverse and composition") {
    const Carrier c(3);
    const Relation r = Relation::of(c, {{0, 1}, {1, 2}});
    CHECK(relation_inverse(r) == Relation::of(c, {{1, 0}, {2, 1}}));
    CHECK(relation_compose(r, r) == Relation::of(c, {{0, 2}}));
    CHECK(relation_compose(Relation::diagonal(c), r) == r);
    CHECK(Relation::all_pairs(c).pairs().size() == 9);
    CHECK_THROWS_AS(Relation::of(c, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Relation(Carrier(9), 0), CapExceeded);
    CHECK(relation_product_bits(2, 0b01, 0b11) == (pair_bit(2, 0, 0) | pair_bit(2, 0, 1)));
}

TEST_CASE("directed pre-orders") {
    const DirectedPreorder ch = DirectedPreorder::chain(3);
    CHECK(ch.leq(0, 2));
    CHECK_FALSE(ch.leq(2, 0));
    CHECK(ch.top() == 0b100);
    CHECK(DirectedPreorder::point().top() == 1);

    SUBCASE("two incomparable points are not directed") {
        const Report r = check_directed_preorder({0b01, 0b10});
        const Check* d = r.find("directed");
        REQUIRE(d != nullptr);
        CHECK_FALSE(d->holds);
        CHECK(d->witness == std::vector<long long>{0, 1});
        CHECK_THROWS_AS(DirectedPreorder::from_up_sets({0b01, 0b10}), InputError);
    }
    SUBCASE("transitivity witness") {
        const Report r = check_directed_preorder({0b011, 0b110, 0b100});
        const Check* t = r.find("transitive");
        CHECK_FALSE(t->holds);
        CHECK(t->witness == std::vector<long long>{0, 1, 2});
    }
    SUBCASE("a cycle collapses to one cluster") {
        const DirectedPreorder p = DirectedPreorder::from_up_sets({0b11, 0b11});
        CHECK(p.top() == 0b11);
    }
    SUBCASE("empty index set") { CHECK_FALSE(check_directed_preorder({}).ok()); }
}

TEST_CASE("principal filters") {
    const Carrier c(3);
    const PrincipalFilter f = make_principal_filter(Subset::of(c, {0}));
    const PrincipalFilter g = make_principal_filter(Subset::of(c, {0, 1}));
    CHECK(f.members() == std::vector<Mask>{0b001, 0b011, 0b101, 0b111});
    CHECK(filter_refines(f, g));
    CHECK_FALSE(filter_refines(g, f));
    CHECK(filter_meet(f, make_principal_filter(Subset::of(c, {2}))).core_bits() == 0b101);
    CHECK(point_filter(c, 1).core_bits() == 0b010);
    CHECK_THROWS_AS(make_principal_filter(Subset(c, 0)), InputError);
    CHECK_THROWS_AS(filter_refines(f, point_filter(Carrier(2), 0)), InputError);
    const RelationFilter p = filter_product(f, g);
    CHECK(p.core() == Relation::of(c, {{0, 0}, {0, 1}}));
}

TEST_CASE("group tables") {
    CHECK(check_group(GroupTable::cyclic(4)).ok());
    GroupTable bad{2, {0, 0, 0, 0}};
    CHECK_FALSE(check_group(bad).ok());
    CHECK_THROWS_AS(group_axiom_audit(bad), InputError);
    CHECK_FALSE(check_group(GroupTable{2, {0, 1, 1}}).ok());
}

TEST_CASE("setwise extension of a group operation") {
    const GroupTable z3 = GroupTable::cyclic(3);
    const Carrier c(3);
    const PrincipalFilter a = make_principal_filter(Subset::of(c, {1}));
    const PrincipalFilter b = make_principal_filter(Subset::of(c, {0, 1}));
    CHECK(extend_group_op(z3, a, b).core_bits() == 0b110);
    CHECK_THROWS_AS(extend_group_op(z3, point_filter(Carrier(2), 0), point_filter(Carrier(2), 0)), InputError);
}

TEST_CASE("group audit on filters") {
    CHECK(group_axiom_audit(GroupTable::cyclic(1)).ok());
    for (int n : {2, 3, 4}) {
        const Report r = group_axiom_audit(GroupTable::cyclic(n));
        CHECK(r.holds("closure"));
        CHECK(r.holds("associativity"));
        CHECK(r.holds("identity"));
        const Check* inv = r.find("inverses");
        CHECK_FALSE(inv->holds);
        // The first filter without an inverse has core {0,1}.
        CHECK(inv->witness == std::vector<long long>{3});
    }
    CHECK_THROWS_AS(group_axiom_audit(GroupTable::cyclic(7)), CapExceeded);
}
