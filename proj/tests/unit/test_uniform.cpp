#include <doctest.h>

#include "helpers.hpp"
#include "naive.hpp"
#include "ttskit/convergence.hpp"
#include "ttskit/error.hpp"
#include "ttskit/uniform.hpp"
#include "ttskit/workbench/enumerate.hpp"

using namespace ttskit;

namespace {

// Every nonempty subrelation of `top`.
UniformConvergenceStructure below(int n, std::uint64_t top) {
    std::vector<std::uint64_t> g;
    for (std::uint64_t r = top; r; r = (r - 1) & top) g.push_back(r);
    return make_ucs(n, g);
}

}  // namespace

TEST_CASE("uniform convergence axioms") {
    CHECK(check_ucs_axioms(below(2, 0b1001)).ok());
    CHECK(check_ucs_axioms(make_ucs(2, {1})).find("diagonal_points")->witness == W({1}));

    SUBCASE("missing inverse") {
        const UniformConvergenceStructure u = below(2, 0b1011);
        const Report r = check_ucs_axioms(u);
        CHECK(r.find("inverse_closed")->witness == W({2}));
        CHECK(r.holds("composition_closed"));
        CHECK(r.holds("meet_closed"));
        CHECK(naive::compare(r, naive::ucs_axioms(u)).empty());
    }
    SUBCASE("missing composite") {
        const std::uint64_t top = pair_bit(3, 0, 0) | pair_bit(3, 1, 1) | pair_bit(3, 2, 2) | pair_bit(3, 0, 1) |
                                  pair_bit(3, 1, 0) | pair_bit(3, 1, 2) | pair_bit(3, 2, 1);
        const UniformConvergenceStructure u = below(3, top);
        const Report r = check_ucs_axioms(u);
        CHECK_FALSE(r.holds("composition_closed"));
        CHECK(r.holds("inverse_closed"));
        CHECK(naive::compare(r, naive::ucs_axioms(u)).empty());
    }
    SUBCASE("missing union and missing subrelation") {
        const UniformConvergenceStructure u = make_ucs(2, {1, 8, 0b1001, 0b0110});
        const Report r = check_ucs_axioms(u);
        CHECK(r.find("refinement_closed")->witness == W({6, 2}));
        CHECK(r.find("meet_closed")->witness == W({1, 6}));
        CHECK(naive::compare(r, naive::ucs_axioms(u)).empty());
    }
}

TEST_CASE("make_ucs validation") {
    CHECK(make_ucs(2, {9, 1, 8, 1}).generators == std::vector<std::uint64_t>{1, 8, 9});
    CHECK_FALSE(check_ucs_axioms(make_ucs(2, {})).holds("diagonal_points"));
    CHECK_THROWS_AS(make_ucs(2, {16}), InputError);
    CHECK_THROWS_AS(make_ucs(5, {1}), CapExceeded);
    CHECK(make_ucs(2, {1}).contains(1));
    CHECK_FALSE(make_ucs(2, {1}).contains(8));
}

TEST_CASE("finite uniformities") {
    const FiniteUniformity u = load_document<FiniteUniformity>("partition-uniformity.json");
    CHECK(check_uniformity(u).ok());
    CHECK(u.class_of(1) == 0b011);
    CHECK(u.classes() == std::vector<Mask>{0b011, 0b100});
    CHECK(uniform_topology(u).opens == std::vector<Mask>{0, 3, 4, 7});
    CHECK(uniformity_from_classes(3, {0b011, 0b100}).entourage == u.entourage);

    const Report r = check_uniformity({2, pair_bit(2, 0, 0) | pair_bit(2, 0, 1)});
    CHECK(r.find("reflexive")->witness == W({1}));
    CHECK(r.find("symmetric")->witness == W({0, 1}));
    CHECK(r.holds("transitive"));
    const std::uint64_t path = pair_bit(3, 0, 1) | pair_bit(3, 1, 2);
    CHECK(check_uniformity({3, path}).find("transitive")->witness == W({0, 1, 2}));
    CHECK_THROWS_AS(make_uniformity(2, pair_bit(2, 0, 0)), InputError);
}

TEST_CASE("uniformity census is the Bell numbers") {
    const std::vector<std::size_t> bell = {1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) CHECK(workbench::enumerate_uniformities(n).size() == bell[n - 1]);
    for (int n = 1; n <= 4; ++n) {
        CHECK(naive::count_equivalences(n) == bell[n - 1]);
        const auto us = workbench::enumerate_ucs(n);
        CHECK(us.size() == bell[n - 1]);
        for (const auto& u : us) CHECK(check_ucs_axioms(u).ok());
    }
    CHECK(naive::count_ucs_families(1) == 1);
    CHECK(naive::count_ucs_families(2) == 2);
}

TEST_CASE("uniform embedding") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& u : workbench::enumerate_uniformities(n)) {
            const SigmaUpsilon su = build_sigma_upsilon(u);
            CHECK(su.report.ok());
            CHECK(check_axioms(su.structure).ok());
            CHECK(is_complete(su.structure.tts));
            const Tts e = embed_ucs(ucs_from_uniformity(u));
            CHECK(e.xi == su.structure.tts.xi);
            CHECK(check_axioms(e).ok());
        }
}

TEST_CASE("uniform embedding relates filters inside one class") {
    const FiniteUniformity u = load_document<FiniteUniformity>("partition-uniformity.json");
    const Tts s = build_sigma_upsilon(u).structure.tts;
    CHECK(s.xi.test(filter_token(0b001), filter_token(0b010)));
    CHECK(s.xi.test(filter_token(0b011), filter_token(0b011)));
    CHECK_FALSE(s.xi.test(filter_token(0b001), filter_token(0b100)));
    CHECK_FALSE(s.xi.test(filter_token(0b101), filter_token(0b101)));
    CHECK(relation_transitivity(s).holds);
}
