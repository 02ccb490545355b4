#include "vhh/forest.hpp"
#include "vhh/util.hpp"

#include <doctest.h>

#include <random>

using namespace vhh;

TEST_SUITE("forest") {

TEST_CASE("forest and tree counts against closed forms") {
    CHECK(count_forests(1) == 1);
    CHECK(count_forests(2) == 2);
    CHECK(count_forests(3) == 7);
    CHECK(count_forests(4) == 38);
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<long long>(enumerate_forests(n).size()) == count_forests(n));
    CHECK(count_spanning_trees_cayley(4) == 16);
    CHECK(count_spanning_trees_cayley(7) == 16807);
    long long trees = 0;
    for (const auto& f : enumerate_forests(4))
        if (f.is_spanning_tree()) ++trees;
    CHECK(trees == 16);
}

TEST_CASE("oversized enumeration is refused with the exact count") {
    try {
        enumerate_forests(9);
        FAIL("expected a refusal");
    } catch (const NumericRefusal& e) {
        CHECK(e.required() == count_forests(9));
    }
}

TEST_CASE("jungle validation rejects cycles") {
    Jungle bad;
    bad.n = 3;
    bad.layers = {{{0, 1}, {1, 2}}, {{0, 2}}};
    CHECK_THROWS_AS(bad.validate(), StructuralError);
    Jungle good;
    good.n = 3;
    good.layers = {{{0, 1}}, {{1, 2}}};
    good.validate();
    CHECK(good.connected());
}

TEST_CASE("jungle enumeration count on three vertices, two layers") {
    // forests on 3 vertices by edge count: 1 empty, 3 with one edge, 3 trees;
    // each edge picks one of two layers: 1 + 3*2 + 3*4 = 19
    CHECK(enumerate_jungles(3, 2).size() == 19);
}

TEST_CASE("interpolation matrix on a single weighted edge") {
    Jungle j;
    j.n = 2;
    j.layers = {{{0, 1}}};
    const auto m = interpolation_matrix(j, {0.3});
    CHECK(m[0][0] == 1.0);
    CHECK(m[1][1] == 1.0);
    CHECK(m[0][1] == doctest::Approx(0.3));
    CHECK(m[1][0] == doctest::Approx(0.3));
    CHECK(min_eigenvalue(m) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("earlier layers are pinned at one, paths take the minimum") {
    Jungle j;
    j.n = 3;
    j.layers = {{{0, 1}}, {{1, 2}}};
    const auto m = interpolation_matrix(j, {0.4});
    CHECK(m[0][1] == doctest::Approx(1.0));
    CHECK(m[1][2] == doctest::Approx(0.4));
    CHECK(m[0][2] == doctest::Approx(0.4));
    CHECK_THROWS_AS(interpolation_matrix(j, {0.4, 0.5}), std::invalid_argument);
}

TEST_CASE("positivity of the interpolation matrix on random draws") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const Jungle j = random_jungle(2 + static_cast<int>(rng() % 5), 3, rng);
        std::vector<double> w(j.layers.back().size());
        for (auto& x : w) x = u(rng);
        CHECK(min_eigenvalue(interpolation_matrix(j, w)) >= -1e-10);
    }
}

TEST_CASE("exponent identities hold on random scale assignments") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const Jungle j = random_jungle(2 + static_cast<int>(rng() % 4), 3, rng,
                                       i % 2 == 0);
        const auto input = random_gn_input(j, rng);
        const auto check = verify_induction(input);
        CHECK(check.fields_ok);
        if (check.tree_applicable) CHECK(check.tree_ok);
    }
}

TEST_CASE("a contraction across components is rejected by name") {
    Jungle j;
    j.n = 4;
    j.layers = {{{0, 1}}, {{2, 3}}};
    GNInput input;
    input.jungle = j;
    input.fields_per_vertex = 4;
    input.contractions = {{0, 0, 2, 0, 1}};  // 0 and 2 share no scale-1 component
    CHECK_THROWS_AS(build_gn_tree(input), StructuralError);
}

TEST_CASE("power counting classes") {
    CHECK(power_count(2).cls == PowerClass::relevant);
    CHECK(power_count(2).exponent_q4 == 4);
    CHECK(power_count(4).cls == PowerClass::marginal);
    CHECK(power_count(4).exponent_q4 == 0);
    CHECK(power_count(6).cls == PowerClass::irrelevant);
    CHECK(power_count(6).exponent_q4 == -4);
    CHECK_THROWS_AS(power_count(3), StructuralError);
}

} // TEST_SUITE
