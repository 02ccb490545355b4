#include "vhh/sectors.hpp"

#include <doctest.h>

#include <random>

using namespace vhh;

TEST_SUITE("sectors") {

TEST_CASE("classification of the admissible corner cases") {
    CHECK(classify_sector(5, 5, 5) == SectorClass::corner);
    CHECK(classify_sector(5, 0, 5) == SectorClass::middle_face);
    CHECK(classify_sector(5, 5, 0) == SectorClass::middle_face);
    CHECK(classify_sector(5, 1, 5) == SectorClass::face);
    CHECK(classify_sector(5, 5, 4) == SectorClass::face);
    CHECK(classify_sector(5, 3, 3) == SectorClass::diagonal);
    CHECK(classify_sector(5, 4, 3) == SectorClass::general);
}

TEST_CASE("enumeration matches the closed-form count") {
    CHECK(sector_count_formula(0) == 1);
    CHECK(sector_count_formula(2) == 9);
    CHECK(sector_count_formula(5) == 30);
    for (int j = 0; j <= 10; ++j) {
        const auto secs = enumerate_sectors(j);
        CHECK(static_cast<long long>(secs.size()) == sector_count_formula(j));
        for (const auto& s : secs) CHECK(s.valid());
    }
}

TEST_CASE("generalized-scale slices cover each sector exactly once") {
    for (int r = 3; r <= 8; ++r) {
        for (const auto& s : sectors_at_r(r)) {
            CHECK(s.valid());
            CHECK(s.r_floor() == r);
        }
    }
}

TEST_CASE("vertex conservation indicator on handpicked tuples") {
    auto sec = [](int j, int sa, int sb) { return SectorTriple{j, sa, sb, 1, 2}; };
    // all four legs identical: smallest two indices equal on both axes
    CHECK(vertex_indicator({sec(4, 3, 2), sec(4, 3, 2), sec(4, 3, 2), sec(4, 3, 2)}));
    // two smallest differ by one on each axis
    CHECK(vertex_indicator({sec(4, 3, 2), sec(4, 4, 3), sec(4, 4, 3), sec(4, 4, 3)}));
}

TEST_CASE("counting sums are order independent") {
    const SectorTriple sigma4 = sectors_at_r(4).front();
    const double fwd = counting_sum_vertex(8, sigma4, 10.0, false);
    const double rev = counting_sum_vertex(8, sigma4, 10.0, true);
    CHECK(fwd == rev);
    CHECK(fwd > 0.0);
}

TEST_CASE("momentum conservation rules out umklapp on sampled tuples") {
    std::mt19937_64 rng(23);
    const auto rep = momentum_conservation_check(10.0, rng, 2000);
    CHECK(rep.pass());
}

} // TEST_SUITE
