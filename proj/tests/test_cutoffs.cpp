#include "vhh/cutoffs.hpp"
#include "vhh/sectors.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace vhh;

TEST_SUITE("cutoffs") {

TEST_CASE("bump plateau, tail and symmetry") {
    const GevreyCutoff chi(2.0);
    CHECK(chi(0.0) == 1.0);
    CHECK(chi(0.9) == 1.0);
    CHECK(chi(-1.0) == 1.0);
    CHECK(chi(2.0) == 0.0);
    CHECK(chi(2.5) == 0.0);
    const double mid = chi(1.5);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    CHECK(chi(-1.5) == mid);
    double prev = 1.0;
    for (int i = 1; i <= 40; ++i) {
        const double v = chi(1.0 + i / 40.0);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("scale slices partition unity above the deepest slice") {
    const GevreyCutoff chi(2.0);
    const double gamma = 10.0;
    const int J = 4;
    for (double t = 2.0 * std::pow(gamma, -2.0 * J); t < 10.0; t *= 1.7) {
        double sum = 0.0;
        for (int j = 0; j <= J; ++j) sum += chi_j(chi, t, j, gamma);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("scale slice support window") {
    const GevreyCutoff chi(2.0);
    const double gamma = 10.0;
    for (int j = 1; j <= 4; ++j) {
        const double lo = std::pow(gamma, -2.0 * j);
        const double hi = 2.0 * std::pow(gamma, -2.0 * j + 2.0);
        CHECK(chi_j(chi, 0.5 * lo, j, gamma) == 0.0);
        CHECK(chi_j(chi, 1.5 * hi, j, gamma) == 0.0);
        CHECK(chi_j(chi, gamma * lo, j, gamma) > 0.5);
    }
}

TEST_CASE("sector slices telescope to one everywhere") {
    const GevreyCutoff chi(2.0);
    const double gamma = 10.0;
    const int j = 4;
    for (double t = 0.0; t <= 2.5; t += 0.0125) {
        double sum = 0.0;
        for (int s = 0; s <= j; ++s) sum += v_s(chi, t, s, j, gamma);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("deepest scale at frozen temperatures") {
    CHECK(compute_j_max(1e-3, 10.0) == 3);
    CHECK(compute_j_max(1e-4, 10.0) == 4);
    CHECK(compute_j_max(1e-2, 10.0) == 2);
    CHECK_THROWS_AS(compute_j_max(0.0, 10.0), std::domain_error);
    const ScaleSystem sys(10.0, 1e-3);
    CHECK(sys.j_max == 3);
    CHECK(sys.r_max >= sys.j_max);
}

TEST_CASE("sector index bookkeeping") {
    const SectorTriple s{5, 3, 4, 1, 2};
    CHECK(s.valid());
    CHECK(s.depth_l() == 4);
    CHECK(s.r2() == 14);
    CHECK(s.r_floor() == 7);
    const SectorTriple shallow{4, 1, 0, 1, 2};
    CHECK_FALSE(shallow.valid());
    const SectorTriple same_axis{3, 1, 1, 2, 2};
    CHECK_FALSE(same_axis.valid());
}

TEST_CASE("derivative growth scan stays within the Gevrey envelope") {
    const GevreyCutoff chi(2.0);
    const auto rep = gevrey_check(chi, 5);
    CHECK(rep.pass());
}

TEST_CASE("Fourier envelope of a window decays with stretch exponent 1/h") {
    const GevreyCutoff chi(2.0);
    const auto fd = fourier_decay_fit(chi);
    CHECK(fd.points >= 3);
    CHECK(fd.r2 > 0.9);
    CHECK(fd.alpha == doctest::Approx(chi.alpha()).epsilon(0.4));
}

} // TEST_SUITE
