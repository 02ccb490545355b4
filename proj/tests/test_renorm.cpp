#include "vhh/renorm.hpp"
#include "vhh/util.hpp"

#include <doctest.h>

#include <cmath>

using namespace vhh;

TEST_SUITE("renorm") {

TEST_CASE("fft convolution matches the direct triple loop") {
    const SunshineEvaluator ev(0.5, 8, 1.0, 4);
    const int probes[4][3] = {{1, 1, 0}, {0, 3, 1}, {5, 2, -2}, {7, 7, 2}};
    for (const auto& p : probes) {
        const int ip = p[0], im = p[1], nq = p[2];
        const auto fast = ev.sigma(ip, im, nq);
        const auto slow = ev.sigma_brute(ip, im, nq);
        CHECK(std::abs(fast - slow) <= 1e-10 * std::max(1e-30, std::abs(slow)));
    }
}

TEST_CASE("brute force is refused above the tractable size") {
    const SunshineEvaluator ev(0.5, 16, 1.0, 4);
    CHECK_THROWS_AS(ev.sigma_brute(0, 0, 0), NumericRefusal);
}

TEST_CASE("self-energy scales with the coupling squared") {
    const SunshineEvaluator e1(0.25, 8, 1.0, 8);
    const SunshineEvaluator e2(0.25, 8, 2.0, 8);
    const auto a = e1.sigma(2, 5, 0);
    const auto b = e2.sigma(2, 5, 0);
    CHECK(std::abs(b - 4.0 * a) <= 1e-12 * std::abs(b));
}

TEST_CASE("reflection of the external frequency conjugates the value") {
    const SunshineEvaluator ev(0.25, 8, 1.0, 16);
    for (int nq : {0, 1}) {
        const auto plus = ev.sigma(3, 6, nq);
        const auto minus = ev.sigma(3, 6, -nq - 1);
        CHECK(std::abs(minus - std::conj(plus)) <= 1e-10 * std::abs(plus));
    }
}

TEST_CASE("grid index round trip") {
    const SunshineEvaluator ev(0.5, 8, 1.0, 4);
    for (int i = 0; i < 8; ++i) CHECK(ev.grid_index(ev.grid_coord(i)) == i);
    CHECK(ev.grid_index(1.0) == ev.grid_index(-1.0));  // periodic wrap
}

TEST_CASE("matsubara truncation follows the frozen clamp") {
    const SunshineEvaluator ev(1e-2, 8, 1.0);
    CHECK(ev.modes_per_sign() == 255);
    const SunshineEvaluator hot(10.0, 8, 1.0);
    CHECK(hot.modes_per_sign() == 16);
}

TEST_CASE("tadpole sector sum converges to the dense oracle") {
    const GevreyCutoff chi(2.0);
    const auto t = tadpole_scale(1, 10.0, 1e-2, chi, 64);
    const auto oracle = tadpole_scale_oracle(1, 10.0, 1e-2, chi, 512);
    CHECK(std::abs(t.signed_value - oracle.signed_value) <=
          0.01 * std::abs(oracle.signed_value));
    CHECK(std::abs(t.abs_integrand - oracle.abs_integrand) <=
          0.01 * oracle.abs_integrand);
    CHECK(t.abs_value >= std::abs(t.signed_value));
    CHECK(t.abs_integrand >= t.abs_value);
    CHECK(t.modes > 0);
}

TEST_CASE("counter-term flow cancels scale by scale and is linear in lambda") {
    const GevreyCutoff chi(2.0);
    const auto f1 = delta_mu_flow(10.0, 1e-2, 0.5, chi, 16);
    const auto f2 = delta_mu_flow(10.0, 1e-2, 1.0, chi, 16);
    REQUIRE(f1.t_scale.size() == f2.t_scale.size());
    for (size_t j = 0; j < f1.t_scale.size(); ++j) {
        CHECK(f1.delta_mu[j] == -f1.t_scale[j]);
        CHECK(f1.t_scale[j] == 0.5 * f2.t_scale[j]);  // exact power-of-two scaling
    }
}

TEST_CASE("localization splits exactly and fixes its image") {
    const SunshineEvaluator ev(0.1, 16, 1.0);
    const ObliqueMomentum off{1.25, 0.5};
    const auto split = localize(ev, off, 0);
    CHECK(std::abs(split.tau + split.remainder - split.sigma) == 0.0);
    const ObliqueMomentum foot{ev.grid_coord(split.foot_plus),
                               ev.grid_coord(split.foot_minus)};
    const auto twice = localize(ev, foot, 0);
    CHECK(std::abs(twice.remainder) <= 1e-14);
}

TEST_CASE("sweep rows are finite and positive at the saddle point") {
    const auto rows = derivative_sweep({0.2, 0.1}, 16, 1.0, {1.0, 1.0});
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        CHECK(std::isfinite(r.abs_sigma));
        CHECK(r.abs_sigma > 0.0);
        CHECK(r.abs_renorm > 0.0);
        CHECK(r.abs_renorm <= r.abs_sigma);
        CHECK(r.d1 >= 0.0);
        CHECK(r.d2_k0 >= 0.0);
        CHECK(r.d2_spatial >= 0.0);
    }
    const auto fit = sweep_fit(rows);
    CHECK(std::isfinite(fit.slope_sup));
}

TEST_CASE("resolvent series stays in its convergence domain at weak coupling") {
    const SunshineEvaluator ev(1e-2, 16, 1.0);
    const auto rc = resolvent_check(ev, -0.1, 1e-3, 32);
    CHECK(rc.in_domain);
    CHECK(rc.tail_ok);
    CHECK(rc.max_rho < 1.0);
    CHECK(rc.k_fitted > 0.0);
}

} // TEST_SUITE
