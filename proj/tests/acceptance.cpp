// Acceptance gate: thirteen numbered criteria, one [PASS]/[FAIL] line each.
// Run with no arguments for the full gate or with criterion numbers to run a
// subset. Exits nonzero when any requested criterion fails.
#include "vhh/arch.hpp"
#include "vhh/config.hpp"
#include "vhh/cutoffs.hpp"
#include "vhh/forest.hpp"
#include "vhh/geometry.hpp"
#include "vhh/propagator.hpp"
#include "vhh/renorm.hpp"
#include "vhh/sectors.hpp"
#include "vhh/suites.hpp"
#include "vhh/util.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace vhh;

// Collects the verdicts of the report rows whose tags are listed; every
// listed tag must be present, asserted rows must pass.
bool rows_pass(const BoundReport& rep, const std::set<std::string>& tags,
               std::string& detail) {
    std::set<std::string> seen;
    bool ok = true;
    for (const auto& row : rep.rows) {
        if (!tags.count(row.tag)) continue;
        seen.insert(row.tag);
        if (row.asserted && !row.pass) {
            ok = false;
            detail += row.tag + " failed (measured " + fmt17(row.measured) +
                      ", bound " + row.bound + "); ";
        }
    }
    for (const auto& tag : tags)
        if (!seen.count(tag)) {
            ok = false;
            detail += tag + " missing; ";
        }
    return ok;
}

bool all_rows_pass(const BoundReport& rep, std::string& detail) {
    bool ok = true;
    for (const auto& row : rep.rows)
        if (row.asserted && !row.pass) {
            ok = false;
            detail += row.tag + " failed (measured " + fmt17(row.measured) +
                      ", bound " + row.bound + "); ";
        }
    return ok;
}

RunConfig base_config() {
    RunConfig cfg;
    cfg.validate();
    return cfg;
}

// 1: the band forms, coordinate maps and factor identities agree to 1e-12.
bool criterion_01(std::string& detail) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const ObliqueMomentum kq{u(rng), u(rng)};
        const CartesianMomentum k = oblique_to_cart(kq);
        const double e1 = band_e(k, 1.0);
        const double e2 = band_e_oblique(kq);
        const double e3 = band_e_quasi(to_quasi(kq));
        worst = std::max(worst, std::abs(e1 - e2));
        worst = std::max(worst, std::abs(std::abs(e3) - std::abs(e2)));
        const auto t = three_factors(kq);
        worst = std::max(worst, std::abs(t[0] * t[1] * t[2] - e2 * e2 / 64.0));
        const auto back = cart_to_oblique(k);
        worst = std::max(worst, std::abs(back.kplus - kq.kplus));
        worst = std::max(worst, std::abs(back.kminus - kq.kminus));
        worst = std::max(worst, std::abs(band_e(rotate_2pi3(k), 1.0) - e1));
    }
    worst = std::max(worst, std::abs(omega(fermi_point_1())));
    worst = std::max(worst, std::abs(omega(fermi_point_2())));
    worst = std::max(worst, std::abs(band_e(fermi_point_1(), 1.0) + 1.0));
    for (const auto& v : vanhove_points())
        worst = std::max(worst, std::abs(band_e_oblique(v)));
    detail = "worst residual " + fmt17(worst);
    return worst <= 1e-12;
}

// 2: cutoff partitions of unity and slice support windows.
bool criterion_02(std::string& detail) {
    const auto rep = cutoffs_suite(base_config());
    return rows_pass(rep, {"chi-support", "chi-partition", "sector-partition",
                           "support-windows"},
                     detail);
}

// 3: numerator entry magnitudes within [0.9, 2] on all slices down to j_max.
bool criterion_03(std::string& detail) {
    const GevreyCutoff chi(2.0);
    const auto rep = verify_a_bounds(1, compute_j_max(1e-3, 10.0), 10.0, 1e-3, chi);
    return all_rows_pass(rep, detail) && rows_pass(rep, {"a-matrix-band"}, detail);
}

// 4: scaled slice norms form tight bands across scales and sector classes.
bool criterion_04(std::string& detail) {
    const auto rep = propagator_suite(base_config());
    return rows_pass(rep, {"slice-sup-band", "slice-l1-band",
                           "decay-prefactor-band", "decay-exponent"},
                     detail);
}

// 5: sectors violating the depth constraint carry no support.
bool criterion_05(std::string& detail) {
    const GevreyCutoff chi(2.0);
    bool ok = true;
    for (int j : {4, 6, 8}) {
        const auto rep = empty_sector_audit(j, 10.0, chi);
        ok = all_rows_pass(rep, detail) && ok;
    }
    return ok;
}

// 6: sector-counting sums grow no faster than the claimed powers of r.
bool criterion_06(std::string& detail) {
    const auto cfg = base_config();
    std::mt19937_64 rng(cfg.seed);
    const auto rep = counting_suite(cfg, rng);
    return rows_pass(rep, {"vertex-sum-growth", "quadruped-sum-growth",
                           "biped-sum-growth"},
                     detail);
}

// 7: interpolation identities, positivity and the exact enumeration counts.
bool criterion_07(std::string& detail) {
    const auto cfg = base_config();
    std::mt19937_64 rng(cfg.seed);
    const auto rep = forest_suite(cfg, rng);
    return rows_pass(rep, {"forest-count", "spanning-tree-count",
                           "interpolation-psd", "scale-exponent-identity",
                           "tree-exponent-identity"},
                     detail);
}

// 8: arch systems produce the claimed irreducibility, ring index and weights.
bool criterion_08(std::string& detail) {
    std::mt19937_64 rng(base_config().seed);
    const auto rep = arch_suite(rng);
    return rows_pass(rep, {"one-level-1pi", "two-level-2pi",
                           "two-level-irreducible", "ring-minimax",
                           "flyover-growth"},
                     detail);
}

// 9: per-scale tadpole rates band together, totals are stable in T, and the
// sector sum matches the dense oracle.
bool criterion_09(std::string& detail) {
    const GevreyCutoff chi(2.0);
    const double gamma = 10.0;
    const int res = 64;
    bool ok = true;

    double lo = 0.0, hi = 0.0;
    const int j_max = compute_j_max(1e-3, gamma);
    for (int j = 2; j <= j_max; ++j) {
        const double rate = tadpole_scale(j, gamma, 1e-3, chi, res).abs_value /
                            (j * powi(gamma, -j));
        if (lo == 0.0 || rate < lo) lo = rate;
        hi = std::max(hi, rate);
    }
    const double band = hi / lo;
    detail += "rate band " + fmt17(band);
    if (band > 10.0) ok = false;

    std::vector<double> totals;
    for (double T : {1e-2, 1e-3})
        totals.push_back(std::abs(delta_mu_flow(gamma, T, 1.0, chi, res).total));
    const double tband = std::max(totals[0], totals[1]) / std::min(totals[0], totals[1]);
    detail += ", temperature band " + fmt17(tband);
    if (tband > 3.0) ok = false;

    // scale 1 at T = 1e-2: the frequency floor sits inside the slice and the
    // quadrature is stable; deeper slices cancel too sharply to gate on
    const auto sector = tadpole_scale(1, gamma, 1e-2, chi, res);
    const auto oracle = tadpole_scale_oracle(1, gamma, 1e-2, chi, 8 * res);
    const double rel = std::max(
        std::abs(sector.signed_value - oracle.signed_value) / std::abs(oracle.signed_value),
        std::abs(sector.abs_integrand - oracle.abs_integrand) / oracle.abs_integrand);
    detail += ", oracle deviation " + fmt17(rel);
    if (rel > 0.01) ok = false;
    return ok;
}

// 10: counter-term cancellation is exact; localization splits exactly, is
// idempotent, and its remainder shrinks toward the surface.
bool criterion_10(std::string& detail) {
    const GevreyCutoff chi(2.0);
    bool ok = true;

    const auto flow = delta_mu_flow(10.0, 1e-3, 1e-2, chi, 64);
    double worst = 0.0;
    for (size_t j = 0; j < flow.t_scale.size(); ++j)
        worst = std::max(worst, std::abs(flow.t_scale[j] + flow.delta_mu[j]));
    detail += "cancellation residual " + fmt17(worst);
    if (worst != 0.0) ok = false;

    const int n = 64;
    const SunshineEvaluator ev(0.1, n, 1.0);
    const ObliqueMomentum off{1.25, 0.5};
    const auto split = localize(ev, off, 0);
    const double exact = std::abs(split.tau + split.remainder - split.sigma);
    detail += ", split residual " + fmt17(exact);
    if (exact > 1e-12) ok = false;

    const ObliqueMomentum foot{ev.grid_coord(split.foot_plus),
                               ev.grid_coord(split.foot_minus)};
    const double idem = std::abs(localize(ev, foot, 0).remainder);
    detail += ", idempotence residual " + fmt17(idem);
    if (idem > 1e-12) ok = false;

    double prev = 1e300;
    for (int cells : {n / 4, n / 16, 1}) {
        const ObliqueMomentum k{1.0 + 2.0 * cells / n, 0.5};
        const auto s = localize(ev, k, 0);
        const double rel = std::abs(s.remainder) / std::abs(s.sigma);
        if (rel >= prev) {
            ok = false;
            detail += ", remainder not monotone at distance " + std::to_string(cells);
        }
        prev = rel;
    }
    detail += ", nearest relative remainder " + fmt17(prev);
    return ok;
}

// 11: second-order self-energy derivative growth in 1/T at the saddle point,
// strictly slower away from it on the zero line.
bool criterion_11(std::string& detail) {
    const std::vector<double> t_list{0.1, 0.05, 0.025, 0.0125};
    const int res = 256;
    std::vector<SweepRow> rows_vh, rows_fs;
    for (double T : t_list) {
        const SunshineEvaluator ev(T, res, 1.0);
        rows_vh.push_back(sweep_point(ev, {1.0, 1.0}));
        rows_fs.push_back(sweep_point(ev, {1.0, 0.5}));
    }
    const auto fit_vh = sweep_fit(rows_vh);
    const auto fit_fs = sweep_fit(rows_fs);
    detail = "saddle slopes sup " + fmt17(fit_vh.slope_sup) + ", d1 " +
             fmt17(fit_vh.slope_d1) + ", d2 " + fmt17(fit_vh.slope_d2) +
             "; zero-line d2 " + fmt17(fit_fs.slope_d2);
    bool ok = std::abs(fit_vh.slope_sup + 1.0) <= 0.3;
    ok = ok && std::abs(fit_vh.slope_d1) <= 0.3;
    ok = ok && std::abs(fit_vh.slope_d2 - 1.0) <= 0.3;
    ok = ok && fit_fs.slope_d2 < fit_vh.slope_d2;
    return ok;
}

// 12: resolvent series of the dressed propagator obeys |R| <= K|lambda| with
// K stable across two decades of coupling.
bool criterion_12(std::string& detail) {
    const GevreyCutoff chi(2.0);
    const double T = 1e-2;
    const SunshineEvaluator ev(T, 64, 1.0);
    double tad = 0.0;
    for (int j = 0; j <= compute_j_max(T, 10.0); ++j)
        tad += tadpole_scale(j, 10.0, T, chi, 64).signed_value;
    std::vector<double> ks;
    bool ok = true;
    for (double lam : {1e-3, 1e-2}) {
        const auto rc = resolvent_check(ev, tad, lam, 96);
        ks.push_back(rc.k_fitted);
        detail += "K(" + fmt17(lam) + ") = " + fmt17(rc.k_fitted) + "; ";
        ok = ok && rc.in_domain && rc.tail_ok;
    }
    const double ratio = std::max(ks[0], ks[1]) / std::min(ks[0], ks[1]);
    detail += "ratio " + fmt17(ratio);
    return ok && ratio <= 3.0;
}

// 13: repeated CLI runs are byte-identical, also across worker settings.
std::string capture(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(VHH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = pclose(p);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool criterion_13(std::string& detail) {
    const std::vector<std::string> probes{
        "dump-surface --n 24",
        "sectors --j 6",
        "tadpole sweep --gamma 10 --T 1e-2",
        "--set out_dir=/tmp check bounds --suite cutoffs",
    };
    for (const auto& probe : probes) {
        int c1 = 0, c2 = 0, c3 = 0;
        const std::string a = capture(probe, c1);
        const std::string b = capture(probe, c2);
        const std::string c = capture("--set workers=2 " + probe, c3);
        if (c1 != 0 || c2 != 0 || c3 != 0) {
            detail = "nonzero exit running: " + probe;
            return false;
        }
        if (a != b || a != c) {
            detail = "outputs differ for: " + probe;
            return false;
        }
    }
    detail = "all probes byte-identical across reruns and worker settings";
    return true;
}

struct Criterion {
    int number;
    const char* title;
    bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "band geometry identities", criterion_01},
    {2, "cutoff partitions and support windows", criterion_02},
    {3, "numerator magnitude bounds per slice", criterion_03},
    {4, "scaled slice norm bands", criterion_04},
    {5, "inadmissible sectors are empty", criterion_05},
    {6, "sector counting sum growth", criterion_06},
    {7, "interpolation identities and counts", criterion_07},
    {8, "arch irreducibility and ring index", criterion_08},
    {9, "tadpole scale and temperature bands", criterion_09},
    {10, "counter-term cancellation and localization", criterion_10},
    {11, "self-energy derivative growth", criterion_11},
    {12, "resolvent series bound", criterion_12},
    {13, "byte-identical reruns", criterion_13},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > 13) {
            std::cerr << "usage: " << argv[0] << " [criterion numbers 1..13]\n";
            return 2;
        }
        wanted.insert(n);
    }
    bool all_ok = true;
    for (const auto& c : kCriteria) {
        if (!wanted.empty() && !wanted.count(c.number)) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %02d: %s%s%s\n", ok ? "PASS" : "FAIL",
                    c.number, c.title, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
