#include "vhh/sectors.hpp"
#include "vhh/geometry.hpp"
#include "vhh/util.hpp"

#include <algorithm>
#include <cmath>

namespace vhh {

std::string to_string(SectorClass c) {
    switch (c) {
        case SectorClass::face: return "face";
        case SectorClass::middle_face: return "middle-face";
        case SectorClass::corner: return "corner";
        case SectorClass::diagonal: return "diagonal";
        case SectorClass::general: return "general";
    }
    return "?";
}

SectorClass classify_sector(int j, int sa, int sb) {
    if (sa == j && sb == j) return SectorClass::corner;
    if ((sa == 0 && sb == j) || (sa == j && sb == 0)) return SectorClass::middle_face;
    if (sa == j || sb == j) return SectorClass::face;
    if (sa == sb) return SectorClass::diagonal;
    return SectorClass::general;
}

std::vector<SectorTriple> enumerate_sectors(int j, int axis_a, int axis_b) {
    if (j < 0) throw std::invalid_argument("enumerate_sectors: j >= 0 required");
    std::vector<SectorTriple> out;
    for (int sa = 0; sa <= j; ++sa) {
        for (int sb = 0; sb <= j; ++sb) {
            if (sa + sb < j - 2) continue;
            out.push_back({j, sa, sb, axis_a, axis_b});
        }
    }
    return out;
}

long long sector_count_formula(int j) {
    const long long full = static_cast<long long>(j + 1) * (j + 1);
    if (j < 3) return full;
    // pairs with s_a + s_b <= j-3: triangular count
    const long long cut = static_cast<long long>(j - 2) * (j - 1) / 2;
    return full - cut;
}

std::vector<SectorTriple> sectors_at_r(int r) {
    std::vector<SectorTriple> out;
    for (int j = 0; j <= 2 * r; ++j) {
        for (int twor = 2 * r; twor <= 2 * r + 1; ++twor) {
            const int t = twor - 2 - j;  // s_a + s_b
            if (t < 0) continue;
            for (int sa = std::max(0, t - j); sa <= std::min(j, t); ++sa) {
                SectorTriple s{j, sa, t - sa, 1, 2};
                if (s.valid()) out.push_back(s);
            }
        }
    }
    return out;
}

BoundReport empty_sector_audit(int j, double gamma, const GevreyCutoff& chi,
                               int grid_n) {
    if (j < 2) throw std::invalid_argument("empty_sector_audit: j >= 2 required");
    BoundReport rep;
    rep.suite = "counting";

    // k0 samples across the scale-j frequency window
    std::vector<double> k0s;
    {
        const double lo = 0.5 * powi(gamma, -j - 1);
        const double hi = std::sqrt(0.5) * powi(gamma, -j);
        for (int i = 0; i < 5; ++i) k0s.push_back(lo + (hi - lo) * i / 4.0);
    }

    auto window = [&](int s) {
        // |q| extent of the sector-s support around the zero line (plus slack)
        if (s == 0) return 1.0;
        return 1.05 * (2.0 * std::sqrt(2.0) / M_PI) * powi(gamma, -s);
    };

    // The index constraint is claimed only where the two sliced factors are
    // the small ones, equivalently where the third cosine sits at or above
    // its guaranteed floor.  Points with a small third factor belong to a
    // different axis pair of the decomposition and must not count as
    // violations here.
    const double kprime = std::sqrt(0.5) * (1.0 - 2.0 / (gamma * gamma));

    auto scan_pair = [&](int sa, int sb, double& sup, double& min_third) {
        sup = 0.0;
        min_third = 1.0;
        const double wa = window(sa), wb = window(sb);
        for (int ia = 0; ia <= grid_n; ++ia) {
            const double qa = -wa + 2.0 * wa * ia / grid_n;
            for (int ib = 0; ib <= grid_n; ++ib) {
                const double qb = -wb + 2.0 * wb * ib / grid_n;
                const ObliqueMomentum kq{1.0 + qa, 1.0 + qb};
                const double e = band_e_oblique(kq);
                const auto t = three_factors(kq);
                const double vv = v_s(chi, t[0], sa, j, gamma) *
                                  v_s(chi, t[1], sb, j, gamma);
                if (vv == 0.0) continue;
                const double third = std::sqrt(t[2]);
                for (double k0 : k0s) {
                    const double p = chi_j(chi, 4.0 * k0 * k0 + e * e, j, gamma) * vv;
                    if (third >= kprime && p > sup) sup = p;
                    if (p > 1e-6 && third < min_third) min_third = third;
                }
            }
        }
    };

    double worst_violating = 0.0;
    double min_third_deep = 1.0;
    bool corner_nonempty = false;
    for (int sa = 0; sa <= j; ++sa) {
        for (int sb = 0; sb <= j; ++sb) {
            double sup = 0.0, third = 1.0;
            scan_pair(sa, sb, sup, third);
            if (sa + sb < j - 2) {
                if (sup > worst_violating) worst_violating = sup;
            } else if (sa >= 2 && sb >= 2) {
                if (third < min_third_deep) min_third_deep = third;
            }
            if (sa == j && sb == j && sup > 0.0) corner_nonempty = true;
        }
    }

    CheckRow empt;
    empt.tag = "sector-emptiness";
    empt.name = "j=" + std::to_string(j) + " violating pairs sup";
    empt.measured = worst_violating;
    empt.bound = "< 1e-10";
    empt.ratio = worst_violating / 1e-10;
    empt.pass = worst_violating < 1e-10;
    rep.add(empt);

    CheckRow third;
    third.tag = "third-factor-floor";
    third.name = "j=" + std::to_string(j) + " min |cos| on deep supports";
    third.measured = min_third_deep;
    third.bound = ">= " + fmt17(kprime);
    third.ratio = min_third_deep / kprime;
    third.pass = min_third_deep >= kprime;
    rep.add(third);

    CheckRow corner;
    corner.tag = "sector-emptiness";
    corner.name = "j=" + std::to_string(j) + " corner sector nonempty";
    corner.measured = corner_nonempty ? 1.0 : 0.0;
    corner.bound = "> 0";
    corner.ratio = 1.0;
    corner.pass = corner_nonempty;
    rep.add(corner);

    return rep;
}

namespace {

// One sliced axis of the conservation rule.
bool axis_rule(const std::array<int, 4>& s, const std::array<int, 4>& j) {
    int i1 = 0;
    for (int i = 1; i < 4; ++i)
        if (s[static_cast<size_t>(i)] < s[static_cast<size_t>(i1)]) i1 = i;
    int i2 = -1;
    for (int i = 0; i < 4; ++i) {
        if (i == i1) continue;
        if (i2 < 0 || s[static_cast<size_t>(i)] < s[static_cast<size_t>(i2)]) i2 = i;
    }
    if (s[static_cast<size_t>(i2)] - s[static_cast<size_t>(i1)] <= 1) return true;
    if (s[static_cast<size_t>(i1)] == j[static_cast<size_t>(i1)]) {
        for (int i = 0; i < 4; ++i) {
            if (i != i1 && j[static_cast<size_t>(i)] <= j[static_cast<size_t>(i1)]) return false;
        }
        return true;
    }
    return false;
}

} // namespace

bool vertex_indicator(const std::array<SectorTriple, 4>& legs) {
    std::array<int, 4> sa{}, sb{}, jj{};
    for (int i = 0; i < 4; ++i) {
        sa[static_cast<size_t>(i)] = legs[static_cast<size_t>(i)].sa;
        sb[static_cast<size_t>(i)] = legs[static_cast<size_t>(i)].sb;
        jj[static_cast<size_t>(i)] = legs[static_cast<size_t>(i)].j;
    }
    return axis_rule(sa, jj) && axis_rule(sb, jj);
}

namespace {

double sum_from_counts(const std::vector<std::uint64_t>& counts, double gamma) {
    // Exact: value = sum_m counts[m] gamma^{-m/4}; order-free by construction.
    const double q = std::pow(gamma, -0.25);
    double acc = 0.0;
    for (size_t m = counts.size(); m-- > 0;) {
        if (counts[m] != 0) acc += static_cast<double>(counts[m]) * powi(q, static_cast<long long>(m));
    }
    return acc;
}

double vertex_sum_over(const std::vector<SectorTriple>& cat,
                       const SectorTriple& sigma4, double gamma, bool reverse) {
    const size_t n = cat.size();
    const int lmax = [&] {
        int m = 0;
        for (const auto& s : cat) m = std::max(m, s.depth_l());
        return m;
    }();
    std::vector<std::uint64_t> counts(static_cast<size_t>(3 * lmax) + 1, 0);

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = reverse ? n - 1 - i : i;

    std::array<SectorTriple, 4> legs{};
    legs[3] = sigma4;
    for (size_t a : order) {
        legs[0] = cat[a];
        for (size_t b : order) {
            legs[1] = cat[b];
            for (size_t c : order) {
                legs[2] = cat[c];
                if (vertex_indicator(legs)) {
                    const int m = legs[0].depth_l() + legs[1].depth_l() + legs[2].depth_l();
                    ++counts[static_cast<size_t>(m)];
                }
            }
        }
    }
    return sum_from_counts(counts, gamma);
}

} // namespace

double counting_sum_vertex(int r, const SectorTriple& sigma4, double gamma,
                           bool reverse_order) {
    if (r < 1) throw std::invalid_argument("counting_sum_vertex: r >= 1");
    return vertex_sum_over(sectors_at_r(r), sigma4, gamma, reverse_order);
}

double counting_sum_vertex_mixed(int r, const SectorTriple& sigma4, double gamma) {
    auto cat = sectors_at_r(r);
    if (r >= 2) {
        auto lower = sectors_at_r(r - 1);
        cat.insert(cat.end(), lower.begin(), lower.end());
    }
    return vertex_sum_over(cat, sigma4, gamma, false);
}

namespace {

// Pairwise compatibility used by the chain sums: per axis, indices within 1,
// or the smaller one sits at its own (strictly smaller) scale.
bool pair_compatible(const SectorTriple& x, const SectorTriple& y) {
    auto ok = [&](int sx, int sy) {
        if (std::abs(sx - sy) <= 1) return true;
        if (sx < sy) return sx == x.j && x.j < y.j;
        return sy == y.j && y.j < x.j;
    };
    return ok(x.sa, y.sa) && ok(x.sb, y.sb);
}

double chain_sum(int r, int factors, double gamma) {
    if (factors <= 0) return 1.0;
    const auto cat = sectors_at_r(r);
    const size_t n = cat.size();
    int lmax = 0;
    for (const auto& s : cat) lmax = std::max(lmax, s.depth_l());
    const size_t mbins = static_cast<size_t>(lmax) * static_cast<size_t>(factors) + 1;

    // f[sigma][m]: number of admissible chains ending at sigma with summed
    // depth m; coefficients stay integers, stored in doubles.
    std::vector<std::vector<double>> f(n, std::vector<double>(mbins, 0.0));
    for (size_t i = 0; i < n; ++i) f[i][static_cast<size_t>(cat[i].depth_l())] = 1.0;

    std::vector<std::vector<char>> compat(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) compat[i][k] = pair_compatible(cat[i], cat[k]) ? 1 : 0;

    for (int step = 1; step < factors; ++step) {
        std::vector<std::vector<double>> g(n, std::vector<double>(mbins, 0.0));
        for (size_t to = 0; to < n; ++to) {
            const size_t shift = static_cast<size_t>(cat[to].depth_l());
            for (size_t from = 0; from < n; ++from) {
                if (!compat[from][to]) continue;
                const auto& src = f[from];
                auto& dst = g[to];
                for (size_t m = 0; m + shift < mbins; ++m) {
                    if (src[m] != 0.0) dst[m + shift] += src[m];
                }
            }
        }
        f.swap(g);
    }

    const double q = std::pow(gamma, -0.25);
    double acc = 0.0;
    for (size_t m = mbins; m-- > 0;) {
        double c = 0.0;
        for (size_t i = 0; i < n; ++i) c += f[i][m];
        if (c != 0.0) acc += c * powi(q, static_cast<long long>(m));
    }
    return acc;
}

} // namespace

double counting_sum_quadruped(int r, int d_q, double gamma) {
    if (d_q < 1 || d_q > 4) throw std::invalid_argument("counting_sum_quadruped: 1 <= d_Q <= 4");
    return chain_sum(r, d_q - 1, gamma);
}

double counting_sum_biped(int r, int n, double gamma) {
    if (n < 1 || n > 3) throw std::invalid_argument("counting_sum_biped: 1 <= n <= 3");
    return chain_sum(r, 2 * n + 1, gamma);
}

LinFit counting_growth_fit(const std::vector<int>& rs,
                           const std::vector<double>& sums) {
    if (rs.size() != sums.size() || rs.size() < 4)
        throw std::invalid_argument("counting_growth_fit: need >= 4 points");
    std::vector<double> x, y;
    for (size_t i = rs.size() / 2; i < rs.size(); ++i) {
        x.push_back(std::log(static_cast<double>(rs[i])));
        y.push_back(std::log(std::max(sums[i], 1e-300)));
    }
    return linfit(x, y);
}

BoundReport momentum_conservation_check(double gamma, std::mt19937_64& rng,
                                        int draws) {
    BoundReport rep;
    rep.suite = "counting";
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    double worst = 0.0;
    for (int d = 0; d < draws; ++d) {
        // four legs; at most one with a zero index on the sampled axis
        const int zero_leg = static_cast<int>(rng() % 5);  // 4 = no zero leg
        double total = 0.0;
        for (int leg = 0; leg < 4; ++leg) {
            int s;
            if (leg == zero_leg) {
                s = 0;
            } else {
                s = 1 + static_cast<int>(rng() % 8);
            }
            double lo, hi;
            if (s == 0) {
                lo = 2.0 / (M_PI * gamma);
                hi = 0.99;
            } else {
                lo = 2.0 * powi(gamma, -s - 1) / M_PI;
                hi = 2.0 * std::sqrt(2.0) * powi(gamma, -s) / M_PI;
            }
            const double mag = lo + (hi - lo) * uni(rng);
            total += (rng() & 1) ? mag : -mag;
        }
        worst = std::max(worst, std::abs(total));
    }

    CheckRow row;
    row.tag = "momentum-conservation";
    row.name = "max |sum q| over sampled 4-tuples";
    row.measured = worst;
    row.bound = "< 2";
    row.ratio = worst / 2.0;
    row.pass = worst < 2.0;
    rep.add(row);
    return rep;
}

} // namespace vhh
