#include "vhh/cutoffs.hpp"
#include "vhh/util.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace vhh {

GevreyCutoff::GevreyCutoff(double h) : h_(h) {
    if (h <= 1.0) throw std::invalid_argument("Gevrey index h must be > 1");
}

double GevreyCutoff::f(double u) const {
    if (u <= 0.0) return 0.0;
    return std::exp(-std::pow(u, -1.0 / (h_ - 1.0)));
}

double GevreyCutoff::operator()(double t) const {
    const double u = 2.0 - std::abs(t);
    if (u >= 1.0) return 1.0;
    if (u <= 0.0) return 0.0;
    const double fu = f(u);
    return fu / (fu + f(1.0 - u));
}

double chi_j(const GevreyCutoff& chi, double t, int j, double gamma) {
    if (j < 0) throw std::invalid_argument("chi_j: j must be >= 0");
    if (j == 0) return 1.0 - chi(t);
    return chi(powi(gamma, 2 * j - 2) * t) - chi(powi(gamma, 2 * j) * t);
}

double v_s(const GevreyCutoff& chi, double t, int s, int j, double gamma) {
    if (s < 0 || s > j) throw std::invalid_argument("v_s: need 0 <= s <= j");
    if (s == 0) return 1.0 - chi(gamma * gamma * t);
    if (s == j) return chi(powi(gamma, 2 * j) * t);
    return chi(powi(gamma, 2 * s) * t) - chi(powi(gamma, 2 * s + 2) * t);
}

int compute_j_max(double T, double gamma) {
    if (T <= 0.0) throw std::domain_error("j_max: temperature must be positive");
    const double jtilde = 1.0 + std::log(1.0 / (std::sqrt(2.0) * M_PI * T)) / std::log(gamma);
    return static_cast<int>(std::floor(jtilde));
}

ScaleSystem::ScaleSystem(double gamma_, double T_) : gamma(gamma_), T(T_) {
    if (gamma < 10.0) throw std::invalid_argument("ScaleSystem: gamma must be >= 10");
    j_max = compute_j_max(T, gamma);
    r_max = 1 + (3 * j_max) / 2;  // deepest generalized scale, floor arithmetic
}

BoundReport gevrey_check(const GevreyCutoff& chi, int max_order) {
    if (max_order > 8) throw std::invalid_argument("gevrey_check: max_order <= 8");
    BoundReport rep;
    rep.suite = "cutoffs";

    const double step = 1e-4;
    // The transition happens on 1 < t < 2; scan a hair beyond both ends.
    std::vector<double> sup(static_cast<size_t>(max_order) + 1, 0.0);
    const int grid_n = 4000;
    for (int g = 0; g <= grid_n; ++g) {
        const double t = 0.95 + 1.15 * g / grid_n;
        for (int n = 0; n <= max_order; ++n) {
            // n-fold central difference with binomial weights
            double acc = 0.0;
            double binom = 1.0;
            for (int i = 0; i <= n; ++i) {
                const double x = t + (0.5 * n - i) * step;
                acc += ((i % 2 == 0) ? binom : -binom) * chi(x);
                binom = binom * (n - i) / (i + 1);
            }
            const double d = std::abs(acc) / powi(step, n);
            if (d > sup[static_cast<size_t>(n)]) sup[static_cast<size_t>(n)] = d;
        }
    }

    CheckRow zero;
    zero.tag = "gevrey-derivatives";
    zero.name = "order-0 sup";
    zero.measured = sup[0];
    zero.bound = "= 1";
    zero.ratio = sup[0];
    zero.pass = std::abs(sup[0] - 1.0) < 1e-12;
    rep.add(zero);

    // Fit log sup_n = log A + n log(1/gamma_c) + h_fit log(n!) over n <= 6.
    const int n_fit = std::min(max_order, 6);
    Eigen::MatrixXd X(n_fit, 3);
    Eigen::VectorXd y(n_fit);
    double logfact = 0.0;
    for (int n = 1; n <= n_fit; ++n) {
        logfact += std::log(static_cast<double>(n));
        X(n - 1, 0) = 1.0;
        X(n - 1, 1) = n;
        X(n - 1, 2) = logfact;
        y(n - 1) = std::log(std::max(sup[static_cast<size_t>(n)], 1e-300));
    }
    Eigen::Vector3d beta = (X.transpose() * X).ldlt().solve(X.transpose() * y);
    const double h_fit = beta(2);

    CheckRow trend;
    trend.tag = "gevrey-derivatives";
    trend.name = "derivative growth exponent h";
    trend.measured = h_fit;
    trend.bound = "~ h (trend)";
    trend.ratio = h_fit / chi.h();
    trend.pass = true;
    trend.asserted = false;  // finite differences at fixed step: reported only
    trend.note = "A=" + fmt17(std::exp(beta(0))) + " inv_gamma_c=" + fmt17(std::exp(beta(1)));
    rep.add(trend);

    for (int n = 1; n <= max_order; ++n) {
        CheckRow row;
        row.tag = "gevrey-derivatives";
        row.name = "order-" + std::to_string(n) + " sup";
        row.measured = sup[static_cast<size_t>(n)];
        row.bound = "finite";
        row.ratio = 0.0;
        row.pass = std::isfinite(sup[static_cast<size_t>(n)]);
        rep.add(row);
    }
    return rep;
}

FourierDecayFit fourier_decay_fit(const GevreyCutoff& chi) {
    // one partition window in the cutoff variable; both edges comparable
    auto f = [&](double u) { return chi(u) - chi(4.0 * u); };
    const double lo = 0.1, hi = 2.5;
    const int n = 500000;  // Simpson; keeps the floor below a drop of ~20
    const double step = (hi - lo) / n;
    std::vector<double> fu(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        fu[static_cast<size_t>(i)] = f(lo + step * i);
    auto transform_abs = [&](double x) {
        std::complex<double> acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            acc += w * fu[static_cast<size_t>(i)] *
                   std::polar(1.0, -x * (lo + step * i));
        }
        return std::abs(acc) * step / 3.0;
    };

    const double f0 = transform_abs(0.0);
    std::vector<double> lx, ly;
    for (double x = 4.0; x <= 512.0; x *= 2.0) {
        // oscillation-proof envelope: max over one local phase window
        double env = 0.0;
        for (int k = 0; k < 16; ++k)
            env = std::max(env, transform_abs(x * (1.0 + 0.06 * k)));
        const double drop = std::log(f0 / env);
        if (drop > 1.0 && env > 1e-11 * f0) {
            lx.push_back(std::log(x));
            ly.push_back(std::log(drop));
        }
    }
    FourierDecayFit out;
    if (lx.size() >= 3) {
        const LinFit fit = linfit(lx, ly);
        out.alpha = fit.slope;
        out.r2 = fit.r2;
        out.points = static_cast<int>(lx.size());
    }
    return out;
}

} // namespace vhh
