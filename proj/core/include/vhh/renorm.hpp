#pragma once

#include "vhh/config.hpp"
#include "vhh/cutoffs.hpp"
#include "vhh/geometry.hpp"
#include "vhh/propagator.hpp"
#include "vhh/report.hpp"

#include <complex>
#include <vector>

namespace vhh {

// One scale of the tadpole, coupling stripped. signed_value is the plain
// sector sum; abs_value takes per-sector absolute values, matching the bound
// that is actually claimed per scale.
struct TadpoleScale {
    double signed_value = 0.0;
    double abs_value = 0.0;      // per-sector absolute values
    double abs_integrand = 0.0;  // |integrand| mass; cancellation free
    int modes = 0;  // Matsubara frequencies inside the slice support
};

TadpoleScale tadpole_scale(int j, double gamma, double T, const GevreyCutoff& chi,
                           int resolution);

// Dense Riemann sum over the whole zone at the given resolution (no sector
// decomposition). The signed value cancels almost completely across the zero
// line, so convergence checks compare the |integrand| mass instead.
struct TadpoleOracle {
    double signed_value = 0.0;
    double abs_integrand = 0.0;
};
TadpoleOracle tadpole_scale_oracle(int j, double gamma, double T,
                                   const GevreyCutoff& chi, int resolution);

// Per-scale tadpoles and the counter-term that cancels them identically.
struct CounterTermFlow {
    double gamma = 0.0, T = 0.0, lambda = 0.0;
    std::vector<double> t_scale;    // lambda * stripped value, index = j
    std::vector<double> delta_mu;   // -t_scale[j], by construction
    double total = 0.0;             // sum of t_scale
};

CounterTermFlow delta_mu_flow(double gamma, double T, double lambda,
                              const GevreyCutoff& chi, int resolution);

// Second-order (sunshine) self-energy on a periodic oblique-coordinate grid:
//   Sigma(q) = lambda^2 T^2 N^-4 sum_{k,p} Ctil(k) Ctil(p) Ctil(k+p-q).
// Loop momenta live on cell centers, external momenta on integer grid points,
// so the third propagator lands on integer grid points exactly. The two
// spatial sums are contracted by FFT; the Matsubara convolution by a padded
// FFT per spatial frequency. Frequencies are truncated at |k0| ~ 16 (count
// proportional to 1/T), the regime where the quadratic denominator dominates.
class SunshineEvaluator {
public:
    // resolution must be even and >= 8; mats_override forces the per-sign
    // mode count (testing only).
    SunshineEvaluator(double T, int resolution, double lambda,
                      int mats_override = 0);

    // External frequency index n_q in [-2, 2]; q0 = (2 n_q + 1) pi T.
    std::complex<double> sigma(int i_plus, int i_minus, int n_q) const;
    std::complex<double> sigma(const ObliqueMomentum& q, int n_q) const;

    // Direct triple loop, O(N^4 M^2); refused above resolution 12.
    std::complex<double> sigma_brute(int i_plus, int i_minus, int n_q) const;

    int grid_index(double coord) const;   // nearest integer grid point
    double grid_coord(int index) const;

    double temperature() const { return T_; }
    double lambda() const { return lambda_; }
    int resolution() const { return n_; }
    int modes_per_sign() const { return m_; }

private:
    double T_;
    double lambda_;
    int n_;
    int m_;
    // per spatial frequency t, the five external-frequency contractions
    std::vector<std::complex<double>> v_;
};

// tau evaluates Sigma at the first Matsubara frequency and the Fermi-surface
// foot of k (snapped to the evaluator grid); the remainder is the exact rest.
struct LocalizationSplit {
    std::complex<double> sigma, tau, remainder;
    int foot_plus = 0, foot_minus = 0;  // grid indices of the projected point
};

LocalizationSplit localize(const SunshineEvaluator& ev, const ObliqueMomentum& k,
                           int n_q);

// One temperature point of the derivative sweep at a fixed external point.
struct SweepRow {
    double T = 0.0;
    double abs_sigma = 0.0;   // |Sigma| at the first Matsubara frequency
    double abs_renorm = 0.0;  // |Im Sigma| there; the chemical-potential
                              // counter-term is real, so this is the magnitude
                              // left after renormalization at a surface point
    double d1 = 0.0;          // |first k0 difference| at k0 = pi T
    double d2_k0 = 0.0;       // |second k0 difference|
    double d2_spatial = 0.0;  // |second difference| along k+, one grid step
};

SweepRow sweep_point(const SunshineEvaluator& ev, const ObliqueMomentum& q);

std::vector<SweepRow> derivative_sweep(const std::vector<double>& T_list,
                                       int resolution, double lambda,
                                       const ObliqueMomentum& q);

// Log-log slopes of the sweep columns against 1/T. The value and
// first-difference laws carry a log^2(1/T) prefactor (r^2 in scale units),
// which is divided out before fitting so the slope reads the pure gamma
// power; the curvature law is temperature-pure on both sides, so its slope
// is fitted raw. The value column uses the renormalized magnitude.
struct SweepFit {
    double slope_sup = 0.0;  // fit of log(abs_renorm / r^2); target -1
    double slope_d1 = 0.0;   // fit of log(d1 / r^2); target 0
    double slope_d2 = 0.0;   // raw fit, max of the two second differences
    double r2_sup = 0.0;
};

SweepFit sweep_fit(const std::vector<SweepRow>& rows, double gamma = 10.0);

// Resolvent series of the interacting propagator on sampled grid momenta:
// rho = Sigma_total * Ctil must stay below 1 and R = rho/(1-rho) below K|lambda|.
struct ResolventCheck {
    double k_fitted = 0.0;     // max |R| / |lambda|
    double max_rho = 0.0;
    bool tail_ok = true;       // |R - rho| <= rho^2/(1-rho) on every sample
    bool in_domain = true;     // max_rho < 1
};

ResolventCheck resolvent_check(const SunshineEvaluator& ev, double tadpole_total,
                               double lambda, int samples);

BoundReport renorm_suite(const RunConfig& cfg);

} // namespace vhh
