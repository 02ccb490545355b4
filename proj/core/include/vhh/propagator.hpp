#pragma once

#include "vhh/cutoffs.hpp"
#include "vhh/geometry.hpp"
#include "vhh/report.hpp"

#include <complex>
#include <random>
#include <vector>

namespace vhh {

using cplx = std::complex<double>;

struct Mat2 {
    cplx a11, a12, a21, a22;
    double max_abs() const;
};

// Free covariance at one momentum: full = ctilde * a (mu = 1 filled in;
// for general mu only `full` is meaningful).
struct PropagatorValue {
    cplx ctilde{};
    Mat2 a{};
    Mat2 full{};
};

cplx c_tilde(double k0, double e_k1);
PropagatorValue c_full(double k0, const CartesianMomentum& k, double mu);

// Fermionic frequencies n with |(2n+1) pi T| inside the scale-j window
// [gamma^{-j-1}/2, gamma^{-j}/sqrt2]; both signs; may be empty.
std::vector<long long> matsubara_window(int j, double gamma, double T);

// Local chart around the zero-line crossing of the two sliced axes. The two
// sliced linear coordinates (c_a, c_b) vary near 1; the map back to oblique
// coordinates is unimodular for every axis pair.
struct SectorPatch {
    SectorTriple sector;
    double gamma;
    double width_a;  // |c_a - 1| extent of the support window (with slack)
    double width_b;

    SectorPatch(const SectorTriple& s, double gamma_);
    ObliqueMomentum to_oblique(double ca, double cb) const;
    // Squared-cosine factors of the two sliced axes.
    void factors(double ca, double cb, double& ta, double& tb) const;
};

// chi_j(4 k0^2 + e^2) * v_{s_a} * v_{s_b} at a patch point.
double sector_weight(const GevreyCutoff& chi, const SectorPatch& patch,
                     double k0, double ca, double cb);

Mat2 c_sectorized(const GevreyCutoff& chi, const SectorPatch& patch,
                  double k0, double ca, double cb);

// Entry-magnitude scan of the numerator matrix over slice supports.
BoundReport verify_a_bounds(int j_lo, int j_hi, double gamma, double T,
                            const GevreyCutoff& chi, int grid_n = 48);

// Grid + refinement estimate of sup |c_sectorized| over the slice support.
// Doubles the grid until the change is < 1%; gives up after six doublings
// and reports the last two values in the note.
struct SupResult {
    double sup = 0.0;
    bool converged = true;
    double previous = 0.0;
    bool empty = false;  // no frequency in the window at this temperature
};
SupResult sup_norm_slice(const GevreyCutoff& chi, const SectorTriple& sector,
                         double gamma, double T, int base_n = 24);

// Direct-space transform along the dual axes with stretched-exponential
// decay fit. Distances use d = gamma^{-j}|x0| + gamma^{-s_a}|x_a| +
// gamma^{-s_b}|x_b|.
struct DirectSpaceResult {
    double c0_abs = 0.0;           // |C(0)|; cancellation-suppressed below sup_abs
    double sup_abs = 0.0;          // max |C(x)| over the sampled axes
    double prefactor_ratio = 0.0;  // sup_abs * gamma^{j+l}
    double decay_rate = 0.0;       // c in exp(-c d^alpha), alpha = 1/h fixed
    double alpha_fit = 0.0;        // measured stretch exponent
    double fit_r2 = 0.0;
    double l1_estimate = 0.0;      // separable trapezoid estimate of the L1 norm
    int quadrature_n = 0;
};
DirectSpaceResult direct_space(const GevreyCutoff& chi, const SectorTriple& sector,
                               double gamma, double T, int resolution,
                               double max_d = 6.0, int points_per_axis = 16);

// Pointwise reassembly of sum_j sum_sectors c_sectorized against the full
// covariance times the saturated scale partition, at random supported points.
BoundReport reassembly_check(double gamma, double T, const GevreyCutoff& chi,
                             std::mt19937_64& rng, int points = 200);

} // namespace vhh
