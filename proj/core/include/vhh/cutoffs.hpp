#pragma once

#include "vhh/report.hpp"

#include <vector>

namespace vhh {

// Smooth even bump: 1 on |t| <= 1, 0 on |t| > 2, strictly monotone between.
// Built from f(u) = exp(-u^{-1/(h-1)}) blended as f(u)/(f(u)+f(1-u)) with
// u = 2-|t|; h is the Gevrey index (derivatives grow like (n!)^h).
class GevreyCutoff {
public:
    explicit GevreyCutoff(double h = 2.0);
    double h() const { return h_; }
    double alpha() const { return 1.0 / h_; }
    double operator()(double t) const;

private:
    double h_;
    double f(double u) const;
};

// Scale slice j of the partition of unity: chi_0 = 1 - chi,
// chi_j(t) = chi(gamma^{2j-2} t) - chi(gamma^{2j} t) for j >= 1.
double chi_j(const GevreyCutoff& chi, double t, int j, double gamma);

// Sector slice s at scale j: v_0 = 1 - chi(gamma^2 t), v_s = chi_{s+1}(t)
// for 1 <= s <= j-1, v_j = chi(gamma^{2j} t). Telescopes to 1.
double v_s(const GevreyCutoff& chi, double t, int s, int j, double gamma);

// Deepest scale at temperature T: floor(1 + log_gamma(1/(sqrt2 pi T))).
// Throws std::domain_error for T <= 0.
int compute_j_max(double T, double gamma);

// Immutable scale bookkeeping for one (gamma, T) pair.
struct ScaleSystem {
    double gamma;
    double T;
    int j_max;
    int r_max;

    ScaleSystem(double gamma_, double T_);
};

// A sector: scale j, two sliced axes (a,b) in {1,2,3}, indices s_a, s_b.
// Depth and generalized scale are derived; r is tracked in half-integer
// units (r2 = 2r) so the floor is taken only where output requires it.
struct SectorTriple {
    int j = 0;
    int sa = 0;
    int sb = 0;
    int axis_a = 1;
    int axis_b = 2;

    bool valid() const {
        return j >= 0 && sa >= 0 && sb >= 0 && sa <= j && sb <= j &&
               sa + sb >= j - 2 && axis_a >= 1 && axis_a <= 3 &&
               axis_b >= 1 && axis_b <= 3 && axis_a != axis_b;
    }
    int depth_l() const { return sa + sb - j + 2; }
    int r2() const { return j + sa + sb + 2; }    // 2r, exact
    int r_floor() const { return r2() / 2; }
};

// Finite-difference derivative growth scan of the cutoff; max_order <= 8.
BoundReport gevrey_check(const GevreyCutoff& chi, int max_order);

// Stretch exponent of the Fourier envelope of one partition window,
// fitted as log(-log |F|/|F(0)|) against log x over the decades where the
// drop exceeds e and stays above the quadrature floor. Approaches alpha().
struct FourierDecayFit {
    double alpha = 0.0;
    double r2 = 0.0;
    int points = 0;
};
FourierDecayFit fourier_decay_fit(const GevreyCutoff& chi);

} // namespace vhh
