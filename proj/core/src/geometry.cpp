#include "vhh/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace vhh {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

double MatsubaraFrequency::value() const {
    return (2.0 * static_cast<double>(n) + 1.0) * M_PI * T;
}

CartesianMomentum reciprocal_g1() { return {2.0 * M_PI / 3.0, 2.0 * M_PI / kSqrt3}; }
CartesianMomentum reciprocal_g2() { return {2.0 * M_PI / 3.0, -2.0 * M_PI / kSqrt3}; }

std::complex<double> omega(const CartesianMomentum& k) {
    const std::complex<double> phase = std::polar(1.0, -1.5 * k.k1);
    return 1.0 + 2.0 * phase * std::cos(0.5 * kSqrt3 * k.k2);
}

double band_e(const CartesianMomentum& k, double mu) {
    const double c2 = std::cos(0.5 * kSqrt3 * k.k2);
    return 4.0 * std::cos(1.5 * k.k1) * c2 + 4.0 * c2 * c2 + 1.0 - mu * mu;
}

double band_e_oblique(const ObliqueMomentum& kq) {
    return 8.0 * std::cos(0.5 * M_PI * (kq.kplus + kq.kminus)) *
           std::cos(0.5 * M_PI * kq.kplus) * std::cos(0.5 * M_PI * kq.kminus);
}

double band_e_quasi(const QuasiMomentum& q) {
    return -8.0 * std::cos(0.5 * M_PI * (q.qplus + q.qminus)) *
           std::sin(0.5 * M_PI * q.qplus) * std::sin(0.5 * M_PI * q.qminus);
}

std::array<double, 3> three_factors(const ObliqueMomentum& kq) {
    const double c1 = std::cos(0.5 * M_PI * kq.kplus);
    const double c2 = std::cos(0.5 * M_PI * kq.kminus);
    const double c3 = std::cos(0.5 * M_PI * (kq.kplus + kq.kminus));
    return {c1 * c1, c2 * c2, c3 * c3};
}

std::array<double, 3> three_factors(const QuasiMomentum& q) {
    const double s1 = std::sin(0.5 * M_PI * q.qplus);
    const double s2 = std::sin(0.5 * M_PI * q.qminus);
    const double c3 = std::cos(0.5 * M_PI * (q.qplus + q.qminus));
    return {s1 * s1, s2 * s2, c3 * c3};
}

ObliqueMomentum cart_to_oblique(const CartesianMomentum& k) {
    return {(3.0 * k.k1 + kSqrt3 * k.k2) / (2.0 * M_PI),
            (-3.0 * k.k1 + kSqrt3 * k.k2) / (2.0 * M_PI)};
}

CartesianMomentum oblique_to_cart(const ObliqueMomentum& kq) {
    return {(M_PI / 3.0) * (kq.kplus - kq.kminus),
            (M_PI / kSqrt3) * (kq.kplus + kq.kminus)};
}

QuasiMomentum to_quasi(const ObliqueMomentum& kq) {
    // Branch: shift toward the origin side of the nearest zero line.
    QuasiMomentum q;
    q.qplus = (kq.kplus >= 0.0) ? kq.kplus - 1.0 : kq.kplus + 1.0;
    q.qminus = (kq.kminus >= 0.0) ? kq.kminus - 1.0 : kq.kminus + 1.0;
    return q;
}

double torus_reduce(double c) {
    double r = c - 2.0 * std::floor((c + 1.0) / 2.0);
    // floor can round such that r == 1.0 when c is a tiny negative offset of 1
    if (r >= 1.0) r -= 2.0;
    return r;
}

CartesianMomentum bz_reduce(const CartesianMomentum& k) {
    const ObliqueMomentum kq = cart_to_oblique(k);
    // (k+,k-) = (2a,-2b) in the G1/G2 parametrization: reducing the torus
    // coordinates to [-1,1) is exactly a,b in [-1/2,1/2).
    return oblique_to_cart({torus_reduce(kq.kplus), torus_reduce(kq.kminus)});
}

CartesianMomentum rotate_2pi3(const CartesianMomentum& k) {
    return {-0.5 * k.k1 + 0.5 * kSqrt3 * k.k2,
            -0.5 * kSqrt3 * k.k1 - 0.5 * k.k2};
}

CartesianMomentum fermi_point_1() { return {2.0 * M_PI / 3.0, 2.0 * M_PI / (3.0 * kSqrt3)}; }
CartesianMomentum fermi_point_2() { return {2.0 * M_PI / 3.0, -2.0 * M_PI / (3.0 * kSqrt3)}; }

std::vector<ObliqueMomentum> vanhove_points() {
    return {{1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}};
}

ObliqueMomentum FermiSegment::at(double t) const {
    return {a.kplus + t * (b.kplus - a.kplus), a.kminus + t * (b.kminus - a.kminus)};
}

std::vector<FermiTriangle> fermi_triangles() {
    // Zero set in the torus [-1,1)^2: the lines k+ = +-1, k- = +-1,
    // k+ + k- = +-1 cut the domain into two triangles (plus their wrapped
    // complements). Vertices are the saddle points up to 2-periodicity.
    std::vector<FermiTriangle> out;

    FermiTriangle t1;  // contains the first corner point at (-2/3, -2/3)
    t1.edges = {FermiSegment{{-1.0, -1.0}, {-1.0, 0.0}},   // k+ = -1
                FermiSegment{{-1.0, 0.0}, {0.0, -1.0}},    // k+ + k- = -1
                FermiSegment{{0.0, -1.0}, {-1.0, -1.0}}};  // k- = -1
    t1.fundamental = true;
    t1.center = {-2.0 / 3.0, -2.0 / 3.0};
    out.push_back(t1);

    FermiTriangle t2;  // contains the second corner point at (2/3, 2/3)
    t2.edges = {FermiSegment{{1.0, 1.0}, {1.0, 0.0}},   // k+ = 1
                FermiSegment{{1.0, 0.0}, {0.0, 1.0}},   // k+ + k- = 1
                FermiSegment{{0.0, 1.0}, {1.0, 1.0}}};  // k- = 1
    t2.fundamental = true;
    t2.center = {2.0 / 3.0, 2.0 / 3.0};
    out.push_back(t2);

    return out;
}

ObliqueMomentum fermi_project(const ObliqueMomentum& kq) {
    // Feet on the three zero-line families c = 1 (mod 2), c in
    // {k+, k-, k+ + k-}. Distance is measured as the offset |dc| in the
    // respective linear coordinate; the three coordinates are treated
    // symmetrically (this makes the triangle center exactly equidistant).
    const double d1 = torus_reduce(kq.kplus - 1.0);
    const double d2 = torus_reduce(kq.kminus - 1.0);
    const double d3 = torus_reduce(kq.kplus + kq.kminus - 1.0);

    struct Candidate {
        double dist;
        ObliqueMomentum foot;
    };
    const Candidate cands[3] = {
        {std::abs(d1), {kq.kplus - d1, kq.kminus}},
        {std::abs(d2), {kq.kplus, kq.kminus - d2}},
        {std::abs(d3), {kq.kplus - 0.5 * d3, kq.kminus - 0.5 * d3}},
    };

    int best = 0;
    for (int i = 1; i < 3; ++i) {
        const double diff = cands[i].dist - cands[best].dist;
        if (diff < -1e-12) {
            best = i;
        } else if (std::abs(diff) <= 1e-12) {
            // Tie: lexicographically smallest foot in (k+, k-).
            const auto& a = cands[i].foot;
            const auto& b = cands[best].foot;
            if (a.kplus < b.kplus - 1e-15 ||
                (std::abs(a.kplus - b.kplus) <= 1e-15 && a.kminus < b.kminus - 1e-15)) {
                best = i;
            }
        }
    }
    return cands[best].foot;
}

CartesianMomentum fermi_project(const CartesianMomentum& k) {
    return oblique_to_cart(fermi_project(cart_to_oblique(k)));
}

} // namespace vhh
