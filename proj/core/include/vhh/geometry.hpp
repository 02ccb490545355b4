#pragma once

#include <array>
#include <complex>
#include <vector>

namespace vhh {

// Momentum in the Cartesian reciprocal plane, radians.
struct CartesianMomentum {
    double k1 = 0.0;
    double k2 = 0.0;
};

// Coordinates in the oblique basis e+ = (pi/3)(1, sqrt3), e- = (pi/3)(-1, sqrt3).
// Dimensionless. Every band quantity is 2-periodic in both coordinates, so the
// fundamental domain is the torus [-1,1)^2.
struct ObliqueMomentum {
    double kplus = 0.0;
    double kminus = 0.0;
};

// Shifted coordinates measuring distance from the zero-energy lines:
// q_pm = k_mp 1, branch chosen toward the k_pm >= 0 side. The derived third
// coordinate is q3 = q_plus + q_minus.
struct QuasiMomentum {
    double qplus = 0.0;
    double qminus = 0.0;
    double q3() const { return qplus + qminus; }
};

struct MatsubaraFrequency {
    long long n = 0;
    double T = 0.0;
    double value() const;  // (2n+1)*pi*T, never zero
};

// Reciprocal basis G1 = (2pi/3)(1, sqrt3), G2 = (2pi/3)(1, -sqrt3).
CartesianMomentum reciprocal_g1();
CartesianMomentum reciprocal_g2();

std::complex<double> omega(const CartesianMomentum& k);

// Band function e(k, mu); equals |omega(k)|^2 - mu^2.
double band_e(const CartesianMomentum& k, double mu);

// Same band at mu = 1 in oblique coordinates:
//   e = 8 cos(pi (k+ + k-)/2) cos(pi k+/2) cos(pi k-/2).
double band_e_oblique(const ObliqueMomentum& kq);

// Quasi-momentum form: e = -8 cos(pi (q+ + q-)/2) sin(pi q+/2) sin(pi q-/2).
double band_e_quasi(const QuasiMomentum& q);

// The three squared-cosine factors t^(1), t^(2), t^(3); each in [0,1] and
// t1*t2*t3 = e(k,1)^2 / 64.
std::array<double, 3> three_factors(const ObliqueMomentum& kq);
std::array<double, 3> three_factors(const QuasiMomentum& q);

ObliqueMomentum cart_to_oblique(const CartesianMomentum& k);
CartesianMomentum oblique_to_cart(const ObliqueMomentum& kq);
QuasiMomentum to_quasi(const ObliqueMomentum& kq);

// Reduce into the fundamental domain k = a*G1 + b*G2 with a,b in [-1/2,1/2).
CartesianMomentum bz_reduce(const CartesianMomentum& k);

// Reduce an oblique coordinate into [-1,1) (2-periodic torus).
double torus_reduce(double c);

// 2pi/3 rotation acting on Cartesian momenta (band symmetry generator).
CartesianMomentum rotate_2pi3(const CartesianMomentum& k);

// The two inequivalent zero-energy corner points.
CartesianMomentum fermi_point_1();  // (2pi/3,  2pi/(3 sqrt3))
CartesianMomentum fermi_point_2();  // (2pi/3, -2pi/(3 sqrt3))

// Saddle points of the band at mu=1 in oblique coordinates: (1,1), (1,0), (0,1).
std::vector<ObliqueMomentum> vanhove_points();

// Segment on the zero set, endpoints in oblique coordinates.
struct FermiSegment {
    ObliqueMomentum a;
    ObliqueMomentum b;
    ObliqueMomentum at(double t) const;  // t in [0,1]
};

struct FermiTriangle {
    std::array<FermiSegment, 3> edges;
    bool fundamental = false;
    ObliqueMomentum center;
};

// The zero set of e(.,1) inside the fundamental domain: two triangles, both
// flagged fundamental (every other triangle of the plane is a lattice
// translate of one of these two).
std::vector<FermiTriangle> fermi_triangles();

// Nearest point on the zero set, distance measured in (k+,k-) coordinates.
// Ties broken toward the lexicographically smallest foot point in (k+,k-).
// Idempotent. Input and output in Cartesian coordinates.
CartesianMomentum fermi_project(const CartesianMomentum& k);
ObliqueMomentum fermi_project(const ObliqueMomentum& kq);

} // namespace vhh
