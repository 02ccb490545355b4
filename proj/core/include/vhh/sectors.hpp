#pragma once

#include "vhh/cutoffs.hpp"
#include "vhh/report.hpp"
#include "vhh/util.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace vhh {

enum class SectorClass { face, middle_face, corner, diagonal, general };

std::string to_string(SectorClass c);

// Partition of the admissible (s_a, s_b) pairs at scale j.
SectorClass classify_sector(int j, int sa, int sb);

// All admissible pairs at scale j: 0 <= s <= j and s_a + s_b >= j - 2.
std::vector<SectorTriple> enumerate_sectors(int j, int axis_a = 1, int axis_b = 2);

// Closed-form cardinality of enumerate_sectors(j).
long long sector_count_formula(int j);

// All sectors whose doubled generalized scale 2r lands on 2r or 2r+1
// (i.e. floor(r) == r for the given integer r).
std::vector<SectorTriple> sectors_at_r(int r);

// Grid scan showing that pairs violating s_a + s_b >= j - 2 carry no
// support, and that admitted deep sectors keep the third factor away from 0.
BoundReport empty_sector_audit(int j, double gamma, const GevreyCutoff& chi,
                               int grid_n = 96);

// Conservation rule at a quartic vertex: per sliced axis, the two smallest
// sector indices differ by at most 1, or the smallest equals its own scale
// index which is strictly below the other three scales.
bool vertex_indicator(const std::array<SectorTriple, 4>& legs);

// Exhaustive sum over (sigma1, sigma2, sigma3) at fixed r passing the vertex
// indicator, weighted gamma^{-(l1+l2+l3)/4}; sigma4 held fixed. Terms are
// accumulated as exact integer counts per quarter-exponent, so the result is
// independent of enumeration order.
double counting_sum_vertex(int r, const SectorTriple& sigma4, double gamma,
                           bool reverse_order = false);

// Mixed-scale variant (legs allowed at r and r-1); reported, never asserted.
double counting_sum_vertex_mixed(int r, const SectorTriple& sigma4, double gamma);

// Chain sums over sub-object sector tuples at fixed r with the pairwise
// compatibility rule between consecutive sectors. The quadruped sum uses
// d_Q - 1 factors, the biped sum 2n + 1 factors.
double counting_sum_quadruped(int r, int d_q, double gamma);
double counting_sum_biped(int r, int n, double gamma);

// Fit of log(sum) vs log(r) over the upper half of the given r range.
LinFit counting_growth_fit(const std::vector<int>& rs,
                           const std::vector<double>& sums);

// Samples momentum 4-tuples from sector support windows (at most one zero
// index per axis) and verifies the summed offsets stay inside (-2, 2) in
// each coordinate, so no umklapp integer can appear.
BoundReport momentum_conservation_check(double gamma, std::mt19937_64& rng,
                                        int draws = 20000);

} // namespace vhh
