#pragma once

#include "modelcr/types.hpp"

namespace modelcr {

// mu(z) = z/sin^2 z - cot z, the geodesic multiplicity profile. Odd, strictly
// increasing on (-pi, pi), poles at nonzero multiples of pi.
double mu_fn(double z);
double mu_prime(double z);

// nu(z) = z^2/(z + sin^2 z - sin z cos z), the length profile; nu(0) = 1.
double nu_fn(double z);

// Bracketing intervals (lo, hi) for every positive solution of
// mu(tau) = ratio: one in (0, pi), zero or two per (m pi, (m+1) pi).
// ratio = 0 corresponds to the degenerate straight line (empty list).
std::vector<std::pair<double, double>> mu_root_count_and_brackets(double ratio);

// All geodesics joining (x', t) to the origin for k = 1 (requires x' != 0):
// roots tau_m of |t| = mu(tau) |x'|^2, lengths sqrt(nu(tau_m)(|x'|^2 + |t|)),
// sorted by length.
std::vector<GeodesicSolution> solve_geodesics_k1(double x1, double x2, double t);

struct TAxisGeodesic {
    double length;  // d_m = sqrt(m pi |t|)
    double radius;  // projected circle radius R_m = (1/2) sqrt(|t|/(m pi))
    double area;    // sigma_m = |t| / (4m)
};

// The infinite family of geodesics from a t-axis point (k = 1), m = 1..m_max.
std::vector<TAxisGeodesic> taxis_lengths_k1(double t, int m_max);

// Carnot-Caratheodory distance to the origin (k = 1).
double cc_distance_k1(double x1, double x2, double t);

// Checks f(tau_j) = d_j^2 / 2 where f is the geodesic action evaluated on the
// imaginary segment, f(tau) = (tau/2)(|t| + cot(tau) |x'|^2). Returns the
// maximum absolute residual over the supplied solutions.
double action_identity_check(double x1, double x2, double t,
                             const std::vector<GeodesicSolution>& solutions);

// Step-4 (k = 2) t-axis lengths, d_m^4 = m^3 K^4 |t| / (4Q) with K the
// complete elliptic integral at modulus (sqrt(2)/4)(sqrt(3)-1).
std::vector<double> k2_taxis_lengths(double t, int m_max);

struct GeodesicCountBounds {
    int m;
    int lower;  // 2m - 1
    int upper;  // 2m + 1
};

// Step-4 off-axis geodesic count bounds: the unique m with
// (m - 1/2) Q < (3/4)|t|/|x'|^4 <= (m + 1/2) Q.
GeodesicCountBounds k2_count_bounds(double x1, double x2, double t);

}  // namespace modelcr
