#pragma once

#include <complex>
#include <vector>

namespace modelcr {

using cplx = std::complex<double>;

// Point (z, t) on the boundary of the model domain: z in C^n, t = Re(z_{n+1}).
struct BoundaryPoint {
    std::vector<cplx> z;
    double t = 0.0;

    BoundaryPoint() = default;
    BoundaryPoint(cplx z1, double t_) : z{z1}, t(t_) {}
    BoundaryPoint(std::vector<cplx> z_, double t_) : z(std::move(z_)), t(t_) {}
    std::size_t n() const { return z.size(); }
};

struct KernelParams {
    int k = 1;       // step exponent, >= 1
    int n = 1;       // complex dimension of the z-slab
    cplx lambda{0.0, 0.0};  // spectral parameter, |Re lambda| < 1 for integral kernels
};

// Quasi-metric constituents on the boundary: twist sigma, scale rho,
// intermediate h, and the quasi-distance d = h^2 rho^{2-2k}.
struct QuasiMetricParts {
    double sigma = 0.0;
    double rho = 0.0;
    double h = 0.0;
    double d = 0.0;
};

struct GeodesicSolution {
    int branch_index = 1;   // m >= 1
    double tau = 0.0;       // root of the transcendental multiplicity equation
    double length = 0.0;
};

// Nodes/weights for integrals against s^alpha (1-s)^beta on [0,1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;
    double beta = 0.0;
    int order = 0;
};

}  // namespace modelcr
