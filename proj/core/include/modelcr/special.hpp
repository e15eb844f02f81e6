#pragma once

#include <functional>

#include "modelcr/types.hpp"

namespace modelcr {

// Principal-branch complex power, arg in (-pi, pi]. Throws on 0^e with
// Re(e) <= 0; returns 0 for 0^e with Re(e) > 0.
cplx principal_pow(cplx base, cplx exponent);

// Gamma function on the complex plane (Lanczos, reflection for Re < 1/2).
// >= 12 significant digits on |Re| <= 10, |Im| <= 10.
cplx gamma_complex(cplx zc);

// Q = (1/4) Gamma(1/6)/Gamma(2/3) sqrt(pi), the step-4 length constant.
double q_constant();

// Complete elliptic integral of the first kind in the modulus convention,
// K(m) = int_0^1 dw / sqrt((1-w^2)(1-m^2 w^2)), 0 <= m < 1. AGM evaluation.
double complete_elliptic_K(double modulus);

// Gauss rule for integrals against s^alpha (1-s)^beta on [0,1]
// (alpha, beta > -1), exact for polynomial degree <= 2*order - 1.
QuadratureRule gauss_jacobi_rule(int order, double alpha, double beta);

// --- double-exponential (tanh-sinh) quadrature on (0,1) -------------------
//
// Evaluates int_0^1 s^a (1-s)^b rest(s) ds where a, b may be complex with
// Re > -1. The singular endpoint factors and the quadrature weight are
// combined in log space, so terms underflow to zero cleanly instead of
// producing inf * 0 near the endpoints. Converges geometrically in the level
// count even for oscillatory complex exponents, which plain Gauss-Jacobi
// rules do not.

struct TanhSinhResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;  // difference between the last two levels
    int levels = 0;
    bool converged = false;
};

TanhSinhResult tanh_sinh_01(cplx a, cplx b, const std::function<cplx(double)>& rest,
                            double rel_tol);

// Node set for one tanh-sinh level: abscissas with precomputed logs and the
// log-weight (weights can under/overflow as raw doubles near the endpoints).
struct DENode {
    double s;
    double log_s;
    double log_1ms;
    double log_w;
};

std::vector<DENode> tanh_sinh_nodes(double h, double tmax = 9.6);

}  // namespace modelcr
