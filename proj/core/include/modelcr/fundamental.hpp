#pragma once

#include "modelcr/types.hpp"

namespace modelcr {

// A(p, q) = (1/2)(|z|^{2k} + |w|^{2k} + i(t - t0)). The imaginary part carries
// a + sign here, opposite to the Szego-side A.
cplx a_fund(const BoundaryPoint& p, const BoundaryPoint& q, int k);

// P(p, q) = conj(z) w / A^{1/k} (principal branch); 0 when w = 0. Satisfies
// |P| <= 1 with equality only when |z| = |w| and t = t0.
cplx p_fund(const BoundaryPoint& p, const BoundaryPoint& q, int k);

// Folland-Stein closed form on the Heisenberg group (k = 1):
//   -[G(lambda)/(4 pi^2)] (|x'|^2 - it)^{-(1+lambda)/2} (|x'|^2 + it)^{-(1-lambda)/2}
// with G(lambda) = Gamma((1+lambda)/2) Gamma((1-lambda)/2).
cplx k_lambda_closed_k1(double x1, double x2, double t, cplx lambda);

struct KernelResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
};

// Fundamental-solution kernel via the double singular integral, any k >= 1,
// |Re lambda| < 1. For k = 1 the two axes decouple and are integrated
// separately; for k >= 2 the coupling product forces a tensor quadrature.
// Refuses evaluation within |1 - P| < 1e-6 of the diagonal singularity.
KernelResult k_lambda_integral(const BoundaryPoint& p, const BoundaryPoint& q,
                               const KernelParams& params, double rel_tol = 1e-8);

// lambda = 0 kernel: (1 / (4 k pi^3 |A|)) times the double integral with
// Chebyshev weights on both axes; evaluated by Gauss-Chebyshev tensor
// quadrature with order doubling.
KernelResult k0_integral(const BoundaryPoint& p, const BoundaryPoint& q, int k,
                         double rel_tol = 1e-10);

}  // namespace modelcr
