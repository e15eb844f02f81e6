#pragma once

#include <array>
#include <functional>

#include "modelcr/types.hpp"

namespace modelcr {

enum class Field { X1, X2 };

// Heisenberg group product (k = 1 semantics). Throws on dimension mismatch.
BoundaryPoint heisenberg_multiply(const BoundaryPoint& x, const BoundaryPoint& y);

// Group inverse (-z, -t).
BoundaryPoint heisenberg_inverse(const BoundaryPoint& x);

// Twisted time difference sigma = t - s + 2 Im(z^k conj(w)^k), n = 1 only.
double sigma_twist(const BoundaryPoint& p, const BoundaryPoint& q, int k);

// Quasi-metric parts (sigma, rho, h, d) with d = h^2 rho^{2-2k}; n = 1.
QuasiMetricParts quasi_metric(const BoundaryPoint& p, const BoundaryPoint& q, int k);

// Coefficients (d/dx1, d/dx2, d/dt) of the horizontal field at x' = (x1, x2).
// X1 = (1, 0,  2k x2 |x'|^{2k-2}), X2 = (0, 1, -2k x1 |x'|^{2k-2}).
std::array<double, 3> horizontal_field_coeffs(Field which, double x1, double x2, int k);

namespace detail {
void check_fd_step(const std::array<double, 3>& x, double h);
}

// Second-order central difference of f along the coefficient direction of the
// field at x. Works for real- and complex-valued f. Nesting two applications
// yields O(h^2) approximations of X_i X_j f, which is how the sub-Laplacian
// stencils are assembled.
template <class F>
auto apply_field_fd(Field which, F&& f, const std::array<double, 3>& x, int k, double h)
    -> decltype(f(0.0, 0.0, 0.0)) {
    detail::check_fd_step(x, h);
    const auto c = horizontal_field_coeffs(which, x[0], x[1], k);
    const auto fp = f(x[0] + h * c[0], x[1] + h * c[1], x[2] + h * c[2]);
    const auto fm = f(x[0] - h * c[0], x[1] - h * c[1], x[2] - h * c[2]);
    return (fp - fm) / (2.0 * h);
}

}  // namespace modelcr
