#include "modelcr/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace modelcr {

BoundaryPoint heisenberg_multiply(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.n() != y.n())
        throw std::invalid_argument("heisenberg_multiply: dimension mismatch");
    BoundaryPoint out;
    out.z.resize(x.n());
    double twist = 0.0;
    for (std::size_t j = 0; j < x.n(); ++j) {
        out.z[j] = x.z[j] + y.z[j];
        // 2 Im(z_j conj(w_j)) in real coordinates: 2(x_{n+j} y_j - x_j y_{n+j})
        twist += 2.0 * std::imag(x.z[j] * std::conj(y.z[j]));
    }
    out.t = x.t + y.t + twist;
    return out;
}

BoundaryPoint heisenberg_inverse(const BoundaryPoint& x) {
    BoundaryPoint out = x;
    for (auto& zj : out.z) zj = -zj;
    out.t = -out.t;
    return out;
}

double sigma_twist(const BoundaryPoint& p, const BoundaryPoint& q, int k) {
    if (p.n() != 1 || q.n() != 1)
        throw std::invalid_argument("sigma_twist: n = 1 required");
    const cplx zk = std::pow(p.z[0], k);
    const cplx wk = std::pow(q.z[0], k);
    return p.t - q.t + 2.0 * std::imag(zk * std::conj(wk));
}

QuasiMetricParts quasi_metric(const BoundaryPoint& p, const BoundaryPoint& q, int k) {
    if (p.n() != 1 || q.n() != 1)
        throw std::invalid_argument("quasi_metric: n = 1 required");
    if (k < 1) throw std::invalid_argument("quasi_metric: k >= 1 required");
    QuasiMetricParts out;
    out.sigma = sigma_twist(p, q, k);
    const double az = std::abs(p.z[0]);
    const double aw = std::abs(q.z[0]);
    out.rho = az + aw + std::pow(std::abs(out.sigma), 1.0 / (2.0 * k));
    if (out.rho == 0.0) {
        // both points at z = 0 with equal t: coincident, everything vanishes
        return out;
    }
    out.h = std::norm(p.z[0] - q.z[0]) * std::pow(out.rho, 2.0 * k - 2.0) +
            std::abs(out.sigma);
    out.d = (out.h == 0.0) ? 0.0 : out.h * out.h * std::pow(out.rho, 2.0 - 2.0 * k);
    return out;
}

std::array<double, 3> horizontal_field_coeffs(Field which, double x1, double x2, int k) {
    if (k < 1) throw std::invalid_argument("horizontal_field_coeffs: k >= 1 required");
    const double r2 = x1 * x1 + x2 * x2;
    const double fac = (k == 1) ? 2.0 : 2.0 * k * std::pow(r2, k - 1);
    if (which == Field::X1) return {1.0, 0.0, fac * x2};
    return {0.0, 1.0, -fac * x1};
}

namespace detail {
void check_fd_step(const std::array<double, 3>& x, double h) {
    const double scale =
        1.0 + std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]);
    if (!(h > 0.0)) throw std::invalid_argument("apply_field_fd: h > 0 required");
    if (h < 1e-7 * scale)
        throw std::invalid_argument("apply_field_fd: step below cancellation guard");
}
}  // namespace detail

}  // namespace modelcr
