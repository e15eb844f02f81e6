#include "modelcr/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "modelcr/special.hpp"

namespace modelcr {

namespace {
constexpr double kPi = std::numbers::pi;

void check_pole(double z) {
    const double m = std::round(z / kPi);
    if (m != 0.0 && std::abs(z - m * kPi) < 1e-12)
        throw std::domain_error("mu_fn: pole at a nonzero multiple of pi");
}

// safeguarded Newton: bisection to width 1e-6, then Newton with the analytic
// derivative, falling back to bisection when a step leaves the bracket
double solve_mu(double lo, double hi, double ratio) {
    double flo = mu_fn(lo) - ratio;
    for (int it = 0; it < 200 && hi - lo > 1e-6; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = mu_fn(mid) - ratio;
        if (flo * fm <= 0.0) hi = mid;
        else { lo = mid; flo = fm; }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        const double f = mu_fn(x) - ratio;
        if (std::abs(f) <= 1e-12 * (1.0 + std::abs(ratio))) return x;
        const double d = mu_prime(x);
        double xn = x - f / d;
        if (!(xn > lo && xn < hi)) {
            // derivative too small near a fold point; bisect instead
            if (flo * f <= 0.0) hi = x;
            else { lo = x; flo = f; }
            xn = 0.5 * (lo + hi);
        } else {
            if (flo * f <= 0.0) hi = x;
            else { lo = x; flo = f; }
        }
        x = xn;
    }
    return x;
}

// critical point of mu in (m pi, (m+1) pi): the solution of tan z = z there
double mu_critical_point(int m) {
    double lo = m * kPi + 1e-9, hi = (m + 1) * kPi - 1e-9;
    auto psi = [](double z) { return std::sin(z) - z * std::cos(z); };
    double flo = psi(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = psi(mid);
        if (flo * fm <= 0.0) hi = mid;
        else { lo = mid; flo = fm; }
    }
    return 0.5 * (lo + hi);
}
}  // namespace

double mu_fn(double z) {
    if (z == 0.0) return 0.0;
    if (std::abs(z) < 1e-2) {
        const double z2 = z * z;
        return z * (2.0 / 3.0 + z2 * (4.0 / 45.0 + z2 * (4.0 / 315.0)));
    }
    check_pole(z);
    const double s = std::sin(z);
    return z / (s * s) - std::cos(z) / s;
}

double mu_prime(double z) {
    if (std::abs(z) < 1e-2) {
        const double z2 = z * z;
        return 2.0 / 3.0 + z2 * (4.0 / 15.0 + z2 * (4.0 / 63.0));
    }
    check_pole(z);
    const double s = std::sin(z);
    return 2.0 * (s - z * std::cos(z)) / (s * s * s);
}

double nu_fn(double z) {
    if (std::abs(z) < 1e-4) {
        return 1.0 / (1.0 + z * (2.0 / 3.0 + z * (-1.0 / 3.0 + z * (-2.0 / 15.0))));
    }
    const double s = std::sin(z);
    const double denom = z + s * s - s * std::cos(z);
    if (std::abs(denom) < 1e-14)
        throw std::domain_error("nu_fn: vanishing denominator");
    return z * z / denom;
}

std::vector<std::pair<double, double>> mu_root_count_and_brackets(double ratio) {
    if (!(ratio >= 0.0))
        throw std::invalid_argument("mu_root_count_and_brackets: ratio >= 0 required");
    std::vector<std::pair<double, double>> out;
    if (ratio == 0.0) return out;  // degenerate straight line, tau = 0
    out.emplace_back(0.0, kPi - 1e-9);
    for (int m = 1;; ++m) {
        const double xm = mu_critical_point(m);
        // mu(x_m) = x_m at the fold (tan z = z), increasing in m
        const double critical = mu_fn(xm);
        if (critical > ratio) break;
        out.emplace_back(m * kPi + 1e-9, xm);
        out.emplace_back(xm, (m + 1) * kPi - 1e-9);
        if (m > 10000000)
            throw std::runtime_error("mu_root_count_and_brackets: ratio too large");
    }
    return out;
}

std::vector<GeodesicSolution> solve_geodesics_k1(double x1, double x2, double t) {
    const double r2 = x1 * x1 + x2 * x2;
    if (r2 == 0.0)
        throw std::invalid_argument(
            "solve_geodesics_k1: x' != 0 required (use taxis_lengths_k1)");
    std::vector<GeodesicSolution> out;
    if (t == 0.0) {
        out.push_back({1, 0.0, std::sqrt(r2)});
        return out;
    }
    const double ratio = std::abs(t) / r2;
    for (const auto& [lo, hi] : mu_root_count_and_brackets(ratio)) {
        const double tau = solve_mu(lo, hi, ratio);
        out.push_back({0, tau, std::sqrt(nu_fn(tau) * (r2 + std::abs(t)))});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.length < b.length; });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].branch_index = static_cast<int>(i) + 1;
    return out;
}

std::vector<TAxisGeodesic> taxis_lengths_k1(double t, int m_max) {
    if (t == 0.0) throw std::invalid_argument("taxis_lengths_k1: t != 0 required");
    if (m_max < 1) throw std::invalid_argument("taxis_lengths_k1: m_max >= 1");
    std::vector<TAxisGeodesic> out;
    out.reserve(m_max);
    const double at = std::abs(t);
    for (int m = 1; m <= m_max; ++m) {
        TAxisGeodesic g;
        g.length = std::sqrt(m * kPi * at);
        g.radius = 0.5 * std::sqrt(at / (m * kPi));
        g.area = at / (4.0 * m);
        out.push_back(g);
    }
    return out;
}

double cc_distance_k1(double x1, double x2, double t) {
    const double r2 = x1 * x1 + x2 * x2;
    if (r2 == 0.0 && t == 0.0)
        throw std::invalid_argument("cc_distance_k1: origin");
    if (r2 == 0.0) return std::sqrt(kPi * std::abs(t));
    return solve_geodesics_k1(x1, x2, t).front().length;
}

double action_identity_check(double x1, double x2, double t,
                             const std::vector<GeodesicSolution>& solutions) {
    const double r2 = x1 * x1 + x2 * x2;
    const double at = std::abs(t);
    double worst = 0.0;
    for (const auto& sol : solutions) {
        const double tau = sol.tau;
        double f;
        if (tau < 1e-6) {
            // (tau/2) cot(tau) r^2 -> r^2 (1/2 - tau^2/6 - ...)
            f = 0.5 * tau * at + r2 * (0.5 - tau * tau / 6.0);
        } else {
            f = 0.5 * tau * (at + (std::cos(tau) / std::sin(tau)) * r2);
        }
        worst = std::max(worst, std::abs(f - 0.5 * sol.length * sol.length));
    }
    return worst;
}

std::vector<double> k2_taxis_lengths(double t, int m_max) {
    if (t == 0.0) throw std::invalid_argument("k2_taxis_lengths: t != 0 required");
    if (m_max < 1) throw std::invalid_argument("k2_taxis_lengths: m_max >= 1");
    const double k0 = std::sqrt(2.0) / 4.0 * (std::sqrt(3.0) - 1.0);
    const double K = complete_elliptic_K(k0);
    const double Q = q_constant();
    const double base = std::pow(K, 4.0) * std::abs(t) / (4.0 * Q);
    std::vector<double> out;
    out.reserve(m_max);
    for (int m = 1; m <= m_max; ++m)
        out.push_back(std::pow(static_cast<double>(m) * m * m * base, 0.25));
    return out;
}

GeodesicCountBounds k2_count_bounds(double x1, double x2, double t) {
    const double r2 = x1 * x1 + x2 * x2;
    if (r2 == 0.0 || t == 0.0)
        throw std::invalid_argument("k2_count_bounds: x' != 0 and t != 0 required");
    const double ratio = 0.75 * std::abs(t) / (r2 * r2);
    const double Q = q_constant();
    int m = static_cast<int>(std::ceil(ratio / Q - 0.5));
    if (m < 0) m = 0;
    GeodesicCountBounds out;
    out.m = m;
    out.lower = std::max(1, 2 * m - 1);
    out.upper = 2 * m + 1;
    return out;
}

}  // namespace modelcr
