#include "modelcr/fundamental.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "modelcr/special.hpp"

namespace modelcr {

namespace {
constexpr double kPi = std::numbers::pi;

void require_n1(const BoundaryPoint& p, const BoundaryPoint& q, const char* who) {
    if (p.n() != 1 || q.n() != 1)
        throw std::invalid_argument(std::string(who) + ": n = 1 required");
}

cplx gee(cplx lambda) {
    return gamma_complex(0.5 * (1.0 + lambda)) * gamma_complex(0.5 * (1.0 - lambda));
}
}  // namespace

cplx a_fund(const BoundaryPoint& p, const BoundaryPoint& q, int k) {
    require_n1(p, q, "a_fund");
    const double zk = std::pow(std::abs(p.z[0]), 2 * k);
    const double wk = std::pow(std::abs(q.z[0]), 2 * k);
    return 0.5 * cplx{zk + wk, p.t - q.t};
}

cplx p_fund(const BoundaryPoint& p, const BoundaryPoint& q, int k) {
    require_n1(p, q, "p_fund");
    if (q.z[0] == cplx{0.0, 0.0}) return {0.0, 0.0};
    const cplx A = a_fund(p, q, k);
    if (A == cplx{0.0, 0.0})
        throw std::domain_error("p_fund: A = 0 with w != 0");
    return std::conj(p.z[0]) * q.z[0] / principal_pow(A, 1.0 / k);
}

cplx k_lambda_closed_k1(double x1, double x2, double t, cplx lambda) {
    const double r2 = x1 * x1 + x2 * x2;
    if (r2 == 0.0 && t == 0.0)
        throw std::domain_error("k_lambda_closed_k1: singular at the origin");
    const cplx m{r2, -t};  // |x'|^2 - it
    const cplx p{r2, t};   // |x'|^2 + it
    return -gee(lambda) / (4.0 * kPi * kPi) *
           principal_pow(m, -0.5 * (1.0 + lambda)) *
           principal_pow(p, -0.5 * (1.0 - lambda));
}

KernelResult k_lambda_integral(const BoundaryPoint& p, const BoundaryPoint& q,
                               const KernelParams& params, double rel_tol) {
    require_n1(p, q, "k_lambda_integral");
    const int k = params.k;
    const cplx lam = params.lambda;
    if (k < 1) throw std::invalid_argument("k_lambda_integral: k >= 1 required");
    if (std::abs(lam.real()) >= 1.0)
        throw std::invalid_argument("k_lambda_integral: |Re lambda| < 1 required");
    const cplx A = a_fund(p, q, k);
    if (A == cplx{0.0, 0.0})
        throw std::domain_error("k_lambda_integral: coincident points");
    const cplx P = p_fund(p, q, k);
    if (std::abs(1.0 - P) < 1e-6)
        throw std::domain_error(
            "k_lambda_integral: within 1e-6 of the diagonal singularity");

    const cplx G = gee(lam);
    const cplx pref = principal_pow(A, -0.5 * (1.0 - lam)) *
                      principal_pow(std::conj(A), -0.5 * (1.0 + lam)) /
                      (4.0 * k * kPi * kPi * G);
    // axis exponents: sigma-axis mirrors the varsigma-axis
    const cplx a1 = -0.5 * (1.0 + lam), b1 = -0.5 * (1.0 - lam);
    const cplx a2 = -0.5 * (1.0 - lam), b2 = -0.5 * (1.0 + lam);
    const cplx Pc = std::conj(P);

    KernelResult out;
    if (k == 1) {
        auto i1 = tanh_sinh_01(a1, b1, [&](double s) { return 1.0 / (1.0 - P * s); },
                               0.1 * rel_tol);
        auto i2 = tanh_sinh_01(a2, b2, [&](double s) { return 1.0 / (1.0 - Pc * s); },
                               0.1 * rel_tol);
        if (!i1.converged || !i2.converged)
            throw std::runtime_error(
                "k_lambda_integral: quadrature did not converge; achieved " +
                std::to_string(std::max(i1.error_estimate, i2.error_estimate)));
        out.value = pref * i1.value * i2.value;
        out.error_estimate =
            std::abs(pref) * (i1.error_estimate * std::abs(i2.value) +
                              i2.error_estimate * std::abs(i1.value));
        return out;
    }

    // k >= 2: coupling product ties the axes together; tensor tanh-sinh.
    const double absP2 = std::norm(P);
    std::vector<cplx> omega(k - 1);
    for (int l = 1; l < k; ++l)
        omega[l - 1] = std::exp(cplx{0.0, 2.0 * kPi * l / k});

    cplx prev{0.0, 0.0};
    bool converged = false;
    cplx val{0.0, 0.0};
    double err = 0.0;
    for (int level = 0; level <= 6; ++level) {
        const double h = 0.5 / static_cast<double>(1 << level);
        const auto nodes = tanh_sinh_nodes(h);
        const std::size_t m = nodes.size();
        std::vector<cplx> f1(m), f2(m);
        std::vector<double> rk(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& nd = nodes[i];
            f1[i] = std::exp(a1 * nd.log_s + b1 * nd.log_1ms + nd.log_w);
            f2[i] = std::exp(a2 * nd.log_s + b2 * nd.log_1ms + nd.log_w);
            rk[i] = std::exp(nd.log_s / k);
        }
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) {
            if (f1[i] == cplx{0.0, 0.0}) continue;
            const cplx di = 1.0 - P * rk[i];
            cplx row{0.0, 0.0};
            for (std::size_t j = 0; j < m; ++j) {
                if (f2[j] == cplx{0.0, 0.0}) continue;
                cplx denom = di * (1.0 - Pc * rk[j]);
                const double rij = rk[i] * rk[j];
                for (int l = 0; l < k - 1; ++l)
                    denom *= 1.0 - omega[l] * absP2 * rij;
                row += f2[j] / denom;
            }
            acc += f1[i] * row;
        }
        val = acc;
        if (level >= 2) {
            err = std::abs(acc - prev);
            if (err <= rel_tol * std::abs(acc)) {
                converged = true;
                break;
            }
        }
        prev = acc;
    }
    if (!converged)
        throw std::runtime_error(
            "k_lambda_integral: tensor quadrature did not converge; achieved " +
            std::to_string(err));
    out.value = pref * val;
    out.error_estimate = std::abs(pref) * err;
    return out;
}

KernelResult k0_integral(const BoundaryPoint& p, const BoundaryPoint& q, int k,
                         double rel_tol) {
    require_n1(p, q, "k0_integral");
    if (k < 1) throw std::invalid_argument("k0_integral: k >= 1 required");
    const cplx A = a_fund(p, q, k);
    if (A == cplx{0.0, 0.0}) throw std::domain_error("k0_integral: coincident points");
    const cplx P = p_fund(p, q, k);
    if (std::abs(1.0 - P) < 1e-6)
        throw std::domain_error("k0_integral: within 1e-6 of the diagonal singularity");
    const cplx Pc = std::conj(P);
    const double absP2 = std::norm(P);
    std::vector<cplx> omega(std::max(0, k - 1));
    for (int l = 1; l < k; ++l)
        omega[l - 1] = std::exp(cplx{0.0, 2.0 * kPi * l / k});

    const double pref = 1.0 / (4.0 * k * kPi * kPi * kPi * std::abs(A));
    // substitute s = v^k on each axis: the Chebyshev weight becomes
    // k v^{k/2-1} (1-v)^{-1/2} / sqrt(1 + v + ... + v^{k-1}) and the
    // remaining denominators are rational in v; tanh-sinh on each axis.
    const double ax = 0.5 * k - 1.0, bx = -0.5;
    cplx prev{0.0, 0.0};
    KernelResult out;
    bool converged = false;
    for (int level = 0; level <= 7; ++level) {
        const double h = 0.5 / static_cast<double>(1 << level);
        const auto nodes = tanh_sinh_nodes(h);
        const std::size_t m = nodes.size();
        std::vector<double> fv(m), v(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& nd = nodes[i];
            v[i] = nd.s;
            double chain = 0.0;
            for (int l = 0; l < k; ++l) chain += std::pow(nd.s, l);
            fv[i] = std::exp(ax * nd.log_s + bx * nd.log_1ms + nd.log_w) * k /
                    std::sqrt(chain);
        }
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) {
            if (fv[i] == 0.0) continue;
            const cplx di = 1.0 - P * v[i];
            cplx row{0.0, 0.0};
            for (std::size_t j = 0; j < m; ++j) {
                if (fv[j] == 0.0) continue;
                cplx denom = di * (1.0 - Pc * v[j]);
                const double vij = v[i] * v[j];
                for (int l = 0; l < k - 1; ++l)
                    denom *= 1.0 - omega[l] * absP2 * vij;
                row += fv[j] / denom;
            }
            acc += fv[i] * row;
        }
        if (level >= 2) {
            out.error_estimate = pref * std::abs(acc - prev);
            if (out.error_estimate <= rel_tol * pref * std::abs(acc)) {
                out.value = pref * acc;
                converged = true;
                break;
            }
        }
        prev = acc;
    }
    if (!converged)
        throw std::runtime_error("k0_integral: quadrature did not converge; achieved " +
                                 std::to_string(out.error_estimate));
    return out;
}

}  // namespace modelcr
