#include "modelcr/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modelcr {

namespace {
constexpr double kPi = std::numbers::pi;

double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}
}  // namespace

cplx principal_pow(cplx base, cplx exponent) {
    if (base == cplx{0.0, 0.0}) {
        if (exponent.real() > 0.0) return {0.0, 0.0};
        throw std::domain_error("principal_pow: 0 base with Re(exponent) <= 0");
    }
    // std::log uses arg in (-pi, pi]; exactly the fixed branch convention.
    return std::exp(exponent * std::log(base));
}

cplx gamma_complex(cplx zc) {
    // Lanczos, g = 7, 9 coefficients (~15 digits).
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,     12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    if (zc.real() < 0.5) {
        // reflection; poles at non-positive integers surface as division by 0
        const cplx s = std::sin(kPi * zc);
        if (s == cplx{0.0, 0.0})
            throw std::domain_error("gamma_complex: pole at non-positive integer");
        return kPi / (s * gamma_complex(1.0 - zc));
    }
    const cplx z = zc - 1.0;
    cplx x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

double q_constant() {
    // (1/4) Gamma(1/6)/Gamma(2/3) sqrt(pi); real lgamma keeps full precision
    const double ratio = std::exp(std::lgamma(1.0 / 6.0) - std::lgamma(2.0 / 3.0));
    return 0.25 * ratio * std::sqrt(kPi);
}

double complete_elliptic_K(double modulus) {
    if (!(modulus >= 0.0 && modulus < 1.0))
        throw std::domain_error("complete_elliptic_K: modulus in [0,1) required");
    double a = 1.0;
    double b = std::sqrt(1.0 - modulus * modulus);
    for (int it = 0; it < 60 && std::abs(a - b) > 2e-16 * a; ++it) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

// ---- Gauss-Jacobi ----------------------------------------------------------

namespace {
// Jacobi polynomial P_n^{(A,B)}(x) and its derivative via the three-term
// recurrence and the standard derivative identity.
void jacobi_pn(int n, double A, double B, double x, double& pn, double& pnm1) {
    double p0 = 1.0;
    if (n == 0) {
        pn = p0;
        pnm1 = 0.0;
        return;
    }
    double p1 = 0.5 * ((A + B + 2.0) * x + (A - B));
    for (int m = 1; m < n; ++m) {
        const double dm = static_cast<double>(m);
        const double c = 2.0 * dm + A + B;
        const double a1 = 2.0 * (dm + 1.0) * (dm + A + B + 1.0) * c;
        const double a2 = (c + 1.0) * (A * A - B * B);
        const double a3 = c * (c + 1.0) * (c + 2.0);
        const double a4 = 2.0 * (dm + A) * (dm + B) * (c + 2.0);
        const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pnm1 = p0;
}

double jacobi_deriv(int n, double A, double B, double x, double pn, double pnm1) {
    const double dn = static_cast<double>(n);
    const double c = 2.0 * dn + A + B;
    return (dn * (A - B - c * x) * pn + 2.0 * (dn + A) * (dn + B) * pnm1) /
           (c * (1.0 - x * x));
}
}  // namespace

QuadratureRule gauss_jacobi_rule(int order, double alpha, double beta) {
    if (order < 1) throw std::invalid_argument("gauss_jacobi_rule: order >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss_jacobi_rule: exponents must exceed -1");
    // [0,1] with weight s^alpha (1-s)^beta maps to [-1,1] Jacobi (A,B) = (beta, alpha)
    const double A = beta, B = alpha;
    const int n = order;

    // bracket the n simple roots by a sign scan on a Chebyshev-distributed grid
    std::vector<double> roots;
    int grid = std::max(64, 16 * n);
    while (true) {
        roots.clear();
        double xprev = -std::cos(0.5 * kPi / grid);
        double pprev, dum;
        jacobi_pn(n, A, B, xprev, pprev, dum);
        for (int j = 1; j < grid; ++j) {
            const double x = -std::cos((j + 0.5) * kPi / grid);
            double p;
            jacobi_pn(n, A, B, x, p, dum);
            if (pprev == 0.0) roots.push_back(xprev);
            else if (pprev * p < 0.0) {
                // bisect then Newton-polish
                double lo = xprev, hi = x, plo = pprev;
                for (int it = 0; it < 30; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    double pm;
                    jacobi_pn(n, A, B, mid, pm, dum);
                    if (plo * pm <= 0.0) hi = mid;
                    else { lo = mid; plo = pm; }
                }
                double r = 0.5 * (lo + hi);
                for (int it = 0; it < 50; ++it) {
                    double pr, prm1;
                    jacobi_pn(n, A, B, r, pr, prm1);
                    const double dr = jacobi_deriv(n, A, B, r, pr, prm1);
                    const double step = pr / dr;
                    r -= step;
                    if (std::abs(step) < 1e-15) break;
                }
                roots.push_back(r);
            }
            xprev = x;
            pprev = p;
        }
        if (static_cast<int>(roots.size()) == n) break;
        grid *= 2;
        if (grid > (1 << 22))
            throw std::runtime_error("gauss_jacobi_rule: root bracketing failed");
    }
    std::sort(roots.begin(), roots.end());

    const double logc = (A + B + 1.0) * std::numbers::ln2 +
                        std::lgamma(n + A + 1.0) + std::lgamma(n + B + 1.0) -
                        std::lgamma(n + 1.0) - std::lgamma(n + A + B + 1.0);
    const double map = std::pow(2.0, -alpha - beta - 1.0);

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.order = order;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = roots[i];
        double pn_, pnm1_;
        jacobi_pn(n, A, B, x, pn_, pnm1_);
        const double d = jacobi_deriv(n, A, B, x, pn_, pnm1_);
        const double w = std::exp(logc) / ((1.0 - x * x) * d * d);
        rule.nodes[i] = 0.5 * (1.0 + x);
        rule.weights[i] = w * map;
    }
    return rule;
}

// ---- tanh-sinh -------------------------------------------------------------

std::vector<DENode> tanh_sinh_nodes(double h, double tmax) {
    std::vector<DENode> out;
    const int nmax = static_cast<int>(tmax / h);
    out.reserve(2 * nmax + 1);
    for (int j = -nmax; j <= nmax; ++j) {
        const double t = j * h;
        const double u = 0.5 * kPi * std::sinh(t);
        // log s = -log(1+e^{-2u}) for u >= 0 and 2u - log(1+e^{2u}) otherwise;
        // both branches stay finite for |u| up to ~2e4
        auto log_sigmoid = [](double v) {
            return v >= 0.0 ? -std::log1p(std::exp(-2.0 * v))
                            : 2.0 * v - std::log1p(std::exp(2.0 * v));
        };
        DENode nd;
        nd.log_s = log_sigmoid(u);
        nd.log_1ms = log_sigmoid(-u);
        nd.s = std::exp(nd.log_s);
        nd.log_w = std::log(h * kPi / 4.0) + log_cosh(t) - 2.0 * log_cosh(u);
        out.push_back(nd);
    }
    return out;
}

TanhSinhResult tanh_sinh_01(cplx a, cplx b, const std::function<cplx(double)>& rest,
                            double rel_tol) {
    if (a.real() <= -1.0 || b.real() <= -1.0)
        throw std::domain_error("tanh_sinh_01: Re exponents must exceed -1");
    TanhSinhResult res;
    cplx prev{0.0, 0.0};
    for (int level = 0; level <= 7; ++level) {
        const double h = 0.5 / static_cast<double>(1 << level);
        cplx acc{0.0, 0.0};
        for (const auto& nd : tanh_sinh_nodes(h)) {
            const cplx fac =
                std::exp(a * nd.log_s + b * nd.log_1ms + nd.log_w);
            if (fac == cplx{0.0, 0.0}) continue;
            acc += fac * rest(nd.s);
        }
        res.value = acc;
        res.levels = level + 1;
        if (level >= 2) {
            res.error_estimate = std::abs(acc - prev);
            if (res.error_estimate <= rel_tol * std::abs(acc)) {
                res.converged = true;
                return res;
            }
        }
        prev = acc;
    }
    return res;
}

}  // namespace modelcr
