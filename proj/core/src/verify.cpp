#include "modelcr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "modelcr/fundamental.hpp"
#include "modelcr/special.hpp"

namespace modelcr {

namespace {
constexpr double kPi = std::numbers::pi;

double u01(std::mt19937_64& rng) {
    // explicit mapping, independent of library distribution internals
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(std::log(lo) + u01(rng) * (std::log(hi) - std::log(lo)));
}

cplx random_phase(std::mt19937_64& rng) {
    const double th = 2.0 * kPi * u01(rng);
    return {std::cos(th), std::sin(th)};
}

double rand_sign(std::mt19937_64& rng) { return u01(rng) < 0.5 ? -1.0 : 1.0; }

BoundaryPoint sample_boundary(std::mt19937_64& rng, int k) {
    const double r = log_uniform(rng, 1e-2, 1e2);
    const double rt = log_uniform(rng, 1e-2, 1e2);
    return BoundaryPoint(r * random_phase(rng),
                         rand_sign(rng) * std::pow(rt, 2.0 * k));
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

cplx szego_p_of(const BoundaryPoint& p, const BoundaryPoint& q, int k, cplx A) {
    return p.z[0] * std::conj(q.z[0]) / principal_pow(A, 1.0 / k);
}
}  // namespace

SweepReport pde_residual_sweep(int k, cplx lambda, int n_points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const BoundaryPoint base(cplx{0.35, 0.25}, 0.2);

    std::function<cplx(double, double, double)> kernel;
    if (k == 1) {
        kernel = [lambda](double a, double b, double c) {
            return k_lambda_closed_k1(a, b, c, lambda);
        };
    } else if (lambda == cplx{0.0, 0.0}) {
        kernel = [k, base](double a, double b, double c) {
            return k0_integral(BoundaryPoint(cplx{a, b}, c), base, k, 1e-13).value;
        };
    } else {
        kernel = [k, lambda, base](double a, double b, double c) {
            KernelParams prm{k, 1, lambda};
            return k_lambda_integral(BoundaryPoint(cplx{a, b}, c), base, prm, 1e-9)
                .value;
        };
    }

    // small steps: the truncation constant of the nested stencil is O(10),
    // so reaching a 1e-4 relative residual needs h around 5e-4
    const double hs[3] = {0.001, 0.0005, 0.00025};
    SweepReport rep;
    rep.name = "pde_residual";
    rep.samples = n_points;
    double slope_min = std::numeric_limits<double>::infinity();
    double slope_max = -slope_min;
    double worst_rel = 0.0;
    for (int i = 0; i < n_points; ++i) {
        BoundaryPoint p;
        for (;;) {
            const double r = 0.9 + 0.5 * u01(rng);
            p = BoundaryPoint(r * random_phase(rng), 2.0 * u01(rng) - 1.0);
            if (k == 1) break;
            if (std::abs(p_fund(p, base, k)) <= 0.8 &&
                quasi_metric(p, base, k).d >= 0.1)
                break;
        }
        const std::array<double, 3> x{p.z[0].real(), p.z[0].imag(), p.t};
        const double scale = std::abs(kernel(x[0], x[1], x[2]));
        double res[3];
        for (int j = 0; j < 3; ++j)
            res[j] = std::abs(delta_lambda_fd(kernel, k, lambda, x, hs[j]));
        const double slope = std::log(res[0] / res[2]) / std::log(hs[0] / hs[2]);
        slope_min = std::min(slope_min, slope);
        slope_max = std::max(slope_max, slope);
        worst_rel = std::max(worst_rel, res[2] / scale);
    }
    rep.statistic = worst_rel;
    rep.pass = slope_min >= 1.7 && slope_max <= 2.3 && worst_rel < 1e-4;
    rep.details = {{"slope_min", slope_min},
                   {"slope_max", slope_max},
                   {"max_rel_residual", worst_rel}};
    return rep;
}

SweepReport size_estimate_sweep(int k, int n_pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double sup = 0.0, inf = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int i = 0; i < n_pairs; ++i) {
        const BoundaryPoint p = sample_boundary(rng, k);
        const BoundaryPoint q = sample_boundary(rng, k);
        const auto qm = quasi_metric(p, q, k);
        if (qm.d == 0.0) continue;
        const double prod = std::abs(szego_boundary(p, q, 1, k)) * qm.d;
        sup = std::max(sup, prod);
        inf = std::min(inf, prod);
        ++used;
    }
    SweepReport rep;
    rep.name = "size_estimate";
    rep.samples = used;
    rep.statistic = sup / inf;
    // measured bands: ~2 (k=1), ~35 (k=2), ~1.3e3 (k=3); the threshold keeps
    // roughly one order of magnitude of headroom at each k
    rep.pass = std::isfinite(rep.statistic) && rep.statistic < std::pow(10.0, k + 1);
    rep.details = {{"sup", sup}, {"inf", inf}, {"band_ratio", rep.statistic}};
    return rep;
}

namespace {
// rescale a fixed perturbation direction until the quasi-distance from the
// anchor hits the requested target (bisection in log of the scale)
bool perturb_to_distance(const BoundaryPoint& anchor, const cplx& dz, double dt,
                         double target, int k, BoundaryPoint& out) {
    auto dist = [&](double s) {
        BoundaryPoint q(anchor.z[0] + s * dz, anchor.t + s * dt);
        return quasi_metric(q, anchor, k).d;
    };
    double lo = 1e-14, hi = 10.0;
    if (dist(lo) > target || dist(hi) < target) return false;
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);
        if (dist(mid) < target) lo = mid;
        else hi = mid;
        if (hi / lo < 1.0 + 1e-12) break;
    }
    const double s = std::sqrt(lo * hi);
    out = BoundaryPoint(anchor.z[0] + s * dz, anchor.t + s * dt);
    return true;
}
}  // namespace

SweepReport holder_estimate_sweep(int k, int n_triples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double expo = 1.0 / (2.0 * k + 2.0);
    double sup2 = 0.0, sup1 = 0.0;
    std::vector<double> lx2, ly2, lx1, ly1;
    int used = 0;
    while (used < n_triples) {
        // comparable scales so the pair separation is a usable reference
        const double scale = log_uniform(rng, 1e-1, 1e1);
        BoundaryPoint p(scale * random_phase(rng),
                        rand_sign(rng) * std::pow(scale * (0.5 + u01(rng)), 2.0 * k));
        BoundaryPoint q0(scale * (0.3 + u01(rng)) * random_phase(rng),
                         rand_sign(rng) * std::pow(scale * (0.5 + u01(rng)), 2.0 * k));
        const double dpq = quasi_metric(p, q0, k).d;
        if (dpq == 0.0) continue;
        const double eta = log_uniform(rng, 1e-6, 1e-2);
        const double sz = std::abs(p.z[0] - q0.z[0]) + std::abs(q0.z[0]);
        const cplx dz = sz * random_phase(rng);
        const double dt = (2.0 * u01(rng) - 1.0) * std::pow(sz, 2.0 * k);

        BoundaryPoint q1, p1;
        if (!perturb_to_distance(q0, dz, dt, eta * dpq, k, q1)) continue;
        if (!perturb_to_distance(p, dz, dt, eta * dpq, k, p1)) continue;
        const double eta2 = quasi_metric(q1, q0, k).d / dpq;
        const double eta1 = quasi_metric(p1, p, k).d / dpq;
        if (eta2 > 0.01 || eta1 > 0.01 || eta2 <= 0.0 || eta1 <= 0.0) continue;

        const cplx s0 = szego_boundary(p, q0, 1, k);
        const double num2 = std::abs(szego_boundary(p, q1, 1, k) - s0) * dpq;
        const double num1 = std::abs(szego_boundary(p1, q0, 1, k) - s0) * dpq;
        if (num2 > 0.0) {
            sup2 = std::max(sup2, num2 / std::pow(eta2, expo));
            lx2.push_back(std::log(eta2));
            ly2.push_back(std::log(num2));
        }
        if (num1 > 0.0) {
            sup1 = std::max(sup1, num1 / std::pow(eta1, expo));
            lx1.push_back(std::log(eta1));
            ly1.push_back(std::log(num1));
        }
        ++used;
    }
    const double slope2 = fit_slope(lx2, ly2);
    const double slope1 = fit_slope(lx1, ly1);
    SweepReport rep;
    rep.name = "holder_estimate";
    rep.samples = used;
    rep.statistic = sup2;
    rep.pass = std::isfinite(sup2) && std::isfinite(sup1) &&
               slope2 >= expo - 0.05 && slope1 >= expo - 0.05;
    rep.details = {{"sup_second_arg", sup2}, {"sup_first_arg", sup1},
                   {"exponent_second_arg", slope2},
                   {"exponent_first_arg", slope1},
                   {"exponent_bound", expo}};
    return rep;
}

SweepReport lemma61_ratio_sweep(int k, int n_pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double inf0 = std::numeric_limits<double>::infinity();
    double sup1 = 0, sup2 = 0;
    double sup3 = 0, inf3 = inf0, sup4 = 0, inf4 = inf0;
    int used = 0;
    for (int i = 0; i < n_pairs; ++i) {
        const BoundaryPoint p = sample_boundary(rng, k);
        const BoundaryPoint q = sample_boundary(rng, k);
        const auto qm = quasi_metric(p, q, k);
        if (qm.h == 0.0) continue;
        const cplx zk = std::pow(p.z[0], k), wk = std::pow(q.z[0], k);
        const cplx A = a_szego(lift_boundary(p, k), lift_boundary(q, k));
        const cplx P = szego_p_of(p, q, k, A);
        const double rho2k = std::pow(qm.rho, 2.0 * k);
        sup1 = std::max(sup1, std::norm(zk - wk) / qm.h);
        sup2 = std::max(sup2, qm.h / rho2k);
        const double r3 = rho2k / std::abs(A);
        const double r4 = std::abs(1.0 - P) * std::abs(A) / qm.h;
        sup3 = std::max(sup3, r3);
        inf3 = std::min(inf3, r3);
        sup4 = std::max(sup4, r4);
        inf4 = std::min(inf4, r4);
        ++used;
    }
    SweepReport rep;
    rep.name = "lemma61_ratios";
    rep.samples = used;
    const double band3 = sup3 / inf3, band4 = sup4 / inf4;
    rep.statistic = std::max(band3, band4);
    // the upper bounds for the one-sided comparisons follow from
    // |z^k - w^k| <= k rho^{k-1} |z - w| and |z - w| <= rho
    rep.pass = sup1 <= k * k + 0.5 && sup2 <= 2.5 &&
               std::isfinite(band3) && band3 < 200.0 * std::pow(9.0, k) &&
               std::isfinite(band4) && band4 < 1e4;
    rep.details = {{"sup_zk_diff_over_h", sup1}, {"sup_h_over_rho2k", sup2},
                   {"band_rho2k_over_A", band3}, {"band_1mP_A_over_h", band4}};
    return rep;
}

SweepReport reproducing_sweep(const ReproducingConfig& cfg) {
    // interior test points, well inside the truncation box
    const std::vector<BoundaryPoint> pts = {
        {cplx{0.30, 0.20}, 0.50},  {cplx{-0.50, 0.10}, -0.80},
        {cplx{0.80, -0.40}, 1.20}, {cplx{-0.20, -0.60}, 0.20},
        {cplx{0.70, 0.50}, -1.50}, {cplx{0.10, 0.90}, 0.90},
        {cplx{-0.85, -0.20}, -0.30}, {cplx{0.60, 0.60}, 1.40},
        {cplx{-0.40, 0.45}, -1.10}, {cplx{0.25, -0.80}, 0.05}};
    const std::size_t ne = pts.size();

    auto f1 = [](cplx w, double s) {
        const cplx z2{s, std::norm(w) + 1.0};
        return 1.0 / (z2 * z2);
    };
    auto f2 = [](cplx w, double s) {
        const cplx z2{s, std::norm(w) + 2.0};
        return 1.0 / (z2 * z2 * z2);
    };
    auto f3 = [&f1](cplx w, double s) { return std::conj(f1(w, s)); };

    auto project = [&](const std::function<cplx(cplx, double)>& f) {
        ProjectConfig grid = cfg.grid;
        const auto coarse = szego_project(f, grid, pts);
        if (!cfg.richardson) return coarse.values;
        grid.rho = coarse.rho * 0.5;
        const auto fine = szego_project(f, grid, pts);
        std::vector<cplx> out(ne);
        for (std::size_t e = 0; e < ne; ++e)
            out[e] = (4.0 * fine.values[e] - coarse.values[e]) / 3.0;
        return out;
    };

    const auto v1 = project(f1);
    const auto v2 = project(f2);
    const auto v3 = project(f3);

    double e1 = 0, e2 = 0, e3 = 0;
    for (std::size_t e = 0; e < ne; ++e) {
        const cplx z2{pts[e].t, std::norm(pts[e].z[0]) + 1.0};
        const cplx w2{pts[e].t, std::norm(pts[e].z[0]) + 2.0};
        const cplx F1 = 1.0 / (z2 * z2);
        const cplx F2 = 1.0 / (w2 * w2 * w2);
        e1 = std::max(e1, std::abs(v1[e] - F1) / std::abs(F1));
        e2 = std::max(e2, std::abs(v2[e] - F2) / std::abs(F2));
        e3 = std::max(e3, std::abs(v3[e]) / std::abs(F1));
    }
    SweepReport rep;
    rep.name = "reproducing";
    rep.samples = static_cast<int>(ne);
    rep.statistic = std::max(e1, e2);
    rep.pass = rep.statistic < cfg.holo_tol && e3 < cfg.anti_tol;
    rep.details = {{"err_pole2", e1}, {"err_pole3", e2},
                   {"antiholomorphic_leak", e3}, {"rho", cfg.grid.rho}};
    return rep;
}

}  // namespace modelcr
