#include "modelcr/szego.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "modelcr/special.hpp"

namespace modelcr {

namespace {
constexpr double kPi = std::numbers::pi;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double abs2k(const std::vector<cplx>& z, int k) {
    double r2 = 0.0;
    for (const auto& zj : z) r2 += std::norm(zj);
    return std::pow(r2, k);
}

cplx herm(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * std::conj(b[j]);
    return s;
}
}  // namespace

double SiegelPoint::height(int k) const { return z_last.imag() - abs2k(z, k); }

SiegelPoint lift_boundary(const BoundaryPoint& b, int k) {
    return SiegelPoint{b.z, cplx{b.t, abs2k(b.z, k)}};
}

cplx a_szego(const SiegelPoint& p, const SiegelPoint& q) {
    return cplx{0.0, 0.5} * (std::conj(q.z_last) - p.z_last);
}

cplx szego_full(const SiegelPoint& p, const SiegelPoint& q, int n, int k) {
    if (static_cast<int>(p.n()) != n || static_cast<int>(q.n()) != n)
        throw std::invalid_argument("szego_full: dimension mismatch");
    if (p.height(k) < -1e-9 || q.height(k) < -1e-9)
        throw std::domain_error("szego_full: point outside the closed domain");
    const cplx A = a_szego(p, q);
    const cplx root = (k == 1) ? A : principal_pow(A, 1.0 / k);
    const cplx denom = root - herm(p.z, q.z);
    if (denom == cplx{0.0, 0.0})
        throw std::domain_error("szego_full: singular configuration");
    const cplx prefactor =
        (k == 1) ? cplx{1.0, 0.0}
                 : principal_pow(A, (1.0 - k) / static_cast<double>(k));
    return factorial(n) / (4.0 * std::pow(kPi, n + 1)) * prefactor *
           principal_pow(denom, cplx{-(n + 1.0), 0.0});
}

cplx szego_boundary(const BoundaryPoint& pb, const BoundaryPoint& qb, int n, int k) {
    return szego_full(lift_boundary(pb, k), lift_boundary(qb, k), n, k);
}

cplx s_rho(const std::vector<cplx>& z, double t, double rho, int n) {
    double r2 = 0.0;
    for (const auto& zj : z) r2 += std::norm(zj);
    if (rho == 0.0 && r2 == 0.0 && t == 0.0)
        throw std::domain_error("s_rho: singular at the origin with rho = 0");
    const double c = std::pow(2.0, n - 1) * factorial(n) / std::pow(kPi, n + 1);
    return c * principal_pow(cplx{rho * rho + r2, -t}, cplx{-(n + 1.0), 0.0});
}

SiegelPoint cayley_to_domain(const SiegelPoint& w, int k) {
    const cplx denom = 1.0 + w.z_last;
    if (denom == cplx{0.0, 0.0})
        throw std::domain_error("cayley_to_domain: w_{n+1} = -1");
    SiegelPoint out;
    out.z.resize(w.n());
    const cplx root = principal_pow(denom, 1.0 / k);
    for (std::size_t j = 0; j < w.n(); ++j) out.z[j] = w.z[j] / root;
    out.z_last = cplx{0.0, 1.0} * (1.0 - w.z_last) / denom;
    return out;
}

SiegelPoint cayley_from_domain(const SiegelPoint& z, int k) {
    const cplx i{0.0, 1.0};
    const cplx denom = i + z.z_last;
    if (denom == cplx{0.0, 0.0})
        throw std::domain_error("cayley_from_domain: z_{n+1} = -i");
    SiegelPoint out;
    out.z_last = (i - z.z_last) / denom;
    const cplx root = principal_pow(1.0 + out.z_last, 1.0 / k);
    out.z.resize(z.n());
    for (std::size_t j = 0; j < z.n(); ++j) out.z[j] = z.z[j] * root;
    return out;
}

cplx szego_ellipsoid(const SiegelPoint& zp, const SiegelPoint& wp, int n, int k) {
    const cplx q = 1.0 - zp.z_last * std::conj(wp.z_last);
    const cplx root = (k == 1) ? q : principal_pow(q, 1.0 / k);
    const cplx denom = root - herm(zp.z, wp.z);
    if (denom == cplx{0.0, 0.0} || q == cplx{0.0, 0.0})
        throw std::domain_error("szego_ellipsoid: singular configuration");
    const cplx tail =
        (k == 1) ? cplx{1.0, 0.0}
                 : principal_pow(q, -(k - 1.0) / static_cast<double>(k));
    return factorial(n) / (4.0 * std::pow(kPi, n + 1)) *
           principal_pow(denom, cplx{-(n + 1.0), 0.0}) * tail;
}

cplx psi_relative(const std::vector<cplx>& z, double t, int n) {
    double r2 = 0.0;
    for (const auto& zj : z) r2 += std::norm(zj);
    if (r2 == 0.0 && t == 0.0)
        throw std::domain_error("psi_relative: singular at the origin");
    const cplx m{r2, -t};
    const cplx p{r2, t};
    const double c = std::pow(2.0, n - 2) * factorial(n - 1) / std::pow(kPi, n + 1);
    return c * std::log(m / p) * principal_pow(m, cplx{-(double)n, 0.0});
}

ProjectResult szego_project(const std::function<cplx(cplx, double)>& f,
                            const ProjectConfig& cfg,
                            const std::vector<BoundaryPoint>& eval_points) {
    if (cfg.nx < 2 || cfg.nt < 2)
        throw std::invalid_argument("szego_project: grid too small");
    const double hx = 2.0 * cfg.R / (cfg.nx - 1);
    const double ht = 2.0 * cfg.T / (cfg.nt - 1);
    const double spacing = std::max(hx, ht);
    const double rho = (cfg.rho > 0.0) ? cfg.rho : 2.0 * spacing;
    if (rho < spacing)
        throw std::invalid_argument("szego_project: rho below grid spacing");
    for (const auto& e : eval_points)
        if (e.n() != 1) throw std::invalid_argument("szego_project: n = 1 required");

    const std::size_t ne = eval_points.size();
    const int nx = cfg.nx, nt = cfg.nt;
    std::vector<double> xs(nx), ts(nt);
    for (int i = 0; i < nx; ++i) xs[i] = -cfg.R + i * hx;
    for (int i = 0; i < nt; ++i) ts[i] = -cfg.T + i * ht;

    std::vector<cplx> ez(ne);
    std::vector<double> et(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        ez[e] = eval_points[e].z[0];
        et[e] = eval_points[e].t;
    }

    // one task per x1-row; deterministic reduction in row order afterwards
    std::vector<std::vector<cplx>> row_acc(nx, std::vector<cplx>(ne, cplx{0, 0}));
    std::vector<std::vector<double>> row_shell(nx, std::vector<double>(ne, 0.0));
    std::atomic<int> next_row{0};
    const double rho2 = rho * rho;
    const double shell_x = 0.9 * cfg.R, shell_t = 0.9 * cfg.T;

    auto worker = [&]() {
        std::vector<double> a(ne), tw0(ne);
        for (;;) {
            const int i = next_row.fetch_add(1);
            if (i >= nx) return;
            const double x1 = xs[i];
            auto& acc = row_acc[i];
            auto& shell = row_shell[i];
            for (int j = 0; j < nx; ++j) {
                const double x2 = xs[j];
                const cplx w{x1, x2};
                const bool xshell =
                    std::abs(x1) > shell_x || std::abs(x2) > shell_x;
                for (std::size_t e = 0; e < ne; ++e) {
                    a[e] = rho2 + std::norm(ez[e] - w);
                    tw0[e] = et[e] + 2.0 * std::imag(ez[e] * std::conj(w));
                }
                for (int m = 0; m < nt; ++m) {
                    const double s = ts[m];
                    const cplx fv = f(w, s);
                    const bool insh = xshell || std::abs(s) > shell_t;
                    for (std::size_t e = 0; e < ne; ++e) {
                        const cplx c{a[e], s - tw0[e]};
                        const cplx kern = 1.0 / (c * c);
                        acc[e] += fv * kern;
                        if (insh) shell[e] += std::abs(fv) * std::abs(kern);
                    }
                }
            }
        }
    };

    int nthreads = cfg.threads > 0
                       ? cfg.threads
                       : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    std::vector<std::thread> pool;
    for (int tix = 1; tix < nthreads; ++tix) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    const double cell = hx * hx * ht / (kPi * kPi);
    ProjectResult out;
    out.rho = rho;
    out.values.assign(ne, cplx{0.0, 0.0});
    std::vector<double> shell_tot(ne, 0.0);
    for (int i = 0; i < nx; ++i)
        for (std::size_t e = 0; e < ne; ++e) {
            out.values[e] += row_acc[i][e];
            shell_tot[e] += row_shell[i][e];
        }
    double worst = 0.0;
    for (std::size_t e = 0; e < ne; ++e) {
        out.values[e] *= cell;
        worst = std::max(worst, shell_tot[e] * cell);
    }
    out.truncation_error = 2.0 * worst;
    return out;
}

}  // namespace modelcr
