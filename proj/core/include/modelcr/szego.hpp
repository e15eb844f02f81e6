#pragma once

#include <functional>

#include "modelcr/types.hpp"

namespace modelcr {

// Point (z, z_{n+1}) in (the closure of) the model domain.
struct SiegelPoint {
    std::vector<cplx> z;
    cplx z_last{0.0, 0.0};

    SiegelPoint() = default;
    SiegelPoint(std::vector<cplx> z_, cplx last) : z(std::move(z_)), z_last(last) {}
    std::size_t n() const { return z.size(); }
    // height above the boundary: Im(z_{n+1}) - |z|^{2k}
    double height(int k) const;
};

// lift a boundary point to its Siegel coordinates, z_{n+1} = t + i|z|^{2k}
SiegelPoint lift_boundary(const BoundaryPoint& b, int k);

// A = (i/2)(conj(w_{n+1}) - z_{n+1}); on the boundary this equals
// (1/2)(|z|^{2k} + |w|^{2k}) - (i/2)(t - s).
cplx a_szego(const SiegelPoint& p, const SiegelPoint& q);

// Cauchy-Szego kernel on the model domain:
//   (n!/(4 pi^{n+1})) A^{(1-k)/k} / (A^{1/k} - sum z_j conj(w_j))^{n+1}.
cplx szego_full(const SiegelPoint& p, const SiegelPoint& q, int n, int k);

// The same kernel restricted to zero heights.
cplx szego_boundary(const BoundaryPoint& pb, const BoundaryPoint& qb, int n, int k);

// Boundary approximant on the Heisenberg group (k = 1):
//   (2^{n-1} n! / pi^{n+1}) (rho^2 + |z|^2 - it)^{-n-1}.
cplx s_rho(const std::vector<cplx>& z, double t, double rho, int n);

// Generalized Cayley transform, ellipsoid/ball coordinates w -> domain
// coordinates z, and its inverse.
SiegelPoint cayley_to_domain(const SiegelPoint& w, int k);
SiegelPoint cayley_from_domain(const SiegelPoint& z, int k);

// Cauchy-Szego kernel transported to the ellipsoid image:
//   (n!/(4 pi^{n+1})) [(1 - z_{n+1} conj(w_{n+1}))^{1/k} - sum z_j conj(w_j)]^{-(n+1)}
//     * (1 - z_{n+1} conj(w_{n+1}))^{-(k-1)/k}.
cplx szego_ellipsoid(const SiegelPoint& zp, const SiegelPoint& wp, int n, int k);

// Relative fundamental solution:
//   (2^{n-2}(n-1)!/pi^{n+1}) log((|z|^2 - it)/(|z|^2 + it)) (|z|^2 - it)^{-n}.
cplx psi_relative(const std::vector<cplx>& z, double t, int n);

// ---- discrete Szego projection on the k = 1, n = 1 boundary ----------------

struct ProjectConfig {
    double R = 6.0;   // |x1|, |x2| truncation
    double T = 30.0;  // |t| truncation
    int nx = 121;
    int nt = 1201;
    double rho = 0.0;  // 0 -> default 2 * max grid spacing
    int threads = 0;   // 0 -> hardware concurrency
};

struct ProjectResult {
    std::vector<cplx> values;       // one per evaluation point
    double rho = 0.0;               // the rho actually used
    double truncation_error = 0.0;  // estimate from the outermost grid shell
};

// Truncated group convolution f * S_rho over a tensor grid on
// [-R,R]^2 x [-T,T]; f is sampled through the callback f(w, s). Throws when
// rho < grid spacing (kernel unresolvable). Parallel over evaluation points;
// per-point sums are sequential, so results are thread-count independent.
ProjectResult szego_project(const std::function<cplx(cplx, double)>& f,
                            const ProjectConfig& cfg,
                            const std::vector<BoundaryPoint>& eval_points);

}  // namespace modelcr
