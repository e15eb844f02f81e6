#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "modelcr/fundamental.hpp"
#include "modelcr/special.hpp"
#include "oracles.hpp"

using namespace modelcr;
constexpr double kPi = std::numbers::pi;

namespace {
double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

BoundaryPoint rand_pt(std::mt19937_64& rng) {
    const double th = 2.0 * kPi * u01(rng);
    const double r = 0.2 + 1.3 * u01(rng);
    return BoundaryPoint(cplx{r * std::cos(th), r * std::sin(th)},
                         3.0 * (2.0 * u01(rng) - 1.0));
}

cplx gee(cplx lam) {
    return gamma_complex(0.5 * (1.0 + lam)) * gamma_complex(0.5 * (1.0 - lam));
}

// independently derived closed form of the k = 1 integral kernel via the
// Euler integral: (G/4pi^2) (A - conj(z)w)^{-(1-l)/2} (conj(A) - z conj(w))^{-(1+l)/2}
cplx k1_integral_closed(const BoundaryPoint& p, const BoundaryPoint& q, cplx lam) {
    const cplx A = a_fund(p, q, 1);
    const cplx B1 = A - std::conj(p.z[0]) * q.z[0];
    const cplx B2 = std::conj(A) - p.z[0] * std::conj(q.z[0]);
    return gee(lam) / (4.0 * kPi * kPi) * principal_pow(B1, -0.5 * (1.0 - lam)) *
           principal_pow(B2, -0.5 * (1.0 + lam));
}
}  // namespace

TEST_CASE("A function") {
    const BoundaryPoint o(cplx{0, 0}, 0.0);
    CHECK(a_fund(o, o, 1) == cplx{0, 0});
    const BoundaryPoint u(cplx{1, 0}, 0.0);
    CHECK(std::abs(a_fund(u, u, 1) - cplx{1, 0}) < 1e-15);
    std::mt19937_64 rng(5);
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < 100; ++i) {
            const auto p = rand_pt(rng), q = rand_pt(rng);
            const BoundaryPoint pm(p.z[0], 2.0 * q.t - p.t);  // t - t0 negated
            CHECK(std::abs(std::conj(a_fund(p, q, k)) - a_fund(pm, q, k)) < 1e-13);
        }
}

TEST_CASE("P function") {
    std::mt19937_64 rng(6);
    const BoundaryPoint o(cplx{0, 0}, 0.7);
    const BoundaryPoint any(cplx{0.4, 0.2}, -0.3);
    CHECK(p_fund(any, o, 2) == cplx{0, 0});
    const BoundaryPoint u(cplx{1, 0}, 0.0);
    CHECK(std::abs(p_fund(u, u, 1) - 1.0) < 1e-14);
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < 100000 / 3; ++i) {
            const auto p = rand_pt(rng), q = rand_pt(rng);
            CHECK(std::abs(p_fund(p, q, k)) <= 1.0 + 1e-12);
        }
    // |P| = 1 only at |z| = |w|, t = t0: stay 1 - delta away otherwise
    for (int i = 0; i < 2000; ++i) {
        const auto p = rand_pt(rng);
        auto q = rand_pt(rng);
        if (std::abs(std::abs(p.z[0]) - std::abs(q.z[0])) < 0.1 ||
            std::abs(p.t - q.t) < 0.1)
            continue;
        CHECK(std::abs(p_fund(p, q, 2)) < 1.0 - 1e-4);
    }
}

TEST_CASE("Folland-Stein closed form") {
    // lambda = 0 at (1,0,0): -Gamma(1/2)^2/(4 pi^2) = -1/(4 pi)
    CHECK(std::abs(k_lambda_closed_k1(1.0, 0.0, 0.0, 0.0) -
                   cplx{-1.0 / (4.0 * kPi), 0.0}) < 1e-15);
    CHECK_THROWS(k_lambda_closed_k1(0.0, 0.0, 0.0, 0.0));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const double x1 = 2.0 * u01(rng) - 1.0, x2 = 2.0 * u01(rng) - 1.0;
        const double t = 2.0 * u01(rng) - 1.0;
        if (x1 * x1 + x2 * x2 < 1e-3) continue;
        const cplx lam{1.6 * u01(rng) - 0.8, 1.6 * u01(rng) - 0.8};
        // t -> -t swaps the factors: K_lambda(x, -t) = K_{-lambda}(x, t)
        CHECK(std::abs(k_lambda_closed_k1(x1, x2, -t, lam) -
                       k_lambda_closed_k1(x1, x2, t, -lam)) < 1e-13);
        // homogeneity of degree -2 under the parabolic dilation
        const double r = 0.3 + 2.0 * u01(rng);
        CHECK(std::abs(k_lambda_closed_k1(r * x1, r * x2, r * r * t, lam) -
                       k_lambda_closed_k1(x1, x2, t, lam) / (r * r)) <
              1e-12 * std::abs(k_lambda_closed_k1(x1, x2, t, lam)));
    }
}

TEST_CASE("integral kernel: w = 0 Beta reduction") {
    std::mt19937_64 rng(8);
    for (int k = 1; k <= 3; ++k)
        for (const cplx lam : {cplx{0, 0}, cplx{0.4, 0}, cplx{-0.4, 0}, cplx{0.2, 0.3}}) {
            const auto p = rand_pt(rng);
            const BoundaryPoint q(cplx{0, 0}, 0.4);
            const auto res = k_lambda_integral(p, q, {k, 1, lam}, 1e-12);
            const cplx A = a_fund(p, q, k);
            const cplx ref = gee(lam) / (4.0 * k * kPi * kPi) *
                             principal_pow(A, -0.5 * (1.0 - lam)) *
                             principal_pow(std::conj(A), -0.5 * (1.0 + lam));
            CHECK(std::abs(res.value - ref) <= 1e-10 * std::abs(ref));
        }
}

TEST_CASE("integral kernel equals the Euler-integral closed form at k = 1") {
    std::mt19937_64 rng(9);
    for (const cplx lam : {cplx{0, 0}, cplx{0.4, 0}, cplx{-0.4, 0}, cplx{0.2, 0.3}}) {
        for (int i = 0; i < 25; ++i) {
            const auto p = rand_pt(rng), q = rand_pt(rng);
            if (std::abs(1.0 - p_fund(p, q, 1)) < 1e-3) continue;
            const auto res = k_lambda_integral(p, q, {1, 1, lam}, 1e-11);
            const cplx ref = k1_integral_closed(p, q, lam);
            CHECK(std::abs(res.value - ref) <= 1e-9 * std::abs(ref));
        }
    }
}

TEST_CASE("ratio to the Folland-Stein form is a single constant") {
    std::mt19937_64 rng(10);
    const BoundaryPoint origin(cplx{0, 0}, 0.0);
    cplx first{0, 0};
    for (int i = 0; i < 20; ++i) {
        const auto p = rand_pt(rng);
        const cplx lam{0.4, 0.0};
        const auto num = k_lambda_integral(p, origin, {1, 1, lam}, 1e-11).value;
        const cplx den =
            k_lambda_closed_k1(p.z[0].real(), p.z[0].imag(), p.t, lam);
        const cplx ratio = num / den;
        if (i == 0) first = ratio;
        CHECK(std::abs(ratio - first) <= 1e-9 * std::abs(first));
    }
    MESSAGE("measured normalization constant: " << first.real() << " + "
                                                << first.imag() << "i");
}

TEST_CASE("k0 kernel") {
    std::mt19937_64 rng(11);
    // k = 1, w = 0: 1/(4 pi |A|), real
    for (int i = 0; i < 20; ++i) {
        const auto p = rand_pt(rng);
        const BoundaryPoint q(cplx{0, 0}, -0.3);
        const auto res = k0_integral(p, q, 1, 1e-12);
        const double ref = 1.0 / (4.0 * kPi * std::abs(a_fund(p, q, 1)));
        CHECK(std::abs(res.value.real() - ref) <= 1e-10 * ref);
        CHECK(std::abs(res.value.imag()) <= 1e-10 * ref);
    }
    // agreement with the lambda = 0 integral kernel for k in {1,2,3}
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < 10; ++i) {
            const auto p = rand_pt(rng), q = rand_pt(rng);
            if (std::abs(1.0 - p_fund(p, q, k)) < 1e-3) continue;
            const auto a = k0_integral(p, q, k, 1e-12);
            const auto b = k_lambda_integral(p, q, {k, 1, cplx{0, 0}}, 1e-11);
            CHECK(std::abs(a.value - b.value) <= 1e-9 * std::abs(a.value));
        }
    // dilation homogeneity at lambda = 0: K0(delta_r p, delta_r q) = r^{-2k} K0
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < 10; ++i) {
            const auto p = rand_pt(rng), q = rand_pt(rng);
            if (std::abs(1.0 - p_fund(p, q, k)) < 1e-3) continue;
            const double r = 0.5 + 2.0 * u01(rng);
            const BoundaryPoint pr(r * p.z[0], std::pow(r, 2.0 * k) * p.t);
            const BoundaryPoint qr(r * q.z[0], std::pow(r, 2.0 * k) * q.t);
            const auto a = k0_integral(p, q, k, 1e-11);
            const auto b = k0_integral(pr, qr, k, 1e-11);
            CHECK(std::abs(b.value - a.value / std::pow(r, 2.0 * k)) <=
                  1e-8 * std::abs(a.value));
        }
}

TEST_CASE("kernel symmetries") {
    std::mt19937_64 rng(12);
    for (int k = 1; k <= 2; ++k)
        for (const cplx lam : {cplx{0.3, 0.0}, cplx{0.2, 0.3}})
            for (int i = 0; i < 8; ++i) {
                const auto p = rand_pt(rng), q = rand_pt(rng);
                if (std::abs(1.0 - p_fund(p, q, k)) < 1e-3) continue;
                const auto base = k_lambda_integral(p, q, {k, 1, lam}, 1e-11).value;
                // reflected configuration with negated lambda gives the same value
                const BoundaryPoint pc(std::conj(p.z[0]), q.t);
                const BoundaryPoint qc(std::conj(q.z[0]), p.t);
                const auto refl =
                    k_lambda_integral(pc, qc, {k, 1, -lam}, 1e-11).value;
                CHECK(std::abs(refl - base) <= 1e-9 * std::abs(base));
                // complex conjugation maps lambda to -conj(lambda)
                const auto conj_lam =
                    k_lambda_integral(p, q, {k, 1, -std::conj(lam)}, 1e-11).value;
                CHECK(std::abs(std::conj(base) - conj_lam) <= 1e-9 * std::abs(base));
            }
}

TEST_CASE("gauss-jacobi cross-check of one axis integral at real lambda") {
    const double lam = 0.4;
    const cplx P{0.3, 0.4};
    const auto ts = tanh_sinh_01(-0.5 * (1.0 + lam), -0.5 * (1.0 - lam),
                                 [P](double s) { return 1.0 / (1.0 - P * s); }, 1e-13);
    const auto rule = gauss_jacobi_rule(200, -0.5 * (1.0 + lam), -0.5 * (1.0 - lam));
    cplx gj{0, 0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        gj += rule.weights[i] / (1.0 - P * rule.nodes[i]);
    CHECK(std::abs(gj - ts.value) <= 1e-10 * std::abs(ts.value));
}

TEST_CASE("refusals") {
    const BoundaryPoint p(cplx{1, 0}, 0.0);
    CHECK_THROWS(k_lambda_integral(p, p, {1, 1, cplx{0, 0}}));   // diagonal
    CHECK_THROWS(k_lambda_integral(p, p, {1, 1, cplx{1.2, 0}})); // Re lambda
    CHECK_THROWS(k0_integral(p, p, 1));
}
