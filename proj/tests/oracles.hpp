// Test-only oracles, independent of the library implementations:
// a Spouge-series gamma in extended precision, an adaptive Simpson
// integrator, and constants frozen from an arbitrary-precision run.
#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

// Gamma via the Spouge series with a = 17, evaluated in long double.
// Independent of the Lanczos implementation under test.
inline std::complex<long double> gamma_spouge(std::complex<long double> z) {
    const int a = 17;
    if (z.real() < 0.5L) {
        const long double pi = 3.141592653589793238462643383279503L;
        return pi / (std::sin(pi * z) * gamma_spouge(1.0L - z));
    }
    z -= 1.0L;
    std::complex<long double> acc = std::sqrt(2.0L * 3.141592653589793238462643383279503L);
    long double fact = 1.0L;
    for (int k = 1; k < a; ++k) {
        const long double ck =
            std::pow((long double)(a - k), k - 0.5L) * std::exp((long double)(a - k)) / fact;
        acc += ((k % 2 == 1) ? ck : -ck) / (z + (long double)k);
        fact *= (long double)k;
    }
    return acc * std::pow(z + (long double)a, z + 0.5L) * std::exp(-(z + (long double)a));
}

inline std::complex<double> gamma_ref(std::complex<double> z) {
    const auto g = gamma_spouge(std::complex<long double>(z.real(), z.imag()));
    return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

// plain adaptive Simpson on [a, b]
inline double simpson_adaptive(const std::function<double(double)>& f, double a,
                               double b, double tol, int depth = 0) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    auto simp = [](double fa, double fm, double fb, double h) {
        return h / 6.0 * (fa + 4.0 * fm + fb);
    };
    const double whole = simp(fa, fm, fb, b - a);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double left = simp(fa, f(lm), fm, m - a);
    const double right = simp(fm, f(rm), fb, b - m);
    if (depth > 40 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_adaptive(f, a, m, 0.5 * tol, depth + 1) +
           simpson_adaptive(f, m, b, 0.5 * tol, depth + 1);
}

// frozen from a 25-digit arbitrary-precision computation
inline constexpr double kQ = 1.821487985915686208864956;             // (1/4)G(1/6)/G(2/3)sqrt(pi)
inline constexpr double kModulus = 0.2588190451025207623488988;      // (sqrt2/4)(sqrt3-1)
inline constexpr double kEllipticK = 1.598142002112540144460965;     // K(kModulus)
inline constexpr double kGammaRatio = 4.11065819284404948489633;     // G(1/6)/G(2/3)
inline constexpr double kStep4Len1 = 0.9727333147549632627720823;    // d_1, k=2, t=1

}  // namespace oracle
