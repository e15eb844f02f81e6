#include <benchmark/benchmark.h>

#include <complex>

#include "modelcr/fundamental.hpp"
#include "modelcr/geodesics.hpp"
#include "modelcr/geometry.hpp"
#include "modelcr/special.hpp"
#include "modelcr/szego.hpp"

using namespace modelcr;

namespace {

const BoundaryPoint kP(cplx{0.8, -0.3}, 0.4);
const BoundaryPoint kQ(cplx{-0.2, 0.5}, -0.7);

void BM_gamma_complex(benchmark::State& state) {
    cplx z{0.7, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(gamma_complex(z));
}
BENCHMARK(BM_gamma_complex);

void BM_tanh_sinh_nodes(benchmark::State& state) {
    const double h = 0.5 / static_cast<double>(1 << state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tanh_sinh_nodes(h));
}
BENCHMARK(BM_tanh_sinh_nodes)->Arg(3)->Arg(5);

void BM_closed_form_k1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            k_lambda_closed_k1(0.8, -0.3, 0.4, cplx{0.4, 0.0}));
}
BENCHMARK(BM_closed_form_k1);

void BM_kernel_integral(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const KernelParams params{k, 1, cplx{0.4, 0.0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(k_lambda_integral(kP, kQ, params, 1e-10));
}
BENCHMARK(BM_kernel_integral)->Arg(1)->Arg(2);

void BM_k0_integral(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(k0_integral(kP, kQ, k, 1e-10));
}
BENCHMARK(BM_k0_integral)->Arg(1)->Arg(2)->Arg(3);

void BM_szego_boundary(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(szego_boundary(kP, kQ, 1, k));
}
BENCHMARK(BM_szego_boundary)->Arg(1)->Arg(3);

void BM_quasi_metric(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(quasi_metric(kP, kQ, k));
}
BENCHMARK(BM_quasi_metric)->Arg(1)->Arg(3);

void BM_solve_geodesics_k1(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_geodesics_k1(0.6, -0.2, t));
}
BENCHMARK(BM_solve_geodesics_k1)->Arg(1)->Arg(10)->Arg(100);

void BM_cc_distance_k1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cc_distance_k1(0.6, -0.2, 4.0));
}
BENCHMARK(BM_cc_distance_k1);

}  // namespace

BENCHMARK_MAIN();
