#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bergman/fourier.hpp"
#include "bergman/grid.hpp"
#include "bergman/grid_function.hpp"
#include "bergman/norms.hpp"
#include "bergman/paley_wiener.hpp"
#include "bergman/space.hpp"
#include "bergman/special.hpp"
#include "bergman/toeplitz.hpp"

using namespace bergman;

namespace {

const HalfPlaneGrid& bench_grid() {
    static const HalfPlaneGrid g = make_grid(20.0, 512, 20.0, 256, 2.0);
    return g;
}

std::vector<double> bench_nodes() {
    const HalfPlaneGrid& g = bench_grid();
    const double dxi = std::numbers::pi / g.x_halfwidth;
    std::vector<double> nodes;
    for (std::size_t m = 1; m + m < g.nx(); ++m)
        nodes.push_back(double(m) * dxi);
    return nodes;
}

const BoundaryDensity& bench_density() {
    static const BoundaryDensity phi =
        sample_density({DensityForm::Kind::bump, 1.0, 4.0, {}}, bench_nodes());
    return phi;
}

const SpaceParams& bench_params() {
    static const SpaceParams prm = SpaceParams::make(1.0, 2.0, 2.0);
    return prm;
}

const GridFunction& bench_field() {
    static const GridFunction f =
        pw_synthesize(bench_density(), bench_params(), bench_grid());
    return f;
}

const GridFunction& bench_fourier_field() {
    static const GridFunction g = u1_forward(bench_field());
    return g;
}

void BM_u1_roundtrip(benchmark::State& state) {
    const GridFunction& f = bench_field();
    for (auto _ : state) {
        GridFunction back = u1_inverse(u1_forward(f));
        benchmark::DoNotOptimize(back.values.data());
    }
}
BENCHMARK(BM_u1_roundtrip)->Unit(benchmark::kMillisecond);

void BM_u2_forward(benchmark::State& state) {
    const GridFunction& g = bench_fourier_field();
    for (auto _ : state) {
        GridFunction flat = u2_forward(g, bench_params());
        benchmark::DoNotOptimize(flat.values.data());
    }
}
BENCHMARK(BM_u2_forward)->Unit(benchmark::kMillisecond);

void BM_pw_synthesize(benchmark::State& state) {
    for (auto _ : state) {
        GridFunction f = pw_synthesize(bench_density(), bench_params(), bench_grid());
        benchmark::DoNotOptimize(f.values.data());
    }
}
BENCHMARK(BM_pw_synthesize)->Unit(benchmark::kMillisecond);

void BM_pw_analyze(benchmark::State& state) {
    const GridFunction& f = bench_field();
    for (auto _ : state) {
        BoundaryDensity phi = pw_analyze(f, bench_params());
        benchmark::DoNotOptimize(phi.values.data());
    }
}
BENCHMARK(BM_pw_analyze)->Unit(benchmark::kMillisecond);

void BM_mixed_norm(benchmark::State& state) {
    const GridFunction& g = bench_fourier_field();
    for (auto _ : state)
        benchmark::DoNotOptimize(mixed_norm(g, bench_params()));
}
BENCHMARK(BM_mixed_norm)->Unit(benchmark::kMillisecond);

void BM_gamma_quadrature(benchmark::State& state) {
    const VerticalSymbol a = VerticalSymbol::exponential(1.0);
    const SpaceParams prm = bench_params();
    for (auto _ : state)
        for (int i = 0; i < 25; ++i)
            benchmark::DoNotOptimize(gamma_quadrature(a, prm, std::pow(10.0, -3.0 + 0.25 * i)));
}
BENCHMARK(BM_gamma_quadrature);

void BM_beta_inversion(benchmark::State& state) {
    const PsiBetaContext ctx(bench_params(), 2.0);
    for (auto _ : state) {
        double t = 1e-3;
        for (double y = 0.1; y < 10.0; y += 0.1) {
            t = ctx.beta_from(y, t);
            benchmark::DoNotOptimize(t);
        }
    }
}
BENCHMARK(BM_beta_inversion);

} // namespace

BENCHMARK_MAIN();
