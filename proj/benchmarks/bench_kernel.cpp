#include <benchmark/benchmark.h>

#include "holoform/chart.hpp"
#include "holoform/gspace.hpp"
#include "holoform/sl2.hpp"

namespace {

using holoform::cplx;

void BM_Christoffels(benchmark::State& state) {
    const auto g = holoform::g_chart_metric();
    holoform::ChartPoint p{cplx(0.3, 0.1), cplx(1.2, -0.4)};
    for (auto _ : state) {
        auto gamma = holoform::christoffels(g, p);
        benchmark::DoNotOptimize(gamma);
    }
}
BENCHMARK(BM_Christoffels);

void BM_Curvature13(benchmark::State& state) {
    const auto g = holoform::g_chart_metric();
    holoform::ChartPoint p{cplx(0.3, 0.1), cplx(1.2, -0.4)};
    holoform::Coords u{cplx(1, 0), cplx(0, 0)};
    holoform::Coords v{cplx(0, 0), cplx(1, 0)};
    for (auto _ : state) {
        auto r = holoform::curvature_13(g, p, u, v, u);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Curvature13);

void BM_SectionalSl2(benchmark::State& state) {
    const auto g = holoform::sl2_group_chart();
    holoform::ChartPoint p{cplx(0.2, 0.05), cplx(-0.1, 0.3), cplx(0.15, -0.2)};
    holoform::Coords v{cplx(1, 0), cplx(0.2, -0.1), cplx(0, 0.3), cplx(0, 0)};
    holoform::Coords w{cplx(0.1, 0.4), cplx(1, 0), cplx(-0.2, 0), cplx(0, 0)};
    for (auto _ : state) {
        auto k = holoform::sectional_curvature(g, p, v, w);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_SectionalSl2);

void BM_RotPi(benchmark::State& state) {
    holoform::GeodesicLine line{holoform::BoundaryPoint::finite(cplx(0.7, -0.2)),
                                holoform::BoundaryPoint::finite(cplx(-1.1, 0.5))};
    for (auto _ : state) {
        auto a = holoform::rot_pi(line);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_RotPi);

void BM_GeodesicIntegrate(benchmark::State& state) {
    const auto g = holoform::sl2_group_chart();
    holoform::ChartPoint p{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    holoform::Coords v{cplx(0.5, 0.1), cplx(0.2, -0.3), cplx(-0.1, 0.2), cplx(0, 0)};
    for (auto _ : state) {
        auto traj = holoform::geodesic_integrate(g, p, v, 1.0, 1.0 / 64);
        benchmark::DoNotOptimize(traj);
    }
}
BENCHMARK(BM_GeodesicIntegrate);

}  // namespace

BENCHMARK_MAIN();
