#include <benchmark/benchmark.h>

#include "latgon/body.hpp"
#include "latgon/lattice.hpp"
#include "latgon/minimizer.hpp"
#include "latgon/variational.hpp"

namespace {

using namespace latgon;

ConvexBody hexagon_body() {
    return scale_to_unit_area(ConvexBody::polygon(
        {{2.0, 0.0}, {1.0, 1.5}, {-1.0, 1.2}, {-1.8, 0.0}, {-0.8, -1.4}, {1.2, -1.3}}));
}

void BM_NormEvalPolygon(benchmark::State& state) {
    const ConvexBody body = hexagon_body();
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_eval(body, {x, 1.0 - x}));
        x = x < 1.0 ? x + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_NormEvalPolygon);

void BM_NormEvalEllipse(benchmark::State& state) {
    const ConvexBody body = ConvexBody::ellipse_focus(1.0, {0.4, 0.2});
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_eval(body, {x, 1.0 - x}));
        x = x < 1.0 ? x + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_NormEvalEllipse);

void BM_ToRadial(benchmark::State& state) {
    const ConvexBody body = hexagon_body();
    for (auto _ : state)
        benchmark::DoNotOptimize(to_radial(body, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ToRadial)->Arg(2048)->Arg(8192);

void BM_SolveVP(benchmark::State& state) {
    const ConvexBody body = ConvexBody::ellipse_focus(1.0, {0.4, 0.15});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_vp(body, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SolveVP)->Arg(1024)->Arg(2048)->Arg(8192);

void BM_CountPrimitivePoints(benchmark::State& state) {
    const double r = static_cast<double>(state.range(0));
    const std::vector<Vec2> square{{-r, -r}, {r, -r}, {r, r}, {-r, r}};
    for (auto _ : state) benchmark::DoNotOptimize(count_primitive_points(square));
}
BENCHMARK(BM_CountPrimitivePoints)->Arg(50)->Arg(200);

void BM_GreedyPolygon(benchmark::State& state) {
    const ConvexBody body = hexagon_body();
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_polygon(body, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GreedyPolygon)->Arg(100)->Arg(1000);

void BM_ShapeGuidedPolygon(benchmark::State& state) {
    const ConvexBody body = hexagon_body();
    const VPSolution sol = solve_vp(body, 1024);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            shape_guided_polygon(body, sol.r, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ShapeGuidedPolygon)->Arg(400)->Arg(1600);

void BM_ExactMinimizer(benchmark::State& state) {
    const ConvexBody body = hexagon_body();
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_minimizer(body, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExactMinimizer)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
