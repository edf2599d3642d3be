#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "lowmach/benchmarks.hpp"
#include "lowmach/helmholtz.hpp"
#include "lowmach/stencil.hpp"
#include "lowmach/stepper.hpp"

namespace {

using namespace lowmach;

VectorField smooth_field(const Grid& g) {
    VectorField u(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            u.c1(i, j) = std::sin(g.x(i)) * std::cos(2.0 * g.y(j));
            u.c2(i, j) = std::cos(g.x(i) + g.y(j));
        }
    }
    return u;
}

Grid square(int n) { return make_grid(n, n, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi); }

void BM_LfDivB(benchmark::State& state) {
    const Grid g = square(static_cast<int>(state.range(0)));
    const SpatialOrder order = state.range(1) == 3 ? SpatialOrder::high_order() : SpatialOrder::baseline();
    const VectorField v = smooth_field(g);
    const VectorField u = 0.5 * v;
    for (auto _ : state) benchmark::DoNotOptimize(lf_div_B(v, u, LFParams{}, order));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_LfDivB)->ArgsProduct({{64, 128, 256}, {1, 3}});

void BM_DoubleDivB(benchmark::State& state) {
    const Grid g = square(static_cast<int>(state.range(0)));
    const VectorField v = smooth_field(g);
    for (auto _ : state) benchmark::DoNotOptimize(double_div_B(v, SpatialOrder::high_order()));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_DoubleDivB)->Arg(128)->Arg(256);

void BM_Helmholtz(benchmark::State& state) {
    const Grid g = square(static_cast<int>(state.range(0)));
    HelmholtzSolver solver(g, CentralOrder::fourth);
    ScalarField rhs = smooth_field(g).c1;
    const double lambda = static_cast<double>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(solver.solve(rhs, lambda));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Helmholtz)->ArgsProduct({{64, 128, 256}, {0, 1}});

void BM_Step(benchmark::State& state) {
    const auto spec = BenchmarkSpec::preset("thick_shear");
    const Grid g = benchmark_grid(spec, static_cast<int>(state.range(0)));
    const bool high = state.range(1) == 2;
    const IMEXTableau t = builtin_tableau(high ? "second_order_gsa" : "euler_gsa");
    const SpatialOrder order = high ? SpatialOrder::high_order() : SpatialOrder::baseline();
    const PhysicsParams params{1e-6, 0.0};
    Stepper stepper(g, t, params, order);
    const MomentState s = initialize_state(g, initial_velocity(spec, g), params, InitMode::well_prepared, order);
    const double dt = StepControls{}.resolve(g);
    for (auto _ : state) benchmark::DoNotOptimize(stepper.advance(s, dt));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Step)->ArgsProduct({{64, 128, 256}, {1, 2}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
