#include <gtest/gtest.h>

#include "lowmach/benchmarks.hpp"
#include "lowmach/diagnostics.hpp"
#include "test_support.hpp"

using namespace lowmach;
using namespace lowmach::test;

namespace {
const double kD1 = std::sin(kPi / 4) / (kPi / 4);
}

TEST(Vorticity, StencilExamples) {
    const Grid g = periodic8();
    const VectorField u(ScalarField(g), sample(g, [](double x, double) { return std::sin(x); }));
    EXPECT_NEAR(max_diff(vorticity(u, {}), kD1 * sample(g, [](double x, double) { return std::cos(x); })), 0.0, 1e-15);
    EXPECT_EQ(vorticity(VectorField(g, 1.0, -3.0), {}).max_abs(), 0.0);
}

TEST(Vorticity, ShearLayerProfileIsSecondOrder) {
    const BenchmarkSpec spec = BenchmarkSpec::preset("thick_shear");
    auto err = [&](int n) {
        const Grid g = benchmark_grid(spec, n);
        const double rho = spec.rho_s;
        const ScalarField exact = sample(g, [&](double, double y) {
            const double s = y <= kPi ? 1.0 / std::cosh((y - kPi / 2) / rho) : 1.0 / std::cosh((1.5 * kPi - y) / rho);
            return (y <= kPi ? -1.0 : 1.0) * s * s / rho;
        });
        // u2 = delta sin x contributes delta cos x to the vorticity.
        const ScalarField du2 = sample(g, [&](double x, double) { return spec.delta * std::cos(x); });
        return max_diff(vorticity(initial_velocity(spec, g), {}), exact + du2);
    };
    EXPECT_NEAR(std::log2(err(128) / err(256)), 2.0, 0.2);
}

TEST(Vorticity, CurlOfGradientVanishes) {
    const Grid g = make_grid(32, 32, 2 * kPi, 2 * kPi);
    std::mt19937_64 rng(4);
    const ScalarField phi = random_smooth(g, rng);
    for (SpatialOrder o : {SpatialOrder::baseline(), SpatialOrder::high_order()})
        EXPECT_LE(vorticity(central_grad(phi, o), o).max_abs(), 1e-12 * phi.max_abs());
}

TEST(Divergence, Examples) {
    const Grid g = periodic8();
    EXPECT_NEAR(divergence_linf(VectorField(sample(g, [](double x, double) { return std::sin(x); }), ScalarField(g)), {}),
                kD1, 1e-15);
    EXPECT_NEAR(kD1, 0.9003163, 1e-7);
    EXPECT_EQ(divergence_linf(VectorField(g, 2.0, 3.0), {}), 0.0);
    for (const char* name : {"thick_shear", "thin_shear", "kelvin_helmholtz"}) {
        const BenchmarkSpec spec = BenchmarkSpec::preset(name);
        const Grid bg = benchmark_grid(spec, 64);
        for (SpatialOrder o : {SpatialOrder::baseline(), SpatialOrder::high_order()})
            EXPECT_EQ(divergence_linf(initial_velocity(spec, bg), o), 0.0) << name;
    }
}

TEST(ErrorNorms, InjectionOfSameFieldIsZero) {
    const Grid fine = make_grid(32, 32, 2 * kPi, 2 * kPi);
    const Grid coarse = make_grid(8, 8, 2 * kPi, 2 * kPi);
    const auto f = [](double x, double y) { return std::sin(x) * std::cos(3 * y); };
    const ErrorTriple e = error_norms(sample(coarse, f), sample(fine, f));
    EXPECT_EQ(e.l1, 0.0);
    EXPECT_EQ(e.l2, 0.0);
    EXPECT_EQ(e.linf, 0.0);
    EXPECT_EQ(max_diff(restrict_injection(sample(fine, f), coarse), sample(coarse, f)), 0.0);
}

TEST(ErrorNorms, ConstantOffset) {
    const Grid fine = make_grid(16, 16, 2 * kPi, 2 * kPi);
    const Grid coarse = make_grid(8, 8, 2 * kPi, 2 * kPi);
    const ErrorTriple e = error_norms(ScalarField(coarse, 0.5), ScalarField(fine, 0.0));
    EXPECT_NEAR(e.linf, 0.5, 1e-15);
    EXPECT_NEAR(e.l1, 0.5 * 4 * kPi * kPi, 1e-12);
    EXPECT_NEAR(e.l2, 0.5 * 2 * kPi, 1e-12);
}

TEST(ErrorNorms, RejectsNonNestedGrids) {
    EXPECT_THROW(error_norms(ScalarField(make_grid(12, 12, 1, 1)), ScalarField(make_grid(16, 16, 1, 1))),
                 std::invalid_argument);
    EXPECT_THROW(error_norms(ScalarField(make_grid(8, 8, 1, 1)), ScalarField(make_grid(16, 16, 2, 1))),
                 std::invalid_argument);
}

TEST(ObservedOrder, PublishedTableValues) {
    EXPECT_NEAR(observed_order(0.0039, 9.0288e-4), 2.1069, 0.02);
    EXPECT_NEAR(observed_order(0.0183, 0.0123), 0.5734, 0.002);
    EXPECT_EQ(observed_order(0.25, 0.25), 0.0);
    EXPECT_DOUBLE_EQ(observed_order(0.3, 0.1), -observed_order(0.1, 0.3));
    EXPECT_THROW(observed_order(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(observed_order(1.0, -1.0), std::invalid_argument);
}

TEST(Integrals, KineticEnergyAndMeanMomentum) {
    const Grid g = make_grid(8, 8, 2 * kPi, 2 * kPi);
    const VectorField u(g, 1.0, 2.0);
    EXPECT_NEAR(kinetic_energy(u), 0.5 * 5.0 * 4 * kPi * kPi, 1e-12);
    EXPECT_EQ(mean_momentum(u), (Vec2{1.0, 2.0}));
}
