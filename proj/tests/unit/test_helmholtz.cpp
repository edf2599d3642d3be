#include <gtest/gtest.h>

#include "lowmach/helmholtz.hpp"
#include "test_support.hpp"

using namespace lowmach;
using namespace lowmach::test;

namespace {

const double kH8 = kPi / 4;
const double kD2 = 2 * (1 - std::cos(kH8)) / (kH8 * kH8);

ScalarField cosx(const Grid& g) { return sample(g, [](double x, double) { return std::cos(x); }); }

ScalarField shifted(const ScalarField& f, int si, int sj) {
    const Grid& g = f.grid();
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out(i, j) = f(i - si, j - sj);
    return out;
}

}  // namespace

TEST(Helmholtz, ZeroRhs) {
    const Grid g = periodic8();
    const HelmholtzResult r = solve({ScalarField(g), 1.0, {}});
    EXPECT_EQ(r.theta.max_abs(), 0.0);
}

TEST(Helmholtz, EigenfunctionWithShift) {
    const Grid g = periodic8();
    const HelmholtzResult r = solve({cosx(g), 1.0, {}});
    EXPECT_NEAR(max_diff(r.theta, (1.0 / (-kD2 - 1.0)) * cosx(g)), 0.0, 1e-14);
    EXPECT_NEAR(r.theta(0, 0), -0.5129149, 1e-7);
}

TEST(Helmholtz, PoissonEigenfunctionHasZeroMean) {
    const Grid g = periodic8();
    const HelmholtzResult r = solve({cosx(g), 0.0, {}});
    EXPECT_NEAR(max_diff(r.theta, (-1.0 / kD2) * cosx(g)), 0.0, 1e-14);
    EXPECT_NEAR(r.theta(0, 0), -1.0530293, 1e-7);
    EXPECT_NEAR(r.theta.mean(), 0.0, 1e-15);
    EXPECT_NEAR(r.removed_mean, 0.0, 1e-15);
}

TEST(Helmholtz, PoissonReportsRemovedMean) {
    const Grid g = periodic8();
    ScalarField rhs = cosx(g);
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += 0.25;
    const HelmholtzResult r = solve({rhs, 0.0, {}});
    EXPECT_NEAR(r.removed_mean, 0.25, 1e-15);
    EXPECT_NEAR(max_diff(r.theta, (-1.0 / kD2) * cosx(g)), 0.0, 1e-14);
}

TEST(Helmholtz, ResidualNormExamples) {
    const Grid g = periodic8();
    const HelmholtzProblem p{cosx(g), 1.0, {}};
    EXPECT_DOUBLE_EQ(residual_norm(ScalarField(g), p), 1.0);
    const ScalarField exact = solve(p).theta;
    EXPECT_LE(residual_norm(exact, p), 1e-14);
    const double delta = 0.01;
    ScalarField perturbed = exact;
    perturbed.axpy(delta, cosx(g));
    EXPECT_NEAR(residual_norm(perturbed, p), delta * (kD2 + 1.0), 1e-14);
}

TEST(Helmholtz, ZeroMeanRandomRhsIsSolvedExactly) {
    std::mt19937_64 rng(2024);
    for (CentralOrder co : {CentralOrder::second, CentralOrder::fourth}) {
        const Grid g = make_grid(48, 32, 2 * kPi, 3.0);
        HelmholtzSolver solver(g, co);
        for (double lambda : {0.0, 1e-6, 1.0, 1e6}) {
            for (int trial = 0; trial < 5; ++trial) {
                ScalarField rhs = random_smooth(g, rng);
                const double m = rhs.mean();
                for (auto& x : rhs.values()) x -= m;
                const HelmholtzResult r = solver.solve(rhs, lambda);
                const HelmholtzProblem p{rhs, lambda, {UpwindOrder::first, co}};
                EXPECT_LE(residual_norm(r.theta, p), 1e-12 * std::max(1.0, rhs.max_abs())) << "lambda " << lambda;
            }
        }
    }
}

TEST(Helmholtz, ConstantModeIsMeanOverMinusLambda) {
    const Grid g = make_grid(16, 16, 2 * kPi, 2 * kPi);
    std::mt19937_64 rng(8);
    HelmholtzSolver solver(g, CentralOrder::second);
    for (double lambda : {1e-6, 1.0, 1e6}) {
        const ScalarField rhs = random_smooth(g, rng);
        const ScalarField theta = solver.solve(rhs, lambda).theta;
        EXPECT_NEAR(theta.mean(), -rhs.mean() / lambda, 1e-13 * std::abs(rhs.mean() / lambda));
    }
}

TEST(Helmholtz, NoModeMixing) {
    const Grid g = make_grid(32, 32, 2 * kPi, 2 * kPi);
    HelmholtzSolver solver(g, CentralOrder::fourth);
    for (int k : {1, 3, 7}) {
        const ScalarField rhs = sample(g, [k](double x, double y) { return std::cos(k * x) * std::sin(2 * y); });
        const double sym = laplacian_symbol_1d(2 * kPi * k / g.nx, g.dx, CentralOrder::fourth) +
                           laplacian_symbol_1d(2 * kPi * 2 / g.ny, g.dy, CentralOrder::fourth);
        const ScalarField theta = solver.solve(rhs, 0.5).theta;
        EXPECT_LE(max_diff(theta, (1.0 / (sym - 0.5)) * rhs), 1e-12 * theta.max_abs());
    }
}

TEST(Helmholtz, ShiftEquivariance) {
    const Grid g = make_grid(16, 24, 2 * kPi, 2.0);
    std::mt19937_64 rng(5);
    const ScalarField rhs = random_smooth(g, rng);
    HelmholtzSolver solver(g, CentralOrder::second);
    const ScalarField a = solver.solve(shifted(rhs, 3, -5), 2.0).theta;
    const ScalarField b = shifted(solver.solve(rhs, 2.0).theta, 3, -5);
    EXPECT_LE(max_diff(a, b), 1e-13 * b.max_abs());
}

TEST(Helmholtz, RejectsBadInput) {
    const Grid g = periodic8();
    EXPECT_THROW(solve({cosx(g), -1.0, {}}), std::invalid_argument);
    ScalarField bad = cosx(g);
    bad[5] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(solve({bad, 1.0, {}}), std::domain_error);
    HelmholtzSolver solver(g, CentralOrder::second);
    EXPECT_THROW(solver.solve(ScalarField(make_grid(16, 8, 1, 1)), 1.0), std::invalid_argument);
}

TEST(Helmholtz, SolverIsMovable) {
    const Grid g = periodic8();
    HelmholtzSolver a(g, CentralOrder::second);
    HelmholtzSolver b(std::move(a));
    EXPECT_NEAR(b.solve(cosx(g), 1.0).theta(0, 0), -0.5129149, 1e-7);
    EXPECT_EQ(b.grid(), g);
}
