#include "lowmach/helmholtz.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lowmach {

namespace {

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

struct HelmholtzSolver::Impl {
    Grid grid;
    CentralOrder order;
    int nxc;  // complex columns of the r2c layout
    std::unique_ptr<double, FftwFree> real;
    std::unique_ptr<fftw_complex, FftwFree> spec;
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
    std::vector<double> symbol_x;
    std::vector<double> symbol_y;

    Impl(const Grid& g, CentralOrder o) : grid(g), order(o), nxc(g.nx / 2 + 1) {
        const std::size_t n_real = g.size();
        const std::size_t n_spec = static_cast<std::size_t>(g.ny) * static_cast<std::size_t>(nxc);
        real.reset(static_cast<double*>(fftw_malloc(sizeof(double) * n_real)));
        spec.reset(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_spec)));
        if (!real || !spec) throw std::bad_alloc();
        // Row-major with x fastest: n0 = ny, n1 = nx.
        forward = fftw_plan_dft_r2c_2d(g.ny, g.nx, real.get(), spec.get(), FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_2d(g.ny, g.nx, spec.get(), real.get(), FFTW_ESTIMATE);
        if (!forward || !backward) throw std::runtime_error("HelmholtzSolver: FFTW planning failed");
        symbol_x.resize(static_cast<std::size_t>(nxc));
        for (int k = 0; k < nxc; ++k) {
            symbol_x[static_cast<std::size_t>(k)] =
                laplacian_symbol_1d(2.0 * std::numbers::pi * k / g.nx, g.dx, order);
        }
        symbol_y.resize(static_cast<std::size_t>(g.ny));
        for (int k = 0; k < g.ny; ++k) {
            symbol_y[static_cast<std::size_t>(k)] =
                laplacian_symbol_1d(2.0 * std::numbers::pi * k / g.ny, g.dy, order);
        }
    }

    ~Impl() {
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
    }

    // Solves (L - lambda) x = b; b must already be mean-free when lambda = 0.
    void apply_inverse(const ScalarField& b, double lambda, ScalarField& x) {
        std::copy(b.values().begin(), b.values().end(), real.get());
        fftw_execute(forward);
        const double scale = 1.0 / static_cast<double>(grid.size());
        fftw_complex* s = spec.get();
        for (int j = 0; j < grid.ny; ++j) {
            for (int i = 0; i < nxc; ++i) {
                const std::size_t k = static_cast<std::size_t>(j) * static_cast<std::size_t>(nxc) + static_cast<std::size_t>(i);
                const double d = symbol_x[static_cast<std::size_t>(i)] + symbol_y[static_cast<std::size_t>(j)] - lambda;
                if (i == 0 && j == 0 && lambda == 0.0) {
                    s[k][0] = 0.0;
                    s[k][1] = 0.0;
                } else {
                    s[k][0] *= scale / d;
                    s[k][1] *= scale / d;
                }
            }
        }
        fftw_execute(backward);
        std::copy(real.get(), real.get() + grid.size(), x.values().begin());
    }
};

HelmholtzSolver::HelmholtzSolver(const Grid& grid, CentralOrder order) : impl_(std::make_unique<Impl>(grid, order)) {}
HelmholtzSolver::~HelmholtzSolver() = default;
HelmholtzSolver::HelmholtzSolver(HelmholtzSolver&&) noexcept = default;
HelmholtzSolver& HelmholtzSolver::operator=(HelmholtzSolver&&) noexcept = default;

const Grid& HelmholtzSolver::grid() const { return impl_->grid; }
CentralOrder HelmholtzSolver::order() const { return impl_->order; }

namespace {

ScalarField apply_operator(const ScalarField& theta, double lambda, CentralOrder order) {
    SpatialOrder so;
    so.central = order;
    ScalarField out = laplacian(theta, so);
    out.axpy(-lambda, theta);
    return out;
}

}  // namespace

HelmholtzResult HelmholtzSolver::solve(const ScalarField& rhs, double lambda) {
    require_same_grid(impl_->grid, rhs.grid(), "HelmholtzSolver::solve");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("Helmholtz lambda must be finite and >= 0");
    if (!rhs.all_finite()) throw std::domain_error("Helmholtz right-hand side contains non-finite values");

    HelmholtzResult result;
    ScalarField b = rhs;
    if (lambda == 0.0) {
        result.removed_mean = b.mean();
        for (auto& x : b.values()) x -= result.removed_mean;
    }
    result.theta = ScalarField(impl_->grid);
    impl_->apply_inverse(b, lambda, result.theta);

    // One refinement step when round-off leaves the residual above the contract.
    const double tol = 1e-12 * std::max(1.0, b.max_abs());
    ScalarField r = b - apply_operator(result.theta, lambda, impl_->order);
    if (r.max_abs() > tol) {
        if (lambda == 0.0) {
            const double m = r.mean();
            for (auto& x : r.values()) x -= m;
        }
        ScalarField correction(impl_->grid);
        impl_->apply_inverse(r, lambda, correction);
        result.theta += correction;
    }
    if (lambda == 0.0) {
        const double m = result.theta.mean();
        for (auto& x : result.theta.values()) x -= m;
    }
    return result;
}

HelmholtzResult solve(const HelmholtzProblem& problem) {
    HelmholtzSolver solver(problem.rhs.grid(), problem.order.central);
    return solver.solve(problem.rhs, problem.lambda);
}

double residual_norm(const ScalarField& theta, const HelmholtzProblem& problem) {
    require_same_grid(theta.grid(), problem.rhs.grid(), "residual_norm");
    return (apply_operator(theta, problem.lambda, problem.order.central) - problem.rhs).max_abs();
}

}  // namespace lowmach
