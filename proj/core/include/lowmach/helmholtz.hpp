#pragma once

#include <memory>

#include "lowmach/grid.hpp"
#include "lowmach/stencil.hpp"

namespace lowmach {

/// (laplacian - lambda) theta = rhs on the periodic grid.
struct HelmholtzProblem {
    ScalarField rhs;
    double lambda = 0.0;
    SpatialOrder order{};
};

struct HelmholtzResult {
    ScalarField theta;
    /// Grid mean subtracted from rhs before a lambda = 0 solve (0 otherwise).
    double removed_mean = 0.0;
};

/// Exact solver by diagonalizing the periodic stencil in the discrete Fourier
/// basis. Owns FFTW plans for one grid; not safe for concurrent use of a single
/// instance, and construction must not race with other FFTW planning.
class HelmholtzSolver {
public:
    HelmholtzSolver(const Grid& grid, CentralOrder order);
    ~HelmholtzSolver();
    HelmholtzSolver(const HelmholtzSolver&) = delete;
    HelmholtzSolver& operator=(const HelmholtzSolver&) = delete;
    HelmholtzSolver(HelmholtzSolver&&) noexcept;
    HelmholtzSolver& operator=(HelmholtzSolver&&) noexcept;

    const Grid& grid() const;
    CentralOrder order() const;

    /// With lambda = 0 the rhs mean is removed and theta has zero mean.
    HelmholtzResult solve(const ScalarField& rhs, double lambda);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

HelmholtzResult solve(const HelmholtzProblem& problem);

/// max |(laplacian - lambda) theta - rhs|
double residual_norm(const ScalarField& theta, const HelmholtzProblem& problem);

}  // namespace lowmach
