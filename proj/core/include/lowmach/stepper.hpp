#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lowmach/helmholtz.hpp"
#include "lowmach/imex.hpp"
#include "lowmach/state.hpp"
#include "lowmach/stencil.hpp"

namespace lowmach {

/// Either a fixed dt, or dt = cfl * min(dx, dy). Never depends on epsilon.
struct StepControls {
    std::optional<double> dt;
    double cfl = 0.4;

    double resolve(const Grid& grid) const;
    void validate() const;
};

/// Thrown when a stage produces non-finite values. `stage` is 1-based.
class StepFailure : public std::runtime_error {
public:
    StepFailure(int stage, const std::string& what);
    int stage() const { return stage_; }

private:
    int stage_;
};

/// Stage values of one step and the explicit operator evaluations that later
/// stages reuse. Index j is zero-based.
struct StageWorkspace {
    std::vector<VectorField> u;
    std::vector<ScalarField> theta;
    std::vector<VectorField> v;
    std::vector<ScalarField> q;

    /// (tau/4) D0_LF.B(u^j) + tau eps^2 D_LF q^j - F(u^j), the explicit v forcing.
    std::vector<VectorField> explicit_v;
    /// D0 . u^j
    std::vector<ScalarField> div_u;
    /// D0_LF . v^j
    std::vector<ScalarField> div0_v;
    /// sum_{j<=i} a_ij v^j, shared by the theta and u stages of stage i.
    std::vector<VectorField> v_combined;

    void reset(const Grid& grid, int stages);
};

/// Runs Algorithm-1 stages (v, theta, u, q) for a GSA tableau. The epsilon = 0
/// (or tau * epsilon^2 = 0) relaxation branch is evaluated as the exact
/// algebraic limit; epsilon = 0 turns the Helmholtz stage into a zero-mean
/// Poisson solve.
class Stepper {
public:
    Stepper(const Grid& grid, IMEXTableau tableau, PhysicsParams params, SpatialOrder order = {},
            LFParams lf = {});

    const Grid& grid() const { return grid_; }
    const IMEXTableau& tableau() const { return tableau_; }
    const PhysicsParams& params() const { return params_; }
    SpatialOrder order() const { return order_; }
    const LFParams& lf() const { return lf_; }

    /// Stage-level interface: begin_step, then for i = 0..s-1 stage_v, stage_theta,
    /// stage_u, stage_q in that order.
    void begin_step(const MomentState& state_n, double dt);
    void stage_v(int i);
    void stage_theta(int i);
    void stage_u(int i);
    void stage_q(int i);
    const StageWorkspace& workspace() const { return ws_; }

    /// One full step; returns the last internal stage with time advanced by dt.
    MomentState advance(const MomentState& state, double dt);

private:
    double a(int i, int j) const { return tableau_.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return tableau_.atil[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool copies_time_n(int i) const { return i == 0 && a(0, 0) == 0.0; }
    double relax() const { return params_.tau * params_.epsilon * params_.epsilon; }
    void cache_explicit(int i);
    void check(int i, bool finite, const char* field) const;

    Grid grid_;
    IMEXTableau tableau_;
    PhysicsParams params_;
    SpatialOrder order_;
    LFParams lf_;
    HelmholtzSolver helmholtz_;

    const MomentState* state_n_ = nullptr;
    double dt_ = 0.0;
    ScalarField div_u_n_;
    StageWorkspace ws_;
};

MomentState advance(const MomentState& state, const IMEXTableau& tableau, const PhysicsParams& params,
                    const StepControls& controls, SpatialOrder order = {}, LFParams lf = {});

/// Projection-form step of the incompressible limit, assembled directly from
/// the limit momentum and pressure equations rather than from the relaxation
/// stages. v is recovered from its limit recursion; theta is returned in the
/// gauge mean(p) = 0. Used as the epsilon -> 0 oracle for Stepper.
class LimitStepper {
public:
    LimitStepper(const Grid& grid, IMEXTableau tableau, double tau, SpatialOrder order = {}, LFParams lf = {});

    MomentState advance(const MomentState& state, double dt);

private:
    Grid grid_;
    IMEXTableau tableau_;
    double tau_;
    SpatialOrder order_;
    LFParams lf_;
    HelmholtzSolver poisson_;
};

MomentState advance_limit(const MomentState& state, const IMEXTableau& tableau, double tau,
                          const StepControls& controls, SpatialOrder order = {}, LFParams lf = {});

}  // namespace lowmach
